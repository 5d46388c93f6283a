// Bipartite ribbon graphs (dessins) of the curves X_Gamma from coset
// actions: Euler-characteristic genus, DOT/JSON export, and verification
// of the edge adjacency rules for the regular Heisenberg actions.
#ifndef HEISCURVE_DESSIN_HPP
#define HEISCURVE_DESSIN_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heiscurve/perm.hpp"

namespace heis {

struct Dessin {
  std::size_t edges = 0;
  Perm black;  // pi_y: cyclic order around cusps above 0
  Perm white;  // pi_x^-1: cyclic order around cusps above infinity
  Perm face;   // image of A^-1 B
  // (a, c, b) labels when the action is the regular Heisenberg action
  std::vector<std::array<long long, 3>> labels;

  bool operator==(const Dessin&) const = default;
  std::size_t black_vertices() const;
  std::size_t white_vertices() const;
  std::size_t faces() const;
};

Dessin build_dessin(const PermAction& action);
// regular H_{N,N,N'} action with edge labels attached
Dessin build_dessin_heisenberg(long long n);

long long dessin_genus(const Dessin& d);  // V - E + F = 2 - 2g

std::string export_dot(const Dessin& d);
std::string export_json(const Dessin& d);
Dessin import_json(const std::string& text);

struct AdjacencyReport {
  long long n = 0;
  bool black_rule_matches = true;   // (a,c,b) ~ (a,c,b+1), as displayed
  bool white_rule_matches_paper = true;  // displayed (a-1, c-ab, b)
  bool white_rule_matches_truth = true;  // computed  (a-1, c+b,  b)
  // some relabeling c -> s*c + q(a,b) maps the computed rules onto the
  // displayed pair (searched exhaustively for small N)
  bool relabeling_found = false;
  std::string relabeling;
  bool bijection_invariant_ok = true;  // (b, c+ab) equal across white edges
};

AdjacencyReport adjacency_rule_check(long long n);

}  // namespace heis

#endif
