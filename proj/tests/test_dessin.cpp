#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "heiscurve/curves.hpp"
#include "heiscurve/dessin.hpp"
#include "heiscurve/heisenberg.hpp"

using namespace heis;

TEST_CASE("the one-edge dessin") {
  PermAction trivial{1, {0}, {0}};
  Dessin d = build_dessin(trivial);
  CHECK(d.edges == 1);
  CHECK(d.black_vertices() == 1);
  CHECK(d.white_vertices() == 1);
  CHECK(d.faces() == 1);
  CHECK(dessin_genus(d) == 0);
  std::string dot = export_dot(d);
  CHECK(dot.find("b_0 -- w_0") != std::string::npos);
}

TEST_CASE("dessin of the 27-element regular action") {
  Dessin d = build_dessin_heisenberg(3);
  CHECK(d.edges == 27);
  CHECK(d.black_vertices() == 9);
  CHECK(d.white_vertices() == 9);
  CHECK(d.faces() == 9);
  CHECK(dessin_genus(d) == 1);
  for (const auto& cyc : perm_cycles(d.black)) CHECK(cyc.size() == 3);
  for (const auto& cyc : perm_cycles(d.white)) CHECK(cyc.size() == 3);
  CHECK(d.labels.size() == 27);
}

TEST_CASE("dessin of the Fermat action") {
  Heisenberg h({3, 3, 1});
  Dessin d = build_dessin(h.regular_action());
  CHECK(d.edges == 9);
  CHECK(d.black_vertices() == 3);
  CHECK(d.white_vertices() == 3);
  CHECK(d.faces() == 3);
  CHECK(dessin_genus(d) == 1);
}

TEST_CASE("dessin genus equals riemann-hurwitz genus") {
  std::vector<HeisParams> ps{{3, 3, 1}, {3, 3, 3}, {4, 4, 2},
                             {5, 5, 5}, {2, 2, 2}, {6, 4, 2}};
  for (const HeisParams& p : ps) {
    PermAction act = Heisenberg(p).regular_action();
    CHECK(dessin_genus(build_dessin(act)) == rh_genus(act).genus);
  }
  Heisenberg h({5, 5, 5});
  PermAction act = h.coset_action({h.y()});
  CHECK(dessin_genus(build_dessin(act)) == rh_genus(act).genus);
}

TEST_CASE("face count matches the cusps above 1") {
  for (long long n : {3LL, 5LL}) {
    Dessin d = build_dessin_heisenberg(n);
    CHECK(d.faces() == static_cast<std::size_t>(n * n));
  }
}

TEST_CASE("json round-trip is exact") {
  Dessin d = build_dessin_heisenberg(3);
  std::string json = export_json(d);
  Dessin back = import_json(json);
  CHECK(back == d);
  CHECK(export_json(back) == json);
  CHECK(export_dot(back) == export_dot(d));

  // unlabeled dessins round-trip too
  Dessin plain = build_dessin(Heisenberg({2, 2, 2}).regular_action());
  CHECK(import_json(export_json(plain)) == plain);
}

TEST_CASE("dot output is deterministic and well-formed") {
  Dessin d = build_dessin_heisenberg(3);
  std::string dot = export_dot(d);
  CHECK(dot == export_dot(d));
  CHECK(std::count(dot.begin(), dot.end(), '\n') ==
        static_cast<long>(2 + 9 + 9 + 27));  // braces + nodes + edges
  CHECK(dot.find("graph dessin {") == 0);
}

TEST_CASE("adjacency rules of the labeled dessin") {
  AdjacencyReport rep = adjacency_rule_check(3);
  CHECK(rep.black_rule_matches);
  CHECK(rep.white_rule_matches_truth);
  CHECK_FALSE(rep.white_rule_matches_paper);
  CHECK_FALSE(rep.relabeling_found);
  CHECK(rep.bijection_invariant_ok);

  AdjacencyReport rep5 = adjacency_rule_check(5);
  CHECK(rep5.black_rule_matches);
  CHECK(rep5.white_rule_matches_truth);
  CHECK(rep5.bijection_invariant_ok);
}
