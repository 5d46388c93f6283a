#include "heiscurve/dessin.hpp"

#include <sstream>
#include <stdexcept>

#include "heiscurve/heisenberg.hpp"
#include "heiscurve/nilpotent.hpp"

#include "json.hpp"

namespace heis {

std::size_t Dessin::black_vertices() const {
  return perm_cycles(black).size();
}
std::size_t Dessin::white_vertices() const {
  return perm_cycles(white).size();
}
std::size_t Dessin::faces() const { return perm_cycles(face).size(); }

Dessin build_dessin(const PermAction& action) {
  action.validate();
  if (!action.transitive())
    throw std::invalid_argument("build_dessin: action not transitive");
  Dessin d;
  d.edges = action.degree;
  d.black = action.pi_y;
  d.white = perm_inverse(action.pi_x);
  d.face = action.pi_one();
  return d;
}

Dessin build_dessin_heisenberg(long long n) {
  LevelParams lp = LevelParams::for_level(n);
  Heisenberg h({n, n, lp.n_prime});
  Dessin d = build_dessin(h.regular_action());
  d.labels.resize(d.edges);
  for (std::size_t i = 0; i < d.edges; ++i) {
    HeisElement g = h.element_at(i);
    d.labels[i] = {g.a, g.c, g.b};
  }
  return d;
}

long long dessin_genus(const Dessin& d) {
  long long v = static_cast<long long>(d.black_vertices() + d.white_vertices());
  long long e = static_cast<long long>(d.edges);
  long long f = static_cast<long long>(d.faces());
  long long chi = v - e + f;
  if (chi % 2 != 0) throw std::logic_error("dessin_genus: odd Euler characteristic");
  return (2 - chi) / 2;
}

namespace {
std::string label_str(const std::array<long long, 3>& l) {
  std::ostringstream os;
  os << "(" << l[0] << "," << l[1] << "," << l[2] << ")";
  return os.str();
}
}  // namespace

std::string export_dot(const Dessin& d) {
  std::size_t nb = 0, nw = 0;
  std::vector<std::uint32_t> bid = orbit_ids(d.black, &nb);
  std::vector<std::uint32_t> wid = orbit_ids(d.white, &nw);
  std::ostringstream os;
  os << "graph dessin {\n";
  for (std::size_t i = 0; i < nb; ++i)
    os << "  b_" << i << " [shape=circle style=filled fillcolor=black "
       << "label=\"\" width=0.15];\n";
  for (std::size_t i = 0; i < nw; ++i)
    os << "  w_" << i << " [shape=circle style=filled fillcolor=white "
       << "label=\"\" width=0.15];\n";
  for (std::size_t e = 0; e < d.edges; ++e) {
    os << "  b_" << bid[e] << " -- w_" << wid[e];
    if (!d.labels.empty()) os << " [label=\"" << label_str(d.labels[e]) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const Dessin& d) {
  nlohmann::json j;
  j["edges"] = d.edges;
  j["black"] = d.black;
  j["white"] = d.white;
  j["face"] = d.face;
  if (!d.labels.empty()) {
    nlohmann::json ls = nlohmann::json::array();
    for (const auto& l : d.labels) ls.push_back({l[0], l[1], l[2]});
    j["labels"] = ls;
  }
  return j.dump(2) + "\n";
}

Dessin import_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Dessin d;
  d.edges = j.at("edges").get<std::size_t>();
  d.black = j.at("black").get<Perm>();
  d.white = j.at("white").get<Perm>();
  d.face = j.at("face").get<Perm>();
  if (j.contains("labels"))
    for (const auto& l : j.at("labels"))
      d.labels.push_back({l.at(0).get<long long>(), l.at(1).get<long long>(),
                          l.at(2).get<long long>()});
  return d;
}

AdjacencyReport adjacency_rule_check(long long n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("adjacency_rule_check: N odd >= 3");
  AdjacencyReport rep;
  rep.n = n;
  Heisenberg h({n, n, n});  // N odd: N' = N

  for (const HeisElement& g : h.elements()) {
    // black step: next edge around the cusp above 0 is g*y
    HeisElement gy = h.mul(g, h.y());
    if (!(gy == h.make(g.a, g.c, g.b + 1))) rep.black_rule_matches = false;

    // white step: next edge around the cusp above infinity is g*x^-1
    HeisElement gxi = h.mul(g, h.inv(h.x()));
    if (!(gxi == h.make(g.a - 1, g.c + g.b, g.b)))
      rep.white_rule_matches_truth = false;
    if (!(gxi == h.make(g.a - 1, g.c - g.a * g.b, g.b)))
      rep.white_rule_matches_paper = false;

    // both endpoints carry the same <x>-orbit invariant (b, c+ab)
    auto inv_inf = [&](const HeisElement& e) {
      return std::pair<long long, long long>(e.b, (e.c + e.a * e.b) % n);
    };
    if (inv_inf(h.make(g.a, g.c, g.b)) != inv_inf(gxi))
      rep.bijection_invariant_ok = false;
  }

  // Exhaustive relabeling search for small N: (a,c,b) -> (a, s*c + q(a,b), b)
  // with s in {1,-1} and arbitrary q : (Z/N)^2 -> Z/N.  A relabeling phi
  // reconciles the displayed rules iff for every edge g:
  //   phi(g*y)    = displayed-black(phi(g))   and
  //   phi(g*x^-1) = displayed-white(phi(g)).
  if (n == 3) {
    const long long nn = n * n;
    std::vector<long long> q(nn, 0);
    auto apply = [&](const HeisElement& g, long long s) {
      long long c = ((s * g.c + q[g.a * n + g.b]) % n + n) % n;
      return h.make(g.a, c, g.b);
    };
    long long total = 1;
    for (long long i = 0; i < nn; ++i) total *= n;
    for (long long s : {1LL, -1LL}) {
      for (long long code = 0; code < total && !rep.relabeling_found; ++code) {
        long long t = code;
        for (long long i = 0; i < nn; ++i) {
          q[i] = t % n;
          t /= n;
        }
        bool ok = true;
        for (const HeisElement& g : h.elements()) {
          HeisElement pg = apply(g, s);
          HeisElement want_black = h.make(pg.a, pg.c, pg.b + 1);
          HeisElement want_white = h.make(pg.a - 1, pg.c - pg.a * pg.b, pg.b);
          if (!(apply(h.mul(g, h.y()), s) == want_black) ||
              !(apply(h.mul(g, h.inv(h.x())), s) == want_white)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          rep.relabeling_found = true;
          std::ostringstream os;
          os << "s=" << s << " q=";
          for (long long i = 0; i < nn; ++i) os << q[i];
          rep.relabeling = os.str();
        }
      }
    }
  }
  return rep;
}

}  // namespace heis
