#include "heiscurve/homology.hpp"

#include <stdexcept>

#include "heiscurve/heisenberg.hpp"
#include "heiscurve/nilpotent.hpp"

namespace heis {

namespace {

struct Setup {
  long long n, np;
  Heisenberg h;
  std::size_t edges;

  explicit Setup(long long n_)
      : n(n_),
        np(LevelParams::for_level(n_).n_prime),
        h({n_, n_, LevelParams::for_level(n_).n_prime}),
        edges(static_cast<std::size_t>(n_) * n_ *
              LevelParams::for_level(n_).n_prime) {}

  std::size_t idx(const HeisElement& g) const {
    return edge_index(n, g.a, g.b, g.c);
  }
  HeisElement elem(std::size_t i) const {
    long long c = static_cast<long long>(i) % np;
    long long rest = static_cast<long long>(i) / np;
    return {rest / n, c, rest % n};
  }

  // orbit ids of right multiplication by w
  std::vector<std::uint32_t> orbits(const HeisElement& w,
                                    std::size_t* count) const {
    Perm p(edges);
    for (std::size_t i = 0; i < edges; ++i)
      p[i] = static_cast<std::uint32_t>(idx(h.mul(elem(i), w)));
    return orbit_ids(p, count);
  }
};

}  // namespace

std::size_t edge_index(long long n, long long a, long long b, long long c) {
  long long np = LevelParams::for_level(n).n_prime;
  auto m = [](long long v, long long q) { return ((v % q) + q) % q; };
  return static_cast<std::size_t>((m(a, n) * n + m(b, n)) * np + m(c, np));
}

IntMatrix boundary_matrix(long long n) {
  Setup s(n);
  std::size_t n_inf = 0, n_zero = 0;
  auto inf_ids = s.orbits(s.h.x(), &n_inf);
  auto zero_ids = s.orbits(s.h.y(), &n_zero);
  IntMatrix m(n_inf + n_zero, s.edges);
  for (std::size_t e = 0; e < s.edges; ++e) {
    m.at(inf_ids[e], e) += 1;
    m.at(n_inf + zero_ids[e], e) -= 1;
  }
  return m;
}

IntMatrix dual_boundary_matrix(long long n) {
  Setup s(n);
  // faces: orbits of right multiplication by x y^-1 (the cusp-1 stabilizer
  // generator A B^-1 of the bijection used for j_1)
  HeisElement w = s.h.mul(s.h.x(), s.h.inv(s.h.y()));
  std::size_t n_faces = 0;
  auto face_ids = s.orbits(w, &n_faces);
  IntMatrix m(s.edges, n_faces);
  for (std::size_t e = 0; e < s.edges; ++e) {
    std::size_t ey = s.idx(s.h.mul(s.elem(e), s.h.y()));
    m.at(ey, face_ids[e]) += 1;
    m.at(e, face_ids[e]) -= 1;
  }
  return m;
}

std::size_t boundary_rank(long long n) { return rank_q(boundary_matrix(n)); }
std::size_t dual_boundary_rank(long long n) {
  return rank_q(dual_boundary_matrix(n));
}

namespace {

AbelianInvariants quotient_of(const IntMatrix& s_basis, const IntMatrix& r) {
  // coordinates of R's columns in the S-basis, then invariants of the
  // quotient of Z^rank(S) by that span
  IntMatrix coords = solve_columns(s_basis, r);
  return quotient_invariants(coords, s_basis.cols());
}

}  // namespace

AbelianInvariants h1_invariants(long long n, bool force) {
  if (n < 1) throw std::invalid_argument("h1_invariants: N >= 1");
  if (!force && static_cast<long long>(n) * n * n > 100000)
    throw std::invalid_argument("h1_invariants: N^3 guard exceeded (force to override)");
  IntMatrix bd = boundary_matrix(n);
  IntMatrix dual = dual_boundary_matrix(n);
  IntMatrix s_basis = kernel_basis(bd);
  return quotient_of(s_basis, dual);
}

ClosedFormReport closed_form_check(long long n) {
  ClosedFormReport rep;
  rep.n = n;
  Setup s(n);
  const long long np = s.np;

  IntMatrix bd = boundary_matrix(n);
  IntMatrix dual = dual_boundary_matrix(n);
  IntMatrix s_truth = kernel_basis(bd);
  rep.truth = quotient_of(s_truth, dual);

  // literal boundary: rows (a,c) with sum over b, rows (b,c) with the
  // skewed sum over a
  IntMatrix lit(static_cast<std::size_t>(2 * n * np), s.edges);
  for (long long a = 0; a < n; ++a)
    for (long long c = 0; c < np; ++c)
      for (long long b = 0; b < n; ++b)
        lit.at(a * np + c, edge_index(n, a, b, c)) += 1;
  for (long long b = 0; b < n; ++b)
    for (long long c = 0; c < np; ++c)
      for (long long a = 0; a < n; ++a)
        lit.at(n * np + b * np + c, edge_index(n, a, b, c + a * b)) += 1;
  IntMatrix s_lit = kernel_basis(lit);

  // literal relation generators e_{c,d}
  IntMatrix r_lit(s.edges, static_cast<std::size_t>(n * np));
  for (long long d = 0; d < n; ++d)
    for (long long c = 0; c < np; ++c) {
      std::size_t col = static_cast<std::size_t>(d * np + c);
      for (long long b = 0; b < n; ++b) {
        long long a = d - b;
        long long cc = c - b * (b + 1) / 2;
        r_lit.at(edge_index(n, a, b + 1, cc), col) += 1;
        r_lit.at(edge_index(n, a, b, cc), col) -= 1;
      }
    }
  rep.literal = quotient_of(s_lit, r_lit);
  rep.invariants_agree = rep.truth == rep.literal;

  // automorphism sigma: edge (a,b,c) -> (a,b,-c), applied as a row
  // permutation of the column lattices
  auto sigma_rows = [&](const IntMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      HeisElement g = s.elem(i);
      std::size_t si = edge_index(n, g.a, g.b, -g.c);
      for (std::size_t j = 0; j < m.cols(); ++j) out.at(si, j) = m.at(i, j);
    }
    return out;
  };
  rep.s_lattices_agree = hnf(sigma_rows(s_truth)) == hnf(s_lit);
  rep.r_lattices_agree = hnf(sigma_rows(dual)) == hnf(r_lit);
  rep.s_literal_equals_truth_directly = hnf(s_truth) == hnf(s_lit);
  return rep;
}

}  // namespace heis
