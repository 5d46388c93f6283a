#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "heiscurve/zlinalg.hpp"

using namespace heis;

namespace {

IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size(), c = rows.begin()->size();
  IntMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        int lo = -9, int hi = 9) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

std::vector<Int> diag_of(const IntMatrix& d) {
  std::vector<Int> v;
  for (std::size_t t = 0; t < std::min(d.rows(), d.cols()); ++t)
    if (d.at(t, t) != 0) v.push_back(d.at(t, t));
  return v;
}

}  // namespace

TEST_CASE("snf on frozen examples") {
  set_snf_verify(true);

  SUBCASE("diag(2,3) -> diag(1,6)") {
    auto s = snf(from_rows({{2, 0}, {0, 3}}));
    CHECK(diag_of(s.d) == std::vector<Int>{1, 6});
  }
  SUBCASE("zero matrix") {
    auto s = snf(IntMatrix(3, 2));
    CHECK(s.rank == 0);
    CHECK(s.d.is_zero());
  }
  SUBCASE("[[2,4],[6,8]] -> diag(2,4)") {
    // hand elimination: det = -8, d1 = gcd of entries = 2, d2 = 8/2
    auto s = snf(from_rows({{2, 4}, {6, 8}}));
    CHECK(diag_of(s.d) == std::vector<Int>{2, 4});
  }
}

TEST_CASE("snf transforms are unimodular and exact") {
  set_snf_verify(true);  // every call re-checks U*A*V == D
  std::mt19937 rng(42);
  for (int t = 0; t < 25; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
    IntMatrix a = random_matrix(rng, r, c);
    auto s = snf(a);
    CHECK(abs(bareiss_det(s.u)) == 1);
    CHECK(abs(bareiss_det(s.v)) == 1);
    CHECK(s.rank == rank_q(a));  // rank over Q matches nonzero diagonal
  }
}

TEST_CASE("invariant factors independent of row/column permutations") {
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    IntMatrix a = random_matrix(rng, 4, 5);
    auto base = quotient_invariants(a, 4);
    IntMatrix b = a;
    std::uniform_int_distribution<int> dr(0, 3), dc(0, 4);
    for (int k = 0; k < 6; ++k) {
      b.swap_rows(dr(rng), dr(rng));
      b.swap_cols(dc(rng), dc(rng));
    }
    CHECK(quotient_invariants(b, 4) == base);
  }
}

TEST_CASE("kernel bases") {
  SUBCASE("[1 1]") {
    IntMatrix k = kernel_basis(from_rows({{1, 1}}));
    REQUIRE(k.cols() == 1);
    bool plus = k.at(0, 0) == 1 && k.at(1, 0) == -1;
    bool minus = k.at(0, 0) == -1 && k.at(1, 0) == 1;
    CHECK((plus || minus));
  }
  SUBCASE("identity has empty kernel") {
    CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);
  }
  SUBCASE("[[2,4]] has primitive kernel (2,-1)") {
    IntMatrix k = kernel_basis(from_rows({{2, 4}}));
    REQUIRE(k.cols() == 1);
    Int a = k.at(0, 0), b = k.at(1, 0);
    CHECK(a * 2 + b * 4 == 0);
    CHECK(gcd(a, b) == 1);  // saturation: (1, -1/2) is not integral
    CHECK(abs(a) == 2);
  }
  SUBCASE("kernel columns are annihilated and saturated") {
    std::mt19937 rng(11);
    for (int t = 0; t < 15; ++t) {
      IntMatrix a = random_matrix(rng, 3, 5);
      IntMatrix k = kernel_basis(a);
      CHECK((a * k).is_zero());
      CHECK(rank_q(a) + k.cols() == 5);
      if (k.cols() > 0) {
        // quotient of Z^5 by the kernel lattice must be torsion-free
        auto inv = quotient_invariants(k, 5);
        CHECK(inv.torsion.empty());
      }
    }
  }
}

TEST_CASE("quotient invariants") {
  SUBCASE("<(2,0),(0,3)> in Z^2 is Z/6") {
    auto inv = quotient_invariants(from_rows({{2, 0}, {0, 3}}), 2);
    CHECK(inv.torsion == std::vector<Int>{6});
    CHECK(inv.free_rank == 0);
  }
  SUBCASE("empty sublattice of Z^3") {
    auto inv = quotient_invariants(IntMatrix(3, 0), 3);
    CHECK(inv.torsion.empty());
    CHECK(inv.free_rank == 3);
  }
  SUBCASE("<(1,1)> in Z^2 is free of rank 1") {
    auto inv = quotient_invariants(from_rows({{1}, {1}}), 2);
    CHECK(inv.torsion.empty());
    CHECK(inv.free_rank == 1);
  }
}

TEST_CASE("hnf is a lattice invariant") {
  std::mt19937 rng(13);
  for (int t = 0; t < 10; ++t) {
    IntMatrix a = random_matrix(rng, 4, 4);
    // right-multiplying by a unimodular matrix keeps the column lattice
    IntMatrix u = IntMatrix::identity(4);
    std::uniform_int_distribution<int> d(-2, 2), idx(0, 3);
    for (int k = 0; k < 8; ++k) {
      int i = idx(rng), j = idx(rng);
      if (i != j) u.add_col(i, j, d(rng));
    }
    CHECK(hnf(a) == hnf(a * u));
  }
}

TEST_CASE("solve_columns") {
  IntMatrix basis = from_rows({{1, 0}, {0, 2}, {1, 1}});
  IntMatrix rhs(3, 1);
  rhs.at(0, 0) = 3;
  rhs.at(1, 0) = 4;
  rhs.at(2, 0) = 5;
  IntMatrix x = solve_columns(basis, rhs);
  CHECK(basis * x == rhs);
  rhs.at(1, 0) = 3;  // odd second coordinate is unreachable
  CHECK_THROWS_AS(solve_columns(basis, rhs), std::domain_error);
}

TEST_CASE("bareiss determinant") {
  CHECK(bareiss_det(from_rows({{2, 4}, {6, 8}})) == -8);
  CHECK(bareiss_det(IntMatrix::identity(4)) == 1);
  CHECK(bareiss_det(from_rows({{1, 2}, {2, 4}})) == 0);
}
