#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "heiscurve/psl2.hpp"

using namespace heis;

TEST_CASE("canonical representatives") {
  // M and -M canonicalize identically
  ProjMat m = proj_make(3, 0, -1, 1, 0);
  ProjMat neg = proj_make(3, 0, 1, -1, 0);
  CHECK(m == neg);
  CHECK_THROWS_AS(proj_make(3, 1, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(proj_make(31, 1, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("group orders by enumeration") {
  CHECK(psl2_order(2) == 6);
  CHECK(psl2_order(3) == 12);
  CHECK(psl2_order(5) == 60);
  CHECK(psl2_order(6) == 72);  // CRT: 6 * 12
}

TEST_CASE("closures of the standard generators") {
  CHECK(closure({gen_a_mod(3), gen_b_mod(3)}, 3).size() == 12);
  CHECK(closure({gen_a_mod(5), gen_b_mod(5)}, 5).size() == 60);
  CHECK(closure({gen_a_mod(3)}, 3).size() == 3);
  // closure is idempotent and contains its generators
  auto h = closure({gen_a_mod(5)}, 5);
  auto hh = closure(h, 5);
  CHECK(h == hh);
  CHECK(std::binary_search(h.begin(), h.end(), gen_a_mod(5)));
  CHECK(60 % h.size() == 0);
}

TEST_CASE("derived subgroup mod 3 is the Klein four-group") {
  auto full = closure({gen_a_mod(3), gen_b_mod(3)}, 3);
  auto derived = derived_closure(full, 3);
  CHECK(derived.size() == 4);
  CHECK(derived == d3_matrices());
  // Klein: abelian, all elements involutions -> derived of derived trivial
  for (const ProjMat& x : derived) {
    CHECK(proj_mul(3, x, x) == proj_identity());
    for (const ProjMat& y : derived)
      CHECK(proj_mul(3, x, y) == proj_mul(3, y, x));
  }
  CHECK(derived_closure(derived, 3).size() == 1);
}

TEST_CASE("multiplication table of D_3 closes") {
  auto d3 = d3_matrices();
  for (const ProjMat& x : d3)
    for (const ProjMat& y : d3)
      CHECK(std::binary_search(d3.begin(), d3.end(), proj_mul(3, x, y)));
}

TEST_CASE("images of Phi_N mod 3") {
  for (long long n = 1; n <= 9; ++n) {
    auto img = phi_image_mod3(n);
    CHECK(img.size() == (n % 3 == 0 ? 4u : 12u));
  }
  CHECK(phi_image_mod3(3) == d3_matrices());
}

TEST_CASE("principal congruence indices") {
  CHECK(gamma2_index_mod(2) == 1);
  CHECK(gamma2_index_mod(4) == 4);
  CHECK(gamma2_index_mod(6) == 12);
  CHECK_THROWS_AS(gamma2_index_mod(3), std::invalid_argument);
  CHECK_THROWS_AS(gamma2_index_mod(32), std::invalid_argument);
}
