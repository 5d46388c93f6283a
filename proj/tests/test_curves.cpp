#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "heiscurve/curves.hpp"
#include "heiscurve/heisenberg.hpp"
#include "heiscurve/psl2.hpp"

using namespace heis;

namespace {

// coset action of the generator images on K\G inside PSL_2(Z/nZ)
PermAction psl2_coset_action(const std::vector<ProjMat>& subgroup,
                             long long n) {
  std::vector<ProjMat> g = closure({gen_a_mod(n), gen_b_mod(n)}, n);
  auto rep = [&](const ProjMat& x) {
    ProjMat best = proj_mul(n, subgroup[0], x);
    for (const ProjMat& k : subgroup) best = std::min(best, proj_mul(n, k, x));
    return best;
  };
  std::map<ProjMat, std::uint32_t> ids;
  std::vector<ProjMat> reps;
  for (const ProjMat& x : g) {
    ProjMat r = rep(x);
    if (ids.emplace(r, static_cast<std::uint32_t>(reps.size())).second)
      reps.push_back(r);
  }
  PermAction act;
  act.degree = reps.size();
  act.pi_x.resize(act.degree);
  act.pi_y.resize(act.degree);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    act.pi_x[i] = ids.at(rep(proj_mul(n, reps[i], gen_a_mod(n))));
    act.pi_y[i] = ids.at(rep(proj_mul(n, reps[i], gen_b_mod(n))));
  }
  return act;
}

}  // namespace

TEST_CASE("closed-form genus values") {
  for (long long n = 1; n <= 10; ++n)
    CHECK(genus_closed_form(n, n, 1) == to_int(n - 1) * to_int(n - 2) / 2);
  CHECK(genus_closed_form(5, 5, 5) == 26);
  CHECK(genus_closed_form(3, 3, 3) == 1);
  CHECK(genus_closed_form(2, 2, 2) == 0);
  CHECK(genus_closed_form(7, 7, 7) == 99);
  CHECK_THROWS_AS(genus_closed_form(4, 2, 4), std::invalid_argument);
}

TEST_CASE("riemann-hurwitz on regular actions") {
  auto genus_of = [](HeisParams p) {
    return rh_genus(Heisenberg(p).regular_action()).genus;
  };
  CHECK(genus_of({3, 3, 1}) == 1);
  CHECK(genus_of({5, 5, 5}) == 26);
  CHECK(genus_of({2, 2, 2}) == 0);

  // closed form equals the permutation computation for everything small
  for (long long m = 1; m <= 16; ++m)
    for (long long n = 1; m * n <= 96; ++n) {
      long long g = std::gcd(m, n);
      for (long long l = 1; l <= g; ++l) {
        if (g % l != 0 || m * n * l > 96) continue;
        Heisenberg h({m, n, l});
        CHECK(to_int(rh_genus(h.regular_action()).genus) ==
              genus_closed_form(m, n, l));
      }
    }
}

TEST_CASE("ramification index equals the order of x^-1 y") {
  for (long long m = 1; m <= 8; ++m)
    for (long long n = 1; n <= 8; ++n) {
      long long g = std::gcd(m, n);
      for (long long l = 1; l <= g; ++l) {
        if (g % l != 0) continue;
        Heisenberg h({m, n, l});
        HeisElement w = h.mul(h.inv(h.x()), h.y());
        CHECK(h.order(w) == ramification_e(m, n, l));
      }
    }
}

TEST_CASE("cusp counts of the regular H_{N,N,N'} action") {
  for (long long n : {2LL, 3LL, 4LL, 5LL}) {
    long long np = n % 2 ? n : n / 2;
    CurveData cd = rh_genus(Heisenberg({n, n, np}).regular_action());
    CHECK(cd.cusps_inf.size() == static_cast<std::size_t>(n * np));
    CHECK(cd.cusps_zero.size() == static_cast<std::size_t>(n * np));
    CHECK(cd.cusps_one.size() == static_cast<std::size_t>(n * np));
  }
}

TEST_CASE("the 25-point coset curve: 19 cusps") {
  // degree 25, five cusps above infinity and 1, nine above 0; the genus
  // follows from Riemann-Hurwitz (the quoted value 6 contradicts the
  // quoted cusp count; see the acceptance discrepancy check)
  Heisenberg h({5, 5, 5});
  CurveData cd = rh_genus(h.coset_action({h.y()}));
  CHECK(cd.degree == 25);
  CHECK(cd.cusp_count() == 19);
  CHECK(cd.genus == 4);
  std::vector<long long> zero_widths = cd.cusps_zero;
  std::sort(zero_widths.begin(), zero_widths.end());
  CHECK(zero_widths == std::vector<long long>{1, 1, 1, 1, 1, 5, 5, 5, 5});
}

TEST_CASE("coset action on D_3 cosets has genus 1") {
  PermAction act = psl2_coset_action(d3_matrices(), 3);
  CHECK(act.degree == 3);
  CurveData cd = rh_genus(act);
  CHECK(cd.genus == 1);
  CHECK(cd.cusp_count() == 3);  // totally ramified over all three cusps
}

TEST_CASE("small-genus classification") {
  using T = std::tuple<long long, long long, long long>;
  auto got0 = classify_small_genus(12, 0);
  std::sort(got0.begin(), got0.end());
  std::vector<T> want0;
  for (long long k = 1; k <= 12; ++k) {
    want0.emplace_back(k, 1, 1);
    if (k > 1) want0.emplace_back(1, k, 1);
  }
  want0.emplace_back(2, 2, 1);
  want0.emplace_back(2, 2, 2);
  std::sort(want0.begin(), want0.end());
  CHECK(got0 == want0);

  auto got1 = classify_small_genus(12, 1);
  std::sort(got1.begin(), got1.end());
  std::vector<T> want1 = {{2, 3, 1}, {2, 4, 1}, {2, 4, 2}, {3, 2, 1},
                          {3, 3, 1}, {3, 3, 3}, {4, 2, 1}, {4, 2, 2}};
  CHECK(got1 == want1);

  CHECK(classify_small_genus(12, -1).empty());
}

TEST_CASE("genus of the second covering") {
  CHECK(genus_xpp(3) == 1);    // N'' = 1: same curve
  CHECK(genus_xpp(5) == 626);
  CHECK(genus_xpp(7) == 4803);  // 49*(99-1)+1
  CHECK_THROWS_AS(genus_xpp(4), std::invalid_argument);
}

TEST_CASE("cusp widths and generalized level") {
  Heisenberg h333({3, 3, 3});
  CuspWidths cw = cusp_widths_and_level(h333.regular_action());
  CHECK(cw.level == 6);
  CHECK(std::all_of(cw.widths.begin(), cw.widths.end(),
                    [](long long w) { return w == 6; }));

  for (long long n : {2LL, 3LL, 5LL}) {
    Heisenberg h({n, n, 1});
    CuspWidths w = cusp_widths_and_level(h.regular_action());
    CHECK(std::all_of(w.widths.begin(), w.widths.end(),
                      [&](long long x) { return x == 2 * n; }));
  }

  PermAction trivial{1, {0}, {0}};
  CuspWidths tw = cusp_widths_and_level(trivial);
  CHECK(tw.widths == std::vector<long long>{2, 2, 2});
  CHECK(tw.level == 2);
}

TEST_CASE("congruence refutation") {
  Heisenberg phi3({3, 3, 1});
  auto c1 = congruence_refutation(phi3.regular_action(), 9);
  CHECK(c1.verdict == CongruenceVerdict::not_congruence);
  CHECK(c1.level == 6);
  CHECK(c1.h == 12);

  Heisenberg phip3({3, 3, 3});
  auto c2 = congruence_refutation(phip3.regular_action(), 27);
  CHECK(c2.verdict == CongruenceVerdict::not_congruence);
  CHECK(c2.level == 6);

  PermAction trivial{1, {0}, {0}};
  auto c3 = congruence_refutation(trivial, 1);
  CHECK(c3.verdict == CongruenceVerdict::inconclusive);
}
