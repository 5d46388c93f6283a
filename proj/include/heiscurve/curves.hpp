// Permutation Riemann-Hurwitz engine and the closed-form genus formulas
// for the curves X_{M,N,L}, plus cusp widths, generalized level and the
// Wohlfahrt-style congruence refutation.
#ifndef HEISCURVE_CURVES_HPP
#define HEISCURVE_CURVES_HPP

#include <string>
#include <tuple>
#include <vector>

#include "heiscurve/perm.hpp"
#include "heiscurve/zlinalg.hpp"

namespace heis {

struct CurveData {
  std::size_t degree = 0;
  // cusp widths over X(2) = cycle lengths, sorted ascending, per fiber
  std::vector<long long> cusps_inf, cusps_zero, cusps_one;
  long long genus = 0;

  std::size_t cusp_count() const {
    return cusps_inf.size() + cusps_zero.size() + cusps_one.size();
  }
};

// 2g-2 = -2d + sum over all cycles of (len-1); throws if the action is
// not transitive or the genus fails integrality.
CurveData rh_genus(const PermAction& action);

// (NML - NL - ML - NML/e)/2 + 1 with T = lcm(M,N), e = 2T when T even
// and T/L odd, else e = T.
Int genus_closed_form(long long m, long long n, long long l);

long long ramification_e(long long m, long long n, long long l);

// all valid (M,N,L), M,N <= bound, with genus == target
std::vector<std::tuple<long long, long long, long long>> classify_small_genus(
    long long bound, long long target);

// genus of X''_N by unramified Riemann-Hurwitz for the degree-N''^2
// covering of X'_N: N''^2 (g'_N - 1) + 1.  N odd.
Int genus_xpp(long long n);

struct CuspWidths {
  std::vector<long long> widths;  // PSL_2(Z) widths = 2 * cycle length
  long long level = 0;            // lcm of widths
};

CuspWidths cusp_widths_and_level(const PermAction& action);

enum class CongruenceVerdict { not_congruence, inconclusive };

struct CongruenceCertificate {
  CongruenceVerdict verdict = CongruenceVerdict::inconclusive;
  long long level = 0;   // generalized level m
  long long h = 0;       // [Gamma-bar(2) : Gamma-bar(2) n Gamma-bar(m)], 0 if skipped
  Int index;             // index of the subgroup under test
  std::string note;
};

// For the coset action of a normal subgroup of the given index: if the
// index fails to divide h, containment of Gamma(m) is impossible and the
// subgroup is not a congruence subgroup.
CongruenceCertificate congruence_refutation(const PermAction& action,
                                            const Int& index);

}  // namespace heis

#endif
