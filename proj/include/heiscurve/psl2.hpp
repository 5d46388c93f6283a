// PSL_2(Z/nZ) arithmetic, subgroup closure by breadth-first generation,
// derived subgroups, and the index computations behind the congruence
// refutation.
#ifndef HEISCURVE_PSL2_HPP
#define HEISCURVE_PSL2_HPP

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace heis {

inline constexpr long long PSL2_LEVEL_GUARD = 30;

// Class of +-M in SL_2(Z/nZ), canonicalized as the lexicographically
// smaller of the two lifts with entries in [0, n).
struct ProjMat {
  std::uint8_t a, b, c, d;

  bool operator==(const ProjMat&) const = default;
  bool operator<(const ProjMat& o) const {
    return std::tie(a, b, c, d) < std::tie(o.a, o.b, o.c, o.d);
  }
  std::uint32_t key() const {
    return (std::uint32_t(a) << 24) | (std::uint32_t(b) << 16) |
           (std::uint32_t(c) << 8) | std::uint32_t(d);
  }
  std::string str() const;
};

ProjMat proj_make(long long n, long long a, long long b, long long c,
                  long long d);  // throws unless det = 1 mod n
ProjMat proj_mul(long long n, const ProjMat& x, const ProjMat& y);
ProjMat proj_inv(long long n, const ProjMat& x);
ProjMat proj_identity();

// images of the generators A = (1 2; 0 1) and B = (1 0; 2 1)
ProjMat gen_a_mod(long long n);
ProjMat gen_b_mod(long long n);

long long psl2_order(long long n);  // by enumeration, n <= guard

// breadth-first closure under multiplication; sorted element list
std::vector<ProjMat> closure(const std::vector<ProjMat>& gens, long long n);

// subgroup generated by all commutators of H (iterated to closure)
std::vector<ProjMat> derived_closure(const std::vector<ProjMat>& h,
                                     long long n);

// closure of {A^N, B^N} together with the derived subgroup of the image of
// Gamma-bar(2) mod 3; order 4 iff 3 | N, else 12
std::vector<ProjMat> phi_image_mod3(long long big_n);

// |<A, B> mod n| = [Gamma-bar(2) : Gamma-bar(2) n Gamma-bar(n)]
long long gamma2_index_mod(long long n);

// the Klein four-group D_3 in PSL_2(Z/3Z)
std::vector<ProjMat> d3_matrices();

}  // namespace heis

#endif
