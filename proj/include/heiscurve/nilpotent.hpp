// Collection to the free class-3 nilpotent quotient of the free group on
// A, B.  Normal form A^a B^b C^c D^d E^e with C = [A,B], D = [C,A],
// E = [C,B]; D and E are central, weight-4 commutators vanish.
#ifndef HEISCURVE_NILPOTENT_HPP
#define HEISCURVE_NILPOTENT_HPP

#include <array>
#include <string>

#include "heiscurve/words.hpp"
#include "heiscurve/zlinalg.hpp"

namespace heis {

struct Class3Element {
  Int a, b, c, d, e;

  bool operator==(const Class3Element&) const = default;
  bool is_identity() const {
    return a == 0 && b == 0 && c == 0 && d == 0 && e == 0;
  }
  std::string str() const;
};

Class3Element c3_identity();
Class3Element c3_mul(const Class3Element& x, const Class3Element& y);
Class3Element c3_inv(const Class3Element& x);
Class3Element c3_pow(const Class3Element& x, const Int& k);
Class3Element c3_commutator(const Class3Element& x, const Class3Element& y);

Class3Element collect(const FreeWord& w);

// phi_2 on Gamma-bar(2)_2 mod Gamma-bar(2)_4: the C-exponent.
// Requires a = b = 0.
Int phi2(const Class3Element& x);

// psi(C) = (0,0,1), psi([C,A]) = (1,0,0), psi([C,B]) = (0,1,0);
// returns (d, e, c).  Requires a = b = 0.
std::array<Int, 3> psi(const Class3Element& x);

struct LevelParams {
  long long n, n_prime, n_dprime;

  static LevelParams for_level(long long n);  // N' and N'' from N
};

// psi-bar on Phi_N with values in (Z/N'Z)^3, computed by peeling:
// psi(B^{-sB} A^{-sA} w) mod N'.  Requires exponent sums of w = 0 mod N.
std::array<Int, 3> barpsi(const FreeWord& w, const LevelParams& p);

enum class Membership { none, phi, phi_prime, phi_double_prime };

// Deepest member of Gamma-bar(2) > Phi_N > Phi'_N > Phi''_N containing w.
Membership membership(const FreeWord& w, const LevelParams& p);

const char* membership_name(Membership m);

// Witt's formula (1/k) sum_{d|k} mu(d) m^{k/d}.
Int witt_rank(long long m, long long k);

// Rational polynomial in n with denominator den: (num[0] + num[1] n + ...)/den.
struct ExponentPoly {
  std::vector<Int> num;
  Int den;
  std::string str() const;
  Int eval(long long n) const;
};

struct HallPetrescuReport {
  long long n_max = 0;
  bool betanalpha_ok = false;       // beta^n alpha identity, all n <= n_max
  bool ab_power_matches_paper = false;  // the displayed (alpha beta)^n exponents
  ExponentPoly alpha_prime_true;    // fitted exponent of alpha' in (alpha beta)^n
  ExponentPoly beta_prime_true;     // fitted exponent of beta'
  bool fit_exact = false;           // fitted polynomials reproduce all n <= n_max
};

HallPetrescuReport verify_hall_petrescu(long long n_max);

}  // namespace heis

#endif
