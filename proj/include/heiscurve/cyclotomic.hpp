// Exact arithmetic in Z[mu_N] as Z[x] modulo the N-th cyclotomic
// polynomial, with norms via the multiplication-matrix determinant,
// and the cyclotomic identities used by the integral-model checks.
#ifndef HEISCURVE_CYCLOTOMIC_HPP
#define HEISCURVE_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include "heiscurve/zlinalg.hpp"

namespace heis {

// coefficients of the N-th cyclotomic polynomial, ascending degree
std::vector<Int> cyclotomic_poly(long long n);

struct Cyc {
  std::vector<Int> c;  // length phi(N), ascending powers of zeta

  bool operator==(const Cyc&) const = default;
  std::string str() const;
};

class CycField {
 public:
  explicit CycField(long long n);

  long long n() const { return n_; }
  std::size_t degree() const { return phi_.size() - 1; }

  Cyc zero() const;
  Cyc one() const;
  Cyc from_int(const Int& v) const;
  Cyc zeta(long long k = 1) const;  // zeta^k

  Cyc add(const Cyc& u, const Cyc& v) const;
  Cyc sub(const Cyc& u, const Cyc& v) const;
  Cyc neg(const Cyc& u) const;
  Cyc mul(const Cyc& u, const Cyc& v) const;
  Cyc pow(const Cyc& u, const Int& k) const;  // k >= 0

  bool is_zero(const Cyc& u) const;
  Int norm(const Cyc& u) const;  // product of conjugates

  // exact division in Z[mu_N]; throws std::domain_error if v does not
  // divide u in the ring
  Cyc exact_div(const Cyc& u, const Cyc& v) const;

 private:
  long long n_;
  std::vector<Int> phi_;  // monic, ascending

  std::vector<Int> reduce_poly(std::vector<Int> p) const;
  IntMatrix mult_matrix(const Cyc& u) const;
};

struct FaReport {
  long long n = 0;
  Cyc product_form;      // prod (-zeta^i)^i
  bool quotient_agrees = false;  // prod ((-1+zeta^i)/(-1+zeta^-i))^i
  bool closed_form_agrees = false;  // (-1)^{(N^2-1)/8} zeta^{(N^2-1)N/24}
  bool sixth_power_is_one = false;
};

FaReport fa_at_a0(long long n);  // N odd >= 3

struct SmoothnessUnit {
  long long n = 0;
  Cyc u;             // -prod_{j=2}^{(N-1)/2} (zeta - zeta^j)^j
  Int norm_abs;      // |norm(u)|
  long long k = -1;  // norm_abs == N^k, or -1 if not a power of N
  bool is_power_of_n = false;
};

SmoothnessUnit smoothness_unit(long long n);

struct FivrootReport {
  bool identity_holds = false;   // the degree-3 polynomial identity over Z[mu_5]
  bool c_simplifies = false;     // c = 4 + zeta + zeta^4
  bool value_at_0_is_2 = false;  // both sides at Y = 0
  bool value_at_1_is_0 = false;  // left side at Y = 1
};

FivrootReport fivroot_identity();

struct Mod11Row {
  long long root;          // image of zeta in F_11
  long long c;             // reduced coefficient
  long long discriminant;  // c^2 - 16 mod 11
  bool double_root_at_1;   // polynomial equals 2(Y-1)^2
  std::vector<long long> roots_in_field;
};

std::vector<Mod11Row> mod11_double_root();

// N | rho*{i/rho} - {i} for all i and units rho (symmetric representatives)
bool galois_exponent_integrality(long long n);

struct PrimeEmbedding {
  long long p;
  long long r;  // root of Phi_N in F_p of multiplicative order N
};

std::vector<PrimeEmbedding> prime_embeddings(long long n, long long p);
long long reduce_mod_embedding(const CycField& f, const Cyc& u,
                               const PrimeEmbedding& e);

}  // namespace heis

#endif
