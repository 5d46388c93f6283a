// Cuspidal divisor class group of the N-th Fermat curve from the
// generators-and-relations description of its principal cuspidal
// divisors (N odd).  Cusps are the 3N abstract labels a_j, b_j, c_j.
#ifndef HEISCURVE_CUSPIDAL_HPP
#define HEISCURVE_CUSPIDAL_HPP

#include <string>
#include <vector>

#include "heiscurve/zlinalg.hpp"

namespace heis {

enum class CuspFamily { a, b, c };

// coefficient vector over the cusps, ordered a_0..a_{N-1}, b_*, c_*
struct CuspDivisor {
  long long n = 0;
  std::vector<Int> coeff;

  explicit CuspDivisor(long long n_) : n(n_), coeff(3 * n_) {}
  Int& at(CuspFamily f, long long j);
  const Int& at(CuspFamily f, long long j) const;
  Int degree() const;
  CuspDivisor operator-(const CuspDivisor& o) const;
  CuspDivisor operator+(const CuspDivisor& o) const;
  CuspDivisor scaled(const Int& k) const;
};

// D_A = sum {i} [a_i] with {i} the representative in [-(N-1)/2, (N-1)/2]
CuspDivisor divisor_D(long long n, CuspFamily f);
// div(x - zeta^j) = N b_j - sum_i c_i, div(y - zeta^j) = N a_j - sum_i c_i,
// div(x - eps zeta^j y) = N c_j - sum_i c_i
CuspDivisor divisor_of_function(long long n, CuspFamily zero_family,
                                long long j);

// Relation lattice inside Z[cusps]^0, in coordinates [cusp_k] - [cusp_0]
// (k = 1..3N-1): N * elementary differences, the three fiber sums
// sum [f_i] - N [P], the two weighted differences sum i([a_i]-[b_i]),
// sum i([a_i]-[c_i]), and sum i^2([a_i]+[b_i]+[c_i]-3[P]).
// base_point: 0 = a_0, 1 = b_0, 2 = c_0.
IntMatrix rohrlich_lattice(long long n, int base_point = 0);

// invariant factors of Z[cusps]^0 / relation lattice; (Z/N)^{3N-7}
AbelianInvariants cuspidal_group(long long n);

// least k >= 1 with k*D in the relation lattice; requires degree 0
Int class_order(const CuspDivisor& d, long long n);

struct DivisorCheck {
  std::string name;
  Int degree;
  Int order;
  bool ok = false;
};

struct DivisorChecksReport {
  std::vector<DivisorCheck> checks;
  bool div_fa_equals_n_da = false;
  bool all_ok = false;
  // the literal reading "sum [a_i] - [P]" of the fiber relation has
  // degree N-1, not 0; recorded here
  Int literal_fiber_sum_degree;
};

DivisorChecksReport known_divisor_checks(long long n);

}  // namespace heis

#endif
