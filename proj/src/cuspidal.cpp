#include "heiscurve/cuspidal.hpp"

#include <stdexcept>

namespace heis {

namespace {
void check_n(long long n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("cuspidal: N odd >= 3 required");
}

long long sym_rep(long long i, long long n) {  // {i} in [-(n-1)/2, (n-1)/2]
  long long r = ((i % n) + n) % n;
  return r > (n - 1) / 2 ? r - n : r;
}
}  // namespace

Int& CuspDivisor::at(CuspFamily f, long long j) {
  long long jj = ((j % n) + n) % n;
  return coeff[static_cast<std::size_t>(static_cast<long long>(f) * n + jj)];
}

const Int& CuspDivisor::at(CuspFamily f, long long j) const {
  return const_cast<CuspDivisor*>(this)->at(f, j);
}

Int CuspDivisor::degree() const {
  Int s = 0;
  for (const Int& v : coeff) s += v;
  return s;
}

CuspDivisor CuspDivisor::operator-(const CuspDivisor& o) const {
  CuspDivisor r(n);
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] - o.coeff[i];
  return r;
}

CuspDivisor CuspDivisor::operator+(const CuspDivisor& o) const {
  CuspDivisor r(n);
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] + o.coeff[i];
  return r;
}

CuspDivisor CuspDivisor::scaled(const Int& k) const {
  CuspDivisor r(n);
  for (std::size_t i = 0; i < coeff.size(); ++i) r.coeff[i] = coeff[i] * k;
  return r;
}

CuspDivisor divisor_D(long long n, CuspFamily f) {
  check_n(n);
  CuspDivisor d(n);
  for (long long i = 0; i < n; ++i) d.at(f, i) = to_int(sym_rep(i, n));
  return d;
}

CuspDivisor divisor_of_function(long long n, CuspFamily zero_family,
                                long long j) {
  check_n(n);
  CuspDivisor d(n);
  d.at(zero_family, j) = to_int(n);
  for (long long i = 0; i < n; ++i) d.at(CuspFamily::c, i) -= 1;
  return d;
}

IntMatrix rohrlich_lattice(long long n, int base_point) {
  check_n(n);
  const std::size_t rank = static_cast<std::size_t>(3 * n - 1);
  std::vector<CuspDivisor> rels;

  // N * ([cusp_k] - [cusp_0]) spanning N Z[cusps]^0
  for (std::size_t k = 1; k < 3 * static_cast<std::size_t>(n); ++k) {
    CuspDivisor d(n);
    d.coeff[k] = to_int(n);
    d.coeff[0] = to_int(-n);
    rels.push_back(d);
  }

  CuspFamily base_fam = static_cast<CuspFamily>(base_point);
  // fiber sums  sum_i [f_i] - N [P]
  for (CuspFamily f : {CuspFamily::a, CuspFamily::b, CuspFamily::c}) {
    CuspDivisor d(n);
    for (long long i = 0; i < n; ++i) d.at(f, i) += 1;
    d.at(base_fam, 0) -= to_int(n);
    rels.push_back(d);
  }
  // sum i ([a_i] - [b_i]) and sum i ([a_i] - [c_i])
  for (CuspFamily f : {CuspFamily::b, CuspFamily::c}) {
    CuspDivisor d(n);
    for (long long i = 0; i < n; ++i) {
      d.at(CuspFamily::a, i) += to_int(i);
      d.at(f, i) -= to_int(i);
    }
    rels.push_back(d);
  }
  // sum i^2 ([a_i] + [b_i] + [c_i] - 3[P])
  {
    CuspDivisor d(n);
    Int s2 = 0;
    for (long long i = 0; i < n; ++i) {
      Int ii = to_int(i) * to_int(i);
      d.at(CuspFamily::a, i) += ii;
      d.at(CuspFamily::b, i) += ii;
      d.at(CuspFamily::c, i) += ii;
      s2 += 3 * ii;
    }
    d.at(base_fam, 0) -= s2;
    rels.push_back(d);
  }

  // degree-0 coordinates: v -> (v_1, ..., v_{3N-1}) after subtracting
  // v_0 * [cusp_0], valid because every relation has degree 0
  IntMatrix m(rank, rels.size());
  for (std::size_t j = 0; j < rels.size(); ++j) {
    if (rels[j].degree() != 0)
      throw std::logic_error("rohrlich_lattice: relation of nonzero degree");
    for (std::size_t i = 1; i <= rank; ++i) m.at(i - 1, j) = rels[j].coeff[i];
  }
  return m;
}

AbelianInvariants cuspidal_group(long long n) {
  check_n(n);
  return quotient_invariants(rohrlich_lattice(n),
                             static_cast<std::size_t>(3 * n - 1));
}

Int class_order(const CuspDivisor& d, long long n) {
  check_n(n);
  if (d.degree() != 0)
    throw std::invalid_argument("class_order: divisor of nonzero degree");
  IntMatrix lat = rohrlich_lattice(n);
  SnfResult s = snf(lat);
  // k*D in lattice  <=>  k * (U D)_i = 0 mod d_i for all i; the lattice has
  // full rank, so rank == 3N-1.
  const std::size_t rank = static_cast<std::size_t>(3 * n - 1);
  if (s.rank != rank) throw std::logic_error("class_order: lattice not full rank");
  IntMatrix vec(rank, 1);
  for (std::size_t i = 1; i <= rank; ++i) vec.at(i - 1, 0) = d.coeff[i];
  IntMatrix uv = s.u * vec;
  Int order = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    Int di = s.d.at(i, i);
    Int g = gcd(di, uv.at(i, 0));
    order = lcm(order, di / g);
  }
  return order;
}

DivisorChecksReport known_divisor_checks(long long n) {
  check_n(n);
  DivisorChecksReport rep;
  rep.all_ok = true;

  auto add = [&](const std::string& name, const CuspDivisor& d,
                 const Int& want_order) {
    DivisorCheck c;
    c.name = name;
    c.degree = d.degree();
    c.order = class_order(d, n);
    c.ok = c.degree == 0 && c.order == want_order;
    rep.all_ok = rep.all_ok && c.ok;
    rep.checks.push_back(c);
  };

  for (long long j = 0; j < n; ++j) {
    add("div(x-zeta^" + std::to_string(j) + ")",
        divisor_of_function(n, CuspFamily::b, j), 1);
    add("div(y-zeta^" + std::to_string(j) + ")",
        divisor_of_function(n, CuspFamily::a, j), 1);
    add("div(x-eps*zeta^" + std::to_string(j) + "*y)",
        divisor_of_function(n, CuspFamily::c, j), 1);
  }

  CuspDivisor da = divisor_D(n, CuspFamily::a);
  CuspDivisor db = divisor_D(n, CuspFamily::b);
  CuspDivisor dc = divisor_D(n, CuspFamily::c);
  add("D_A", da, to_int(n));
  add("D_A - D_B", da - db, 1);
  add("D_A - D_C", da - dc, 1);
  add("N*D_A", da.scaled(to_int(n)), 1);

  // div(f_A) = sum_i {i} div(y - zeta^i) must equal N * D_A
  CuspDivisor div_fa(n);
  for (long long i = 0; i < n; ++i)
    div_fa = div_fa + divisor_of_function(n, CuspFamily::a, i)
                          .scaled(to_int(sym_rep(i, n)));
  rep.div_fa_equals_n_da = div_fa.coeff == da.scaled(to_int(n)).coeff;
  rep.all_ok = rep.all_ok && rep.div_fa_equals_n_da;

  // literal reading of the fiber relation
  CuspDivisor lit(n);
  for (long long i = 0; i < n; ++i) lit.at(CuspFamily::a, i) += 1;
  lit.at(CuspFamily::a, 0) -= 1;
  rep.literal_fiber_sum_degree = lit.degree();
  return rep;
}

}  // namespace heis
