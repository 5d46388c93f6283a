#include "heiscurve/cyclotomic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heis {

namespace {

// quotient of exact division of integer polynomials (ascending coeffs)
std::vector<Int> poly_exact_div(std::vector<Int> num,
                                const std::vector<Int>& den) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  if (num.empty()) return {};
  std::vector<Int> q(num.size() - den.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    if (num[i + den.size() - 1] % den.back() != 0)
      throw std::logic_error("poly_exact_div: not divisible");
    Int f = num[i + den.size() - 1] / den.back();
    q[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  for (const Int& v : num)
    if (v != 0) throw std::logic_error("poly_exact_div: nonzero remainder");
  return q;
}

}  // namespace

std::vector<Int> cyclotomic_poly(long long n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_poly: n >= 1");
  // x^n - 1 divided by the product of Phi_d over proper divisors d
  std::vector<Int> num(static_cast<std::size_t>(n) + 1);
  num[0] = -1;
  num.back() = 1;
  for (long long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = poly_exact_div(num, cyclotomic_poly(d));
  }
  return num;
}

std::string Cyc::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first && c[i] > 0) os << "+";
    if (i == 0) os << c[i].get_str();
    else {
      if (c[i] == -1) os << "-";
      else if (c[i] != 1) os << c[i].get_str() << "*";
      os << "z";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycField::CycField(long long n) : n_(n), phi_(cyclotomic_poly(n)) {
  if (n < 1) throw std::invalid_argument("CycField: n >= 1");
}

Cyc CycField::zero() const { return Cyc{std::vector<Int>(degree())}; }

Cyc CycField::one() const { return from_int(1); }

Cyc CycField::from_int(const Int& v) const {
  Cyc r = zero();
  if (degree() == 0) return r;  // N = 1: ring is Z... phi degree >= 1 always
  r.c[0] = v;
  return r;
}

Cyc CycField::zeta(long long k) const {
  std::vector<Int> p(static_cast<std::size_t>(((k % n_) + n_) % n_) + 1);
  p.back() = 1;
  return Cyc{reduce_poly(std::move(p))};
}

std::vector<Int> CycField::reduce_poly(std::vector<Int> p) const {
  const std::size_t d = degree();
  if (p.size() > d) {
    for (std::size_t i = p.size(); i-- > d;) {
      if (p[i] == 0) continue;
      Int f = p[i];
      // subtract f * x^{i-d} * phi
      for (std::size_t j = 0; j <= d; ++j) p[i - d + j] -= f * phi_[j];
    }
  }
  p.resize(d);
  return p;
}

Cyc CycField::add(const Cyc& u, const Cyc& v) const {
  Cyc r = u;
  for (std::size_t i = 0; i < degree(); ++i) r.c[i] += v.c[i];
  return r;
}

Cyc CycField::sub(const Cyc& u, const Cyc& v) const {
  Cyc r = u;
  for (std::size_t i = 0; i < degree(); ++i) r.c[i] -= v.c[i];
  return r;
}

Cyc CycField::neg(const Cyc& u) const {
  Cyc r = u;
  for (Int& x : r.c) x = -x;
  return r;
}

Cyc CycField::mul(const Cyc& u, const Cyc& v) const {
  std::vector<Int> p(2 * degree());
  for (std::size_t i = 0; i < degree(); ++i) {
    if (u.c[i] == 0) continue;
    for (std::size_t j = 0; j < degree(); ++j) p[i + j] += u.c[i] * v.c[j];
  }
  return Cyc{reduce_poly(std::move(p))};
}

Cyc CycField::pow(const Cyc& u, const Int& k) const {
  if (k < 0) throw std::invalid_argument("CycField::pow: k >= 0");
  Cyc base = u, r = one();
  Int e = k;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

bool CycField::is_zero(const Cyc& u) const {
  for (const Int& x : u.c)
    if (x != 0) return false;
  return true;
}

IntMatrix CycField::mult_matrix(const Cyc& u) const {
  const std::size_t d = degree();
  IntMatrix m(d, d);
  Cyc col = u;
  for (std::size_t j = 0; j < d; ++j) {
    if (j > 0) col = mul(col, zeta(1));  // u * zeta^j
    for (std::size_t i = 0; i < d; ++i) m.at(i, j) = col.c[i];
  }
  return m;
}

Int CycField::norm(const Cyc& u) const { return bareiss_det(mult_matrix(u)); }

Cyc CycField::exact_div(const Cyc& u, const Cyc& v) const {
  if (is_zero(v)) throw std::domain_error("exact_div: division by zero");
  const std::size_t d = degree();
  // solve M_v x = u over Q by fraction-free elimination, then check
  // integrality and verify
  IntMatrix m = mult_matrix(v);
  std::vector<mpq_class> rhs(d), x(d);
  std::vector<std::vector<mpq_class>> a(d, std::vector<mpq_class>(d));
  for (std::size_t i = 0; i < d; ++i) {
    rhs[i] = mpq_class(u.c[i]);
    for (std::size_t j = 0; j < d; ++j) a[i][j] = mpq_class(m.at(i, j));
  }
  for (std::size_t col = 0, row = 0; col < d && row < d; ++col) {
    std::size_t p = row;
    while (p < d && a[p][col] == 0) ++p;
    if (p == d) continue;
    std::swap(a[p], a[row]);
    std::swap(rhs[p], rhs[row]);
    for (std::size_t i = 0; i < d; ++i) {
      if (i == row || a[i][col] == 0) continue;
      mpq_class f = a[i][col] / a[row][col];
      for (std::size_t j = col; j < d; ++j) a[i][j] -= f * a[row][j];
      rhs[i] -= f * rhs[row];
    }
    ++row;
  }
  Cyc q = zero();
  std::size_t row = 0;
  for (std::size_t col = 0; col < d; ++col) {
    if (row < d && a[row][col] != 0) {
      mpq_class val = rhs[row] / a[row][col];
      val.canonicalize();
      if (val.get_den() != 1)
        throw std::domain_error("exact_div: quotient not integral");
      q.c[col] = val.get_num();
      ++row;
    } else {
      q.c[col] = 0;
    }
  }
  for (; row < d; ++row)
    if (rhs[row] != 0) throw std::domain_error("exact_div: no solution");
  if (!(mul(v, q) == u)) throw std::domain_error("exact_div: verification failed");
  return q;
}

FaReport fa_at_a0(long long n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("fa_at_a0: N odd >= 3");
  CycField f(n);
  FaReport rep;
  rep.n = n;

  // product form prod_{i=1}^{(N-1)/2} (-zeta^i)^i
  Cyc prod = f.one();
  for (long long i = 1; i <= (n - 1) / 2; ++i)
    prod = f.mul(prod, f.pow(f.neg(f.zeta(i)), to_int(i)));
  rep.product_form = prod;

  // quotient form prod ((-1+zeta^i)/(-1+zeta^-i))^i by one exact division
  Cyc num = f.one(), den = f.one();
  for (long long i = 1; i <= (n - 1) / 2; ++i) {
    Cyc minus_one = f.from_int(-1);
    num = f.mul(num, f.pow(f.add(minus_one, f.zeta(i)), to_int(i)));
    den = f.mul(den, f.pow(f.add(minus_one, f.zeta(-i)), to_int(i)));
  }
  rep.quotient_agrees = f.exact_div(num, den) == prod;

  // closed form (-1)^{(N^2-1)/8} zeta^{(N^2-1)N/24}
  long long sign_exp = (n * n - 1) / 8;
  Int zeta_exp = to_int(n) * to_int(n * n - 1) / 24;
  Cyc closed = f.zeta(mpz_class(zeta_exp % to_int(n)).get_si());
  if (sign_exp % 2 != 0) closed = f.neg(closed);
  rep.closed_form_agrees = closed == prod;

  rep.sixth_power_is_one = f.pow(prod, 6) == f.one();
  return rep;
}

SmoothnessUnit smoothness_unit(long long n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("smoothness_unit: N odd >= 3");
  CycField f(n);
  SmoothnessUnit su;
  su.n = n;
  Cyc u = f.from_int(-1);
  for (long long j = 2; j <= (n - 1) / 2; ++j)
    u = f.mul(u, f.pow(f.sub(f.zeta(1), f.zeta(j)), to_int(j)));
  su.u = u;
  su.norm_abs = abs(f.norm(u));
  Int v = su.norm_abs;
  long long k = 0;
  while (v > 1 && v % to_int(n) == 0) {
    v /= to_int(n);
    ++k;
  }
  su.is_power_of_n = v == 1;
  su.k = su.is_power_of_n ? k : -1;
  return su;
}

namespace {

// dense polynomial over Z[mu_5] with Cyc coefficients, ascending
using CycPoly = std::vector<Cyc>;

CycPoly cp_mul(const CycField& f, const CycPoly& a, const CycPoly& b) {
  CycPoly r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  return r;
}

CycPoly cp_add(const CycField& f, CycPoly a, const CycPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = f.add(a[i], b[i]);
  return a;
}

Cyc cp_eval(const CycField& f, const CycPoly& a, const Cyc& y) {
  Cyc acc = f.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, y), a[i]);
  return acc;
}

}  // namespace

FivrootReport fivroot_identity() {
  CycField f(5);
  FivrootReport rep;
  auto lin = [&](long long k) {  // -Y + zeta^k
    return CycPoly{f.zeta(k), f.from_int(-1)};
  };
  CycPoly lhs = cp_add(
      f, cp_mul(f, lin(1), cp_mul(f, lin(2), lin(2))),
      cp_mul(f, lin(4), cp_mul(f, lin(3), lin(3))));

  // c = 2 - 2(zeta^2 + zeta^-2) - zeta - zeta^-1
  Cyc c = f.sub(f.sub(f.from_int(2),
                      f.add(f.add(f.zeta(2), f.zeta(3)),
                            f.add(f.zeta(2), f.zeta(3)))),
                f.add(f.zeta(1), f.zeta(4)));
  CycPoly quad{f.from_int(2), c, f.from_int(2)};
  CycPoly one_minus_y{f.one(), f.from_int(-1)};
  CycPoly rhs = cp_mul(f, one_minus_y, quad);

  rep.identity_holds = lhs.size() == rhs.size();
  if (rep.identity_holds)
    for (std::size_t i = 0; i < lhs.size(); ++i)
      if (!(lhs[i] == rhs[i])) rep.identity_holds = false;

  Cyc c_simple = f.add(f.from_int(4), f.add(f.zeta(1), f.zeta(4)));
  rep.c_simplifies = c == c_simple;

  rep.value_at_0_is_2 = cp_eval(f, lhs, f.zero()) == f.from_int(2) &&
                        cp_eval(f, rhs, f.zero()) == f.from_int(2);
  rep.value_at_1_is_0 = f.is_zero(cp_eval(f, lhs, f.one()));
  return rep;
}

std::vector<Mod11Row> mod11_double_root() {
  const long long p = 11;
  std::vector<Mod11Row> rows;
  for (const PrimeEmbedding& e : prime_embeddings(5, p)) {
    Mod11Row row;
    row.root = e.r;
    long long r4 = (((e.r * e.r) % p) * ((e.r * e.r) % p)) % p;
    row.c = (4 + e.r + r4) % p;
    row.discriminant = ((row.c * row.c - 16) % p + p) % p;
    // 2Y^2 + cY + 2 == 2(Y-1)^2  iff  c == -4 mod p
    row.double_root_at_1 = row.c == (p - 4) % p;
    for (long long y = 0; y < p; ++y)
      if ((2 * y * y + row.c * y + 2) % p == 0) row.roots_in_field.push_back(y);
    rows.push_back(row);
  }
  return rows;
}

bool galois_exponent_integrality(long long n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("galois_exponent_integrality: N odd >= 3");
  auto sym = [&](long long i) {
    long long r = ((i % n) + n) % n;
    return r > (n - 1) / 2 ? r - n : r;
  };
  for (long long rho = 1; rho < n; ++rho) {
    if (std::gcd(rho, n) != 1) continue;
    // inverse of rho mod n
    long long inv = 1;
    while ((inv * rho) % n != 1) ++inv;
    for (long long i = 0; i < n; ++i) {
      long long v = rho * sym((i * inv) % n) - sym(i);
      if (v % n != 0) return false;
    }
  }
  return true;
}

std::vector<PrimeEmbedding> prime_embeddings(long long n, long long p) {
  if (p % n != 1)
    throw std::invalid_argument("prime_embeddings: p must be 1 mod N (split)");
  std::vector<Int> phi = cyclotomic_poly(n);
  std::vector<PrimeEmbedding> out;
  for (long long r = 0; r < p; ++r) {
    Int acc = 0, pw = 1;
    const Int pp = to_int(p), rr = to_int(r);
    for (const Int& c : phi) {
      acc += c * pw;
      acc %= pp;
      pw = pw * rr % pp;
    }
    if (acc % pp == 0) {
      // multiplicative order must be exactly N
      long long ord = 1, v = r % p;
      while (v != 1) {
        v = (v * r) % p;
        ++ord;
      }
      if (ord == n) out.push_back({p, r});
    }
  }
  return out;
}

long long reduce_mod_embedding(const CycField& f, const Cyc& u,
                               const PrimeEmbedding& e) {
  Int acc = 0, pw = 1;
  const Int pp = to_int(e.p), rr = to_int(e.r);
  for (const Int& c : u.c) {
    acc = (acc + c * pw) % pp;
    pw = pw * rr % pp;
  }
  return mpz_class((acc % pp + pp) % pp).get_si();
}

}  // namespace heis
