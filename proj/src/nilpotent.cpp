#include "heiscurve/nilpotent.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heis {

std::string Class3Element::str() const {
  std::ostringstream os;
  os << "(" << a.get_str() << "," << b.get_str() << "," << c.get_str() << ","
     << d.get_str() << "," << e.get_str() << ")";
  return os.str();
}

Class3Element c3_identity() { return {0, 0, 0, 0, 0}; }

// Run-level swaps, exact in the class-3 quotient:
//   C^c A^a = A^a C^c D^{ac}
//   C^c B^b = B^b C^c E^{bc}
//   B^b A^a = A^a B^b C^{-ab} D^{-ab(a+1)/2} E^{-ab(b+1)/2}
// The product law below is those three swaps applied to
// (A^a B^b C^c D^d E^e)(A^a' B^b' C^c' D^d' E^e').
Class3Element c3_mul(const Class3Element& x, const Class3Element& y) {
  Class3Element r;
  r.a = x.a + y.a;
  r.b = x.b + y.b;
  r.c = x.c + y.c - y.a * x.b;
  r.d = x.d + y.d + y.a * x.c - y.a * x.b * (y.a + 1) / 2;
  r.e = x.e + y.e + y.b * x.c - y.a * x.b * y.b - y.a * x.b * (x.b + 1) / 2;
  return r;
}

Class3Element c3_inv(const Class3Element& x) {
  Class3Element r;
  r.a = -x.a;
  r.b = -x.b;
  r.c = -x.c - x.a * x.b;
  r.d = -x.d + x.a * x.c + x.a * x.b * (x.a - 1) / 2;
  r.e = -x.e + x.b * x.c + x.a * x.b * (x.b - 1) / 2;
  return r;
}

Class3Element c3_pow(const Class3Element& x, const Int& k) {
  Class3Element base = k < 0 ? c3_inv(x) : x;
  Int e = abs(k);
  Class3Element r = c3_identity();
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = c3_mul(r, base);
    base = c3_mul(base, base);
    e >>= 1;
  }
  return r;
}

Class3Element c3_commutator(const Class3Element& x, const Class3Element& y) {
  return c3_mul(c3_mul(x, y), c3_mul(c3_inv(x), c3_inv(y)));
}

Class3Element collect(const FreeWord& w) {
  Class3Element r = c3_identity();
  for (const Letter& l : w.letters()) {
    Class3Element g = c3_identity();
    (l.gen == Gen::A ? g.a : g.b) = to_int(l.exp);
    r = c3_mul(r, g);
  }
  return r;
}

Int phi2(const Class3Element& x) {
  if (x.a != 0 || x.b != 0)
    throw std::domain_error("phi2: element not in Gamma-bar(2)_2");
  return x.c;
}

std::array<Int, 3> psi(const Class3Element& x) {
  if (x.a != 0 || x.b != 0)
    throw std::domain_error("psi: element not in Gamma-bar(2)_2");
  return {x.d, x.e, x.c};
}

LevelParams LevelParams::for_level(long long n) {
  if (n < 1) throw std::invalid_argument("LevelParams: n >= 1");
  long long np = n % 2 ? n : n / 2;
  long long npp = n % 3 ? np : np / 3;
  return {n, np, npp};
}

namespace {
Int mod_reduce(const Int& v, long long m) {
  Int r;
  Int mm = to_int(m);
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mm.get_mpz_t());
  return r;
}
}  // namespace

std::array<Int, 3> barpsi(const FreeWord& w, const LevelParams& p) {
  auto [sa, sb] = w.exponent_sums();
  if (sa % p.n != 0 || sb % p.n != 0)
    throw std::domain_error("barpsi: word not in Phi_N");
  Class3Element peeled = c3_mul(
      c3_mul(Class3Element{0, to_int(-sb), 0, 0, 0},
             Class3Element{to_int(-sa), 0, 0, 0, 0}),
      collect(w));
  auto v = psi(peeled);
  return {mod_reduce(v[0], p.n_prime), mod_reduce(v[1], p.n_prime),
          mod_reduce(v[2], p.n_prime)};
}

Membership membership(const FreeWord& w, const LevelParams& p) {
  auto [sa, sb] = w.exponent_sums();
  if (sa % p.n != 0 || sb % p.n != 0) return Membership::none;
  auto v = barpsi(w, p);
  if (mod_reduce(v[2], p.n_prime) != 0) return Membership::phi;
  if (mod_reduce(v[0], p.n_dprime) != 0 || mod_reduce(v[1], p.n_dprime) != 0)
    return Membership::phi_prime;
  return Membership::phi_double_prime;
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::none: return "NONE";
    case Membership::phi: return "PHI";
    case Membership::phi_prime: return "PHI_PRIME";
    case Membership::phi_double_prime: return "PHI_DOUBLE_PRIME";
  }
  return "?";
}

namespace {
int moebius(long long n) {
  int mu = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}
}  // namespace

Int witt_rank(long long m, long long k) {
  if (m < 1 || k < 1) throw std::invalid_argument("witt_rank: m,k >= 1");
  Int sum = 0;
  for (long long d = 1; d <= k; ++d) {
    if (k % d != 0) continue;
    int mu = moebius(d);
    if (mu == 0) continue;
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(m),
                  static_cast<unsigned long>(k / d));
    sum += mu * pw;
  }
  return sum / to_int(k);
}

std::string ExponentPoly::str() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0) continue;
    if (!first && num[i] > 0) os << "+";
    if (i == 0) {
      os << num[i].get_str();
    } else {
      if (num[i] == -1) os << "-";
      else if (num[i] != 1) os << num[i].get_str() << "*";
      os << "n";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  os << ")/" << den.get_str();
  return os.str();
}

Int ExponentPoly::eval(long long n) const {
  Int acc = 0;
  Int x = to_int(n), pw = 1;
  for (const Int& c : num) {
    acc += c * pw;
    pw *= x;
  }
  if (acc % den != 0) throw std::logic_error("ExponentPoly: non-integral value");
  return acc / den;
}

namespace {

// Exact cubic fit through n = 1..4 by solving the Vandermonde system with
// rational elimination (common denominator kept as an Int).
ExponentPoly fit_cubic(const std::array<Int, 4>& vals) {
  // coefficients of p(n) = c0 + c1 n + c2 n^2 + c3 n^3 with p(i+1) = vals[i]
  // Cramer against the 4x4 Vandermonde at nodes 1,2,3,4 (determinant 12).
  IntMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    Int x(i + 1), pw(1);
    for (int j = 0; j < 4; ++j) {
      m.at(i, j) = pw;
      pw *= x;
    }
  }
  Int det = bareiss_det(m);
  ExponentPoly p;
  p.den = det;
  p.num.resize(4);
  for (int j = 0; j < 4; ++j) {
    IntMatrix mj = m;
    for (int i = 0; i < 4; ++i) mj.at(i, j) = vals[i];
    p.num[j] = bareiss_det(mj);
  }
  if (p.den < 0) {
    p.den = -p.den;
    for (Int& c : p.num) c = -c;
  }
  Int g = p.den;
  for (const Int& c : p.num) g = gcd(g, c);
  if (g > 1) {
    p.den /= g;
    for (Int& c : p.num) c /= g;
  }
  return p;
}

}  // namespace

HallPetrescuReport verify_hall_petrescu(long long n_max) {
  if (n_max < 1) throw std::invalid_argument("verify_hall_petrescu: n_max >= 1");
  HallPetrescuReport rep;
  rep.n_max = n_max;

  const Class3Element alpha{1, 0, 0, 0, 0};
  const Class3Element beta{0, 1, 0, 0, 0};
  const Class3Element gamma = c3_commutator(alpha, beta);
  const Class3Element alpha_p = c3_commutator(c3_inv(gamma), alpha);
  const Class3Element beta_p = c3_commutator(c3_inv(gamma), beta);

  rep.betanalpha_ok = true;
  for (long long n = 0; n <= n_max; ++n) {
    Class3Element lhs = c3_mul(c3_pow(beta, to_int(n)), alpha);
    Class3Element rhs = c3_mul(
        c3_mul(c3_mul(alpha, c3_pow(gamma, to_int(-n))), c3_pow(beta, to_int(n))),
        c3_mul(c3_pow(alpha_p, to_int(n)),
               c3_pow(beta_p, to_int(-n) * to_int(n - 1) / 2)));
    if (!(lhs == rhs)) rep.betanalpha_ok = false;
  }

  // (alpha beta)^n against alpha^n gamma^{-n(n-1)/2} beta^n; the residual is
  // central and is resolved on the alpha', beta' basis.
  auto residual_exponents = [&](long long n) -> std::array<Int, 2> {
    Class3Element lhs = c3_pow(c3_mul(alpha, beta), to_int(n));
    Class3Element base = c3_mul(
        c3_mul(c3_pow(alpha, to_int(n)),
               c3_pow(gamma, to_int(-n) * to_int(n - 1) / 2)),
        c3_pow(beta, to_int(n)));
    Class3Element res = c3_mul(c3_inv(base), lhs);
    if (res.a != 0 || res.b != 0 || res.c != 0)
      throw std::logic_error("hall-petrescu residual not central");
    // res = alpha'^f beta'^g with alpha' = D^{da} E^{ea}, beta' = D^{db} E^{eb}
    Int det = alpha_p.d * beta_p.e - alpha_p.e * beta_p.d;
    if (det == 0) throw std::logic_error("alpha', beta' not independent");
    Int f = (res.d * beta_p.e - res.e * beta_p.d);
    Int g = (alpha_p.d * res.e - alpha_p.e * res.d);
    if (f % det != 0 || g % det != 0)
      throw std::logic_error("residual outside <alpha', beta'>");
    return {f / det, g / det};
  };

  std::array<Int, 4> fa, fb;
  for (long long n = 1; n <= std::min<long long>(4, n_max); ++n) {
    auto r = residual_exponents(n);
    fa[n - 1] = r[0];
    fb[n - 1] = r[1];
  }
  if (n_max >= 4) {
    rep.alpha_prime_true = fit_cubic(fa);
    rep.beta_prime_true = fit_cubic(fb);
    rep.fit_exact = true;
    rep.ab_power_matches_paper = true;
    for (long long n = 0; n <= n_max; ++n) {
      auto r = residual_exponents(n);
      if (rep.alpha_prime_true.eval(n) != r[0] ||
          rep.beta_prime_true.eval(n) != r[1])
        rep.fit_exact = false;
      // displayed exponents: alpha' -> -n(n-4)(n+1), beta' -> n(n-1)(n+1)/6
      Int paper_a = to_int(-n) * to_int(n - 4) * to_int(n + 1);
      Int paper_b = to_int(n) * to_int(n - 1) * to_int(n + 1) / 6;
      if (r[0] != paper_a || r[1] != paper_b)
        rep.ab_power_matches_paper = false;
    }
  }
  return rep;
}

}  // namespace heis
