#include "heiscurve/heisenberg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace heis {

namespace {
long long mod(long long v, long long m) {
  long long r = v % m;
  return r < 0 ? r + m : r;
}
}  // namespace

std::string HeisElement::str() const {
  std::ostringstream os;
  os << "(" << a << "," << c << "," << b << ")";
  return os.str();
}

Heisenberg::Heisenberg(HeisParams p) : p_(p) {
  if (p.m < 1 || p.n < 1 || p.l < 1)
    throw std::invalid_argument("Heisenberg: M,N,L >= 1");
  if (std::gcd(p.m, p.n) % p.l != 0)
    throw std::invalid_argument("Heisenberg: L must divide gcd(M,N)");
}

HeisElement Heisenberg::make(long long a, long long c, long long b) const {
  return {mod(a, p_.m), mod(c, p_.l), mod(b, p_.n)};
}

HeisElement Heisenberg::mul(const HeisElement& g, const HeisElement& h) const {
  return make(g.a + h.a, g.c + h.c - mod(h.a * g.b, p_.l), g.b + h.b);
}

HeisElement Heisenberg::inv(const HeisElement& g) const {
  return make(-g.a, -g.c - mod(g.a * g.b, p_.l), -g.b);
}

HeisElement Heisenberg::pow(const HeisElement& g, long long k) const {
  // g^k = (ka, kc - a b k(k-1)/2, kb)
  long long ka = mod(mod(k, p_.m) * g.a, p_.m);
  long long kb = mod(mod(k, p_.n) * g.b, p_.n);
  long long tri = mod(k, 2 * p_.l);
  tri = mod(tri * (tri - 1) / 2, p_.l);  // k(k-1)/2 mod L
  long long kc = mod(mod(k, p_.l) * g.c - mod(g.a * g.b, p_.l) * tri, p_.l);
  return {ka, kc, kb};
}

HeisElement Heisenberg::pow_iterative(const HeisElement& g, long long k) const {
  HeisElement r = identity();
  HeisElement base = k < 0 ? inv(g) : g;
  long long e = k < 0 ? -k : k;
  for (long long i = 0; i < e; ++i) r = mul(r, base);
  return r;
}

HeisElement Heisenberg::from_word(const FreeWord& w) const {
  HeisElement r = identity();
  for (const Letter& l : w.letters()) {
    HeisElement g =
        l.gen == Gen::A ? make(l.exp, 0, 0) : make(0, 0, l.exp);
    r = mul(r, g);
  }
  return r;
}

long long Heisenberg::order(const HeisElement& g) const {
  long long oa = p_.m / std::gcd(g.a, p_.m);
  long long ob = p_.n / std::gcd(g.b, p_.n);
  long long t0 = std::lcm(oa, ob);
  for (long long k = t0;; k += t0) {
    HeisElement gk = pow(g, k);
    if (gk == identity()) return k;
  }
}

long long Heisenberg::exponent_closed_form() const {
  long long t = std::lcm(p_.m, p_.n);
  bool t_odd = t % 2 != 0;
  bool tl_even = (t / p_.l) % 2 == 0;
  return (t_odd || tl_even) ? t : 2 * t;
}

long long Heisenberg::exponent() const {
  long long e = 1;
  for (const HeisElement& g : elements()) e = std::lcm(e, order(g));
  return e;
}

long long Heisenberg::center_order() const {
  long long count = 0;
  const HeisElement gx = x(), gy = y();
  for (const HeisElement& g : elements())
    if (mul(g, gx) == mul(gx, g) && mul(g, gy) == mul(gy, g)) ++count;
  return count;
}

std::vector<HeisElement> Heisenberg::elements() const {
  std::vector<HeisElement> v;
  v.reserve(size());
  for (long long a = 0; a < p_.m; ++a)
    for (long long c = 0; c < p_.l; ++c)
      for (long long b = 0; b < p_.n; ++b) v.push_back({a, c, b});
  return v;
}

std::size_t Heisenberg::index_of(const HeisElement& g) const {
  return static_cast<std::size_t>((g.a * p_.l + g.c) * p_.n + g.b);
}

HeisElement Heisenberg::element_at(std::size_t idx) const {
  long long b = static_cast<long long>(idx) % p_.n;
  long long rest = static_cast<long long>(idx) / p_.n;
  return {rest / p_.l, rest % p_.l, b};
}

PermAction Heisenberg::regular_action() const {
  PermAction act;
  act.degree = static_cast<std::size_t>(size());
  act.pi_x.resize(act.degree);
  act.pi_y.resize(act.degree);
  const HeisElement gx = x(), gy = y();
  for (std::size_t i = 0; i < act.degree; ++i) {
    HeisElement g = element_at(i);
    act.pi_x[i] = static_cast<std::uint32_t>(index_of(mul(g, gx)));
    act.pi_y[i] = static_cast<std::uint32_t>(index_of(mul(g, gy)));
  }
  return act;
}

PermAction Heisenberg::coset_action(
    const std::vector<HeisElement>& subgroup_gens) const {
  // closure of the subgroup
  std::vector<HeisElement> k{identity()};
  std::vector<bool> in_k(size(), false);
  in_k[index_of(identity())] = true;
  for (std::size_t head = 0; head < k.size(); ++head)
    for (const HeisElement& g : subgroup_gens)
      for (const HeisElement& h : {mul(k[head], g), mul(k[head], inv(g))}) {
        if (!in_k[index_of(h)]) {
          in_k[index_of(h)] = true;
          k.push_back(h);
        }
      }

  // canonical coset representative: minimal element of Kg
  auto rep_index = [&](const HeisElement& g) {
    HeisElement best = g;
    for (const HeisElement& h : k) best = std::min(best, mul(h, g));
    return index_of(best);
  };

  std::map<std::size_t, std::uint32_t> coset_id;
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < static_cast<std::size_t>(size()); ++i) {
    std::size_t r = rep_index(element_at(i));
    if (coset_id.emplace(r, static_cast<std::uint32_t>(reps.size())).second)
      reps.push_back(r);
  }

  PermAction act;
  act.degree = reps.size();
  act.pi_x.resize(act.degree);
  act.pi_y.resize(act.degree);
  const HeisElement gx = x(), gy = y();
  for (std::size_t i = 0; i < reps.size(); ++i) {
    HeisElement g = element_at(reps[i]);
    act.pi_x[i] = coset_id.at(rep_index(mul(g, gx)));
    act.pi_y[i] = coset_id.at(rep_index(mul(g, gy)));
  }
  return act;
}

}  // namespace heis
