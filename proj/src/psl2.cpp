#include "heiscurve/psl2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace heis {

namespace {
long long mod(long long v, long long n) {
  long long r = v % n;
  return r < 0 ? r + n : r;
}

ProjMat canonical(long long n, long long a, long long b, long long c,
                  long long d) {
  a = mod(a, n);
  b = mod(b, n);
  c = mod(c, n);
  d = mod(d, n);
  long long na = mod(-a, n), nb = mod(-b, n), nc = mod(-c, n), nd = mod(-d, n);
  if (std::tie(na, nb, nc, nd) < std::tie(a, b, c, d))
    return {std::uint8_t(na), std::uint8_t(nb), std::uint8_t(nc),
            std::uint8_t(nd)};
  return {std::uint8_t(a), std::uint8_t(b), std::uint8_t(c), std::uint8_t(d)};
}

void check_n(long long n) {
  if (n < 2 || n > PSL2_LEVEL_GUARD)
    throw std::invalid_argument("psl2: level outside [2, 30]");
}
}  // namespace

std::string ProjMat::str() const {
  std::ostringstream os;
  os << "[" << int(a) << " " << int(b) << "; " << int(c) << " " << int(d)
     << "]";
  return os.str();
}

ProjMat proj_make(long long n, long long a, long long b, long long c,
                  long long d) {
  check_n(n);
  if (mod(a * d - b * c, n) != 1)
    throw std::invalid_argument("proj_make: determinant != 1 mod n");
  return canonical(n, a, b, c, d);
}

ProjMat proj_mul(long long n, const ProjMat& x, const ProjMat& y) {
  return canonical(n, x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
}

ProjMat proj_inv(long long n, const ProjMat& x) {
  // inverse of a determinant-1 matrix: (d -b; -c a)
  return canonical(n, x.d, -x.b, -x.c, x.a);
}

ProjMat proj_identity() { return {1, 0, 0, 1}; }

ProjMat gen_a_mod(long long n) { return proj_make(n, 1, 2, 0, 1); }
ProjMat gen_b_mod(long long n) { return proj_make(n, 1, 0, 2, 1); }

long long psl2_order(long long n) {
  check_n(n);
  std::unordered_set<std::uint32_t> seen;
  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c)
        for (long long d = 0; d < n; ++d)
          if (mod(a * d - b * c, n) == 1)
            seen.insert(canonical(n, a, b, c, d).key());
  return static_cast<long long>(seen.size());
}

std::vector<ProjMat> closure(const std::vector<ProjMat>& gens, long long n) {
  check_n(n);
  std::unordered_set<std::uint32_t> seen;
  std::vector<ProjMat> elems{proj_identity()};
  seen.insert(proj_identity().key());
  for (const ProjMat& g : gens)
    if (seen.insert(g.key()).second) elems.push_back(g);
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const ProjMat& g : gens) {
      ProjMat next = proj_mul(n, elems[head], g);
      if (seen.insert(next.key()).second) elems.push_back(next);
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

std::vector<ProjMat> derived_closure(const std::vector<ProjMat>& h,
                                     long long n) {
  check_n(n);
  if (h.size() > 2000)
    throw std::invalid_argument("derived_closure: subgroup too large");
  std::vector<ProjMat> comms;
  for (const ProjMat& x : h)
    for (const ProjMat& y : h) {
      ProjMat c = proj_mul(
          n, proj_mul(n, x, y),
          proj_mul(n, proj_inv(n, x), proj_inv(n, y)));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return closure(comms, n);
}

std::vector<ProjMat> phi_image_mod3(long long big_n) {
  if (big_n < 1) throw std::invalid_argument("phi_image_mod3: N >= 1");
  const long long n = 3;
  std::vector<ProjMat> full = closure({gen_a_mod(n), gen_b_mod(n)}, n);
  std::vector<ProjMat> gens = derived_closure(full, n);
  ProjMat an = proj_identity(), bn = proj_identity();
  for (long long i = 0; i < big_n % 3; ++i) {
    an = proj_mul(n, an, gen_a_mod(n));
    bn = proj_mul(n, bn, gen_b_mod(n));
  }
  gens.push_back(an);
  gens.push_back(bn);
  return closure(gens, n);
}

long long gamma2_index_mod(long long n) {
  check_n(n);
  if (n % 2 != 0)
    throw std::invalid_argument("gamma2_index_mod: n must be even");
  return static_cast<long long>(
      closure({gen_a_mod(n), gen_b_mod(n)}, n).size());
}

std::vector<ProjMat> d3_matrices() {
  const long long n = 3;
  std::vector<ProjMat> v{proj_identity(), proj_make(n, 0, -1, 1, 0),
                         proj_make(n, -1, 1, 1, 1), proj_make(n, 1, 1, 1, -1)};
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace heis
