// Finite Heisenberg groups H_{M,N,L}: x of order M, y of order N,
// central z = [x,y] of order L (L | gcd(M,N)).
//
// Elements are written x^a z^c y^b.  With z = [x,y] one has
// yx = z^-1 x y, which forces the group law
//   (a,c,b) * (a',c',b') = (a+a', c+c'-a'b, b+b').
#ifndef HEISCURVE_HEISENBERG_HPP
#define HEISCURVE_HEISENBERG_HPP

#include <string>
#include <vector>

#include "heiscurve/perm.hpp"
#include "heiscurve/words.hpp"

namespace heis {

struct HeisParams {
  long long m, n, l;
};

struct HeisElement {
  long long a, c, b;  // residues mod M, L, N

  bool operator==(const HeisElement&) const = default;
  bool operator<(const HeisElement& o) const {
    if (a != o.a) return a < o.a;
    if (c != o.c) return c < o.c;
    return b < o.b;
  }
  std::string str() const;
};

class Heisenberg {
 public:
  explicit Heisenberg(HeisParams p);  // throws unless L | gcd(M,N)

  const HeisParams& params() const { return p_; }
  long long size() const { return p_.m * p_.n * p_.l; }

  HeisElement identity() const { return {0, 0, 0}; }
  HeisElement x() const { return make(1, 0, 0); }
  HeisElement y() const { return make(0, 0, 1); }
  HeisElement z() const { return make(0, 1, 0); }
  HeisElement make(long long a, long long c, long long b) const;

  HeisElement mul(const HeisElement& g, const HeisElement& h) const;
  HeisElement inv(const HeisElement& g) const;
  HeisElement pow(const HeisElement& g, long long k) const;  // closed form
  HeisElement pow_iterative(const HeisElement& g, long long k) const;

  HeisElement from_word(const FreeWord& w) const;  // A -> x, B -> y

  long long order(const HeisElement& g) const;
  long long exponent() const;  // brute force over all elements
  // T if T odd or T/L even, else 2T (T = lcm(M,N))
  long long exponent_closed_form() const;
  long long center_order() const;  // brute-force centralizer of {x, y}

  std::vector<HeisElement> elements() const;  // sorted

  // Right action of x and y on right cosets K\H, K = <subgroup_gens>.
  PermAction coset_action(const std::vector<HeisElement>& subgroup_gens) const;
  PermAction regular_action() const;

  // element <-> point index of the regular action
  std::size_t index_of(const HeisElement& g) const;
  HeisElement element_at(std::size_t idx) const;

 private:
  HeisParams p_;
};

}  // namespace heis

#endif
