// Pair of permutations on a finite coset set: the universal input to the
// genus, dessin and homology engines.
#ifndef HEISCURVE_PERM_HPP
#define HEISCURVE_PERM_HPP

#include <cstdint>
#include <vector>

namespace heis {

using Perm = std::vector<std::uint32_t>;

Perm perm_inverse(const Perm& p);
// apply `first`, then `second`
Perm perm_compose(const Perm& first, const Perm& second);
bool perm_is_valid(const Perm& p);
std::vector<std::vector<std::uint32_t>> perm_cycles(const Perm& p);

struct PermAction {
  std::size_t degree = 0;
  Perm pi_x, pi_y;  // right action of the two generators

  // image of A^-1 B under the right action
  Perm pi_one() const { return perm_compose(perm_inverse(pi_x), pi_y); }
  // image of A B^-1 (same cycle type as pi_one)
  Perm pi_one_ab() const { return perm_compose(pi_x, perm_inverse(pi_y)); }

  bool transitive() const;
  void validate() const;  // throws on malformed permutations
};

// orbit id per point, ids numbered by smallest point in the orbit order
std::vector<std::uint32_t> orbit_ids(const Perm& p, std::size_t* count);

}  // namespace heis

#endif
