#include "heiscurve/perm.hpp"

#include <stdexcept>

namespace heis {

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) r[p[i]] = i;
  return r;
}

Perm perm_compose(const Perm& first, const Perm& second) {
  if (first.size() != second.size())
    throw std::invalid_argument("perm_compose: size mismatch");
  Perm r(first.size());
  for (std::uint32_t i = 0; i < first.size(); ++i) r[i] = second[first[i]];
  return r;
}

bool perm_is_valid(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t v : p) {
    if (v >= p.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> perm_cycles(const Perm& p) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<bool> seen(p.size(), false);
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> cyc;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = p[j];
    }
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

bool PermAction::transitive() const {
  if (degree == 0) return false;
  const Perm ix = perm_inverse(pi_x), iy = perm_inverse(pi_y);
  std::vector<bool> seen(degree, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t w : {pi_x[v], pi_y[v], ix[v], iy[v]})
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == degree;
}

void PermAction::validate() const {
  if (pi_x.size() != degree || pi_y.size() != degree)
    throw std::invalid_argument("PermAction: permutation size != degree");
  if (!perm_is_valid(pi_x) || !perm_is_valid(pi_y))
    throw std::invalid_argument("PermAction: not a permutation");
}

std::vector<std::uint32_t> orbit_ids(const Perm& p, std::size_t* count) {
  std::vector<std::uint32_t> ids(p.size(), UINT32_MAX);
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < p.size(); ++i) {
    if (ids[i] != UINT32_MAX) continue;
    std::uint32_t j = i;
    while (ids[j] == UINT32_MAX) {
      ids[j] = next;
      j = p[j];
    }
    ++next;
  }
  if (count) *count = next;
  return ids;
}

}  // namespace heis
