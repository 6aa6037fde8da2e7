#pragma once

#include <cstddef>
#include <vector>

#include "youngtab/tableau.hpp"

namespace youngtab::detail {

// Depth-first search over integer assignments to a fixed sequence of slots.
// Each call advances `values` to the next admissible assignment in
// lexicographic order and returns false once the space is exhausted. The
// policy sees slots 0..k-1 already assigned when asked about slot k:
//   Entry lower(k), Entry upper(k), bool admissible(k, v),
//   void place(k, v), void unplace(k, v).
template <class Policy>
bool next_assignment(Policy& policy, std::vector<Entry>& values, bool resume) {
  const auto n = static_cast<std::ptrdiff_t>(values.size());
  if (n == 0) return !resume;
  std::ptrdiff_t k = resume ? n - 1 : 0;
  bool fresh = !resume;
  while (k >= 0) {
    const auto slot = static_cast<std::size_t>(k);
    Entry v;
    if (fresh) {
      v = policy.lower(slot);
    } else {
      policy.unplace(slot, values[slot]);
      v = values[slot] + 1;
    }
    const Entry hi = policy.upper(slot);
    while (v <= hi && !policy.admissible(slot, v)) ++v;
    if (v <= hi) {
      values[slot] = v;
      policy.place(slot, v);
      if (++k == n) return true;
      fresh = true;
    } else {
      --k;
      fresh = false;
    }
  }
  return false;
}

}  // namespace youngtab::detail
