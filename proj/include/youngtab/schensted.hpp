#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "youngtab/tableau.hpp"

namespace youngtab {

// One-line notation: images()[i-1] = sigma(i).
class Permutation {
 public:
  Permutation() = default;
  // Throws InvalidArgument unless images is a rearrangement of 1..n.
  explicit Permutation(std::vector<Entry> images);

  static Permutation identity(std::size_t n);

  // "21453" (one digit per value) or "2,1,4,5,3". Throws Parse.
  static Permutation parse(std::string_view text);

  const std::vector<Entry>& images() const noexcept { return images_; }
  std::size_t size() const noexcept { return images_.size(); }
  // 1-based: sigma(i).
  Entry operator()(std::size_t i) const { return images_[i - 1]; }

  Permutation inverse() const;

  // Digits without separators when n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Entry> images_;
};

struct RskPair {
  Filling insertion;
  Filling recording;

  friend bool operator==(const RskPair&, const RskPair&) = default;
};

struct InsertionResult {
  Filling tableau;
  BoxCoord new_box;
};

// Schensted row insertion of v into the straight-shape tableau t: v replaces
// the leftmost entry y > v of row 0, y is inserted into row 1, and so on; a
// value with nothing larger in its row is appended at the row's end. Throws
// InvalidArgument if t is skew or already contains v.
InsertionResult row_insert(const Filling& t, Entry v);

RskPair rsk(const Permutation& sigma);

// The n+1 intermediate pairs, starting from (∅, ∅) and ending at rsk(sigma).
std::vector<RskPair> rsk_trace(const Permutation& sigma);

// Throws MalformedPair unless both tableaux are standard of the same
// straight shape.
Permutation inverse_rsk(const RskPair& pair);

// Patience sorting; does not use row insertion.
std::size_t lis_length(const Permutation& sigma);

}  // namespace youngtab
