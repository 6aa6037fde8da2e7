#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "youngtab/partition.hpp"

namespace youngtab {

using Entry = std::uint32_t;

// Largest straight shape enumerate_syt will walk.
inline constexpr std::uint64_t kMaxSytBoxes = 24;

// One positive integer per box of a (possibly skew) shape. rows()[r] holds
// the entries of row r from left to right, starting at column
// shape().row_begin(r).
class Filling {
 public:
  Filling() = default;
  // Throws MalformedFilling if the row lengths do not match the shape or an
  // entry is zero.
  Filling(SkewShape shape, std::vector<std::vector<Entry>> rows);

  // Straight shape read off the row lengths.
  static Filling straight(std::vector<std::vector<Entry>> rows);

  // Rows separated by '/', entries by ',' or whitespace, leading '.' tokens
  // mark boxes of the inner shape: ". . 1/. 1/2" or "1,3,5/2,4".
  static Filling parse(std::string_view text);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<Entry>>& rows() const noexcept {
    return rows_;
  }
  std::uint64_t num_boxes() const noexcept { return shape_.size(); }

  // `box` must lie in the shape; columns are absolute.
  Entry at(BoxCoord box) const {
    return rows_[box.row][box.col - shape_.row_begin(box.row)];
  }

  // One row per line, entries separated by spaces, inner boxes as '.'.
  // The empty filling renders as the empty string.
  std::string render() const;

  friend bool operator==(const Filling&, const Filling&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<Entry>> rows_;
};

// counts[i-1] is the number of entries equal to i.
struct WeightVector {
  std::vector<std::uint32_t> counts;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

bool is_semistandard(const Filling& t);
bool is_standard(const Filling& t);

// Throws EntryExceedsBound if some entry is larger than `bound`.
WeightVector weight(const Filling& t, Entry bound);

// Lazily yields every semistandard filling of `shape` with entries in
// 1..bound, in lexicographic order of the row-reading word. Memory is
// O(#boxes) regardless of how many fillings exist.
class SsytEnumerator {
 public:
  SsytEnumerator(SkewShape shape, Entry bound);

  std::optional<Filling> next();

 private:
  Filling build() const;

  SkewShape shape_;
  Entry bound_;
  std::vector<std::ptrdiff_t> left_;
  std::vector<std::ptrdiff_t> above_;
  std::vector<Entry> upper_;
  std::vector<Entry> values_;
  bool started_ = false;
  bool done_ = false;
};

// Lazily yields every standard tableau of straight shape lambda, in
// lexicographic order of the row-reading word. Throws GuardExceeded for
// shapes with more than kMaxSytBoxes boxes.
class SytEnumerator {
 public:
  explicit SytEnumerator(const Partition& lambda);

  std::optional<Filling> next();

 private:
  SkewShape shape_;
  std::vector<std::ptrdiff_t> left_;
  std::vector<std::ptrdiff_t> above_;
  std::vector<Entry> upper_;
  std::vector<Entry> values_;
  std::uint32_t used_ = 0;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Filling> enumerate_ssyt(const SkewShape& shape, Entry bound);
std::vector<Filling> enumerate_syt(const Partition& lambda);

// Bender-Knuth involution t_i. In each row, an i with no i+1 directly below
// and an i+1 with no i directly above are free; the free letters of a row
// form a run of a i's followed by b (i+1)'s, which becomes b i's followed by
// a (i+1)'s. Throws InvalidArgument if `t` is not semistandard or i == 0.
Filling bender_knuth(const Filling& t, Entry i);

}  // namespace youngtab
