#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "youngtab/bigint.hpp"

namespace youngtab {

using Part = std::uint32_t;

// Largest partition accepted by count_standard.
inline constexpr std::uint64_t kMaxCountBoxes = 100;

// A weakly decreasing sequence of positive integers. Zero parts are never
// stored, so the empty sequence is the empty partition.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<Part> parts);

  // Drops zero parts (anywhere in the input) and throws NotWeaklyDecreasing
  // if what remains is not weakly decreasing.
  static Partition from_parts(std::span<const Part> parts);

  // Accepts `[a,b,c]`; `[]` is the empty partition. Whitespace is ignored.
  static Partition parse(std::string_view text);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t num_rows() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  std::uint64_t size() const noexcept { return size_; }

  // Length of row `row`; rows past the last one have length 0.
  Part part(std::size_t row) const noexcept {
    return row < parts_.size() ? parts_[row] : 0;
  }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on the parts.
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<Part> parts_;
  std::uint64_t size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// 0-based, English notation: row 0 is the top row.
struct BoxCoord {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const BoxCoord&, const BoxCoord&) = default;
  friend auto operator<=>(const BoxCoord&, const BoxCoord&) = default;
};

// outer/inner with inner contained in outer. A straight shape has inner = ∅.
class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition straight) : outer_(std::move(straight)) {}
  // Throws NotContained unless contains(inner, outer).
  SkewShape(Partition outer, Partition inner);

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  bool is_straight() const noexcept { return inner_.empty(); }

  std::size_t num_rows() const noexcept { return outer_.num_rows(); }
  std::size_t row_begin(std::size_t row) const noexcept {
    return inner_.part(row);
  }
  std::size_t row_end(std::size_t row) const noexcept {
    return outer_.part(row);
  }
  std::size_t row_length(std::size_t row) const noexcept {
    return row_end(row) - row_begin(row);
  }
  bool has_box(BoxCoord b) const noexcept {
    return b.row < num_rows() && b.col >= row_begin(b.row) &&
           b.col < row_end(b.row);
  }
  std::uint64_t size() const noexcept { return outer_.size() - inner_.size(); }

  // Boxes in row-reading order: top row first, left to right.
  std::vector<BoxCoord> boxes() const;

  // `[3,2,1]/[2,1]`, or just `[3,2,1]` for a straight shape.
  std::string to_string() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

bool contains(const Partition& inner, const Partition& outer);

Partition conjugate(const Partition& lambda);

// Throws InvalidBox if `box` is not a box of `lambda`.
std::uint64_t hook_length(const Partition& lambda, BoxCoord box);

// Hook lengths of every box, sorted in decreasing order.
std::vector<std::uint64_t> hook_lengths(const Partition& lambda);

// Number of standard tableaux of shape lambda by the hook-length formula.
// Throws GuardExceeded above kMaxCountBoxes boxes.
BigInt count_standard(const Partition& lambda);

// Throws NotContained when inner is not contained in outer.
SkewShape skew(const Partition& outer, const Partition& inner);

// Yields the partitions of n in reverse-lexicographic order:
// (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
class PartitionGenerator {
 public:
  explicit PartitionGenerator(Part n) : n_(n) {}

  std::optional<Partition> next();

 private:
  Part n_;
  std::vector<Part> current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Partition> partitions_of(Part n);

}  // namespace youngtab
