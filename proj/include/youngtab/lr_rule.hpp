#pragma once

#include <optional>
#include <span>
#include <vector>

#include "youngtab/bigint.hpp"
#include "youngtab/partition.hpp"
#include "youngtab/tableau.hpp"

namespace youngtab {

struct ReadingWord {
  std::vector<Entry> letters;

  friend bool operator==(const ReadingWord&, const ReadingWord&) = default;
};

// Rows top to bottom, each read right to left.
ReadingWord reverse_reading_word(const Filling& t);

// Every prefix has at least as many (i-1)'s as i's, for all i >= 2.
bool is_lattice(std::span<const Entry> word);
inline bool is_lattice(const ReadingWord& w) { return is_lattice(w.letters); }

// A semistandard filling of a skew shape whose reverse reading word is a
// lattice word and whose weight is `content`.
struct LrWitness {
  Filling filling;
  WeightVector content;
};

// Yields the Littlewood-Richardson fillings of outer/inner with content mu,
// ordered lexicographically by reverse reading word. Empty when inner is not
// contained in outer or |inner| + |mu| != |outer|.
//
// Boxes are filled in reverse reading order, so the lattice condition and the
// content bound are checked on each prefix as it is built.
class LrEnumerator {
 public:
  LrEnumerator(const Partition& outer, const Partition& inner,
               const Partition& content);

  std::optional<LrWitness> next();

 private:
  bool admissible(std::size_t k, Entry v) const;
  LrWitness build() const;

  SkewShape shape_;
  Partition content_;
  std::vector<BoxCoord> order_;
  std::vector<std::ptrdiff_t> right_;
  std::vector<std::ptrdiff_t> above_;
  std::vector<Entry> values_;
  std::vector<std::uint32_t> counts_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<LrWitness> enumerate_lr_fillings(const Partition& outer,
                                             const Partition& inner,
                                             const Partition& content);

// C^nu_{lambda,mu}: the number of LR fillings of nu/lambda with content mu.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu,
                      const Partition& nu);

}  // namespace youngtab
