#include "youngtab/lr_rule.hpp"

#include <algorithm>

#include "slot_search.hpp"

namespace youngtab {

ReadingWord reverse_reading_word(const Filling& t) {
  ReadingWord w;
  w.letters.reserve(t.num_boxes());
  for (const auto& row : t.rows()) {
    w.letters.insert(w.letters.end(), row.rbegin(), row.rend());
  }
  return w;
}

bool is_lattice(std::span<const Entry> word) {
  std::vector<std::uint64_t> counts;
  for (Entry v : word) {
    if (v == 0) return false;
    if (counts.size() < v) counts.resize(v, 0);
    ++counts[v - 1];
    if (v >= 2 && counts[v - 1] > counts[v - 2]) return false;
  }
  return true;
}

LrEnumerator::LrEnumerator(const Partition& outer, const Partition& inner,
                           const Partition& content)
    : content_(content) {
  if (!contains(inner, outer) || inner.size() + content.size() != outer.size()) {
    done_ = true;
    return;
  }
  shape_ = SkewShape(outer, inner);
  std::vector<std::size_t> row_offset(shape_.num_rows() + 1, 0);
  for (std::size_t r = 0; r < shape_.num_rows(); ++r) {
    row_offset[r + 1] = row_offset[r] + shape_.row_length(r);
  }
  auto slot_of = [&](BoxCoord b) {
    return static_cast<std::ptrdiff_t>(row_offset[b.row] +
                                       (shape_.row_end(b.row) - 1 - b.col));
  };
  for (std::size_t r = 0; r < shape_.num_rows(); ++r) {
    for (std::size_t c = shape_.row_end(r); c-- > shape_.row_begin(r);) {
      order_.push_back({r, c});
      right_.push_back(c + 1 < shape_.row_end(r) ? slot_of({r, c + 1}) : -1);
      above_.push_back(r > 0 && shape_.has_box({r - 1, c})
                           ? slot_of({r - 1, c})
                           : -1);
    }
  }
  values_.assign(order_.size(), 0);
  counts_.assign(content_.num_rows(), 0);
}

bool LrEnumerator::admissible(std::size_t, Entry v) const {
  if (counts_[v - 1] >= content_.part(v - 1)) return false;
  return v == 1 || counts_[v - 1] < counts_[v - 2];
}

std::optional<LrWitness> LrEnumerator::next() {
  if (done_) return std::nullopt;
  struct Policy {
    LrEnumerator& e;
    Entry lower(std::size_t k) const {
      return e.above_[k] >= 0 ? e.values_[e.above_[k]] + 1 : 1;
    }
    Entry upper(std::size_t k) const {
      auto hi = static_cast<Entry>(e.content_.num_rows());
      if (e.right_[k] >= 0) hi = std::min(hi, e.values_[e.right_[k]]);
      return hi;
    }
    bool admissible(std::size_t k, Entry v) const { return e.admissible(k, v); }
    void place(std::size_t, Entry v) { ++e.counts_[v - 1]; }
    void unplace(std::size_t, Entry v) { --e.counts_[v - 1]; }
  } policy{*this};
  if (!detail::next_assignment(policy, values_, started_)) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return build();
}

LrWitness LrEnumerator::build() const {
  std::vector<std::vector<Entry>> rows(shape_.num_rows());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    rows[r].resize(shape_.row_length(r));
  }
  for (std::size_t k = 0; k < order_.size(); ++k) {
    const BoxCoord& b = order_[k];
    rows[b.row][b.col - shape_.row_begin(b.row)] = values_[k];
  }
  return LrWitness{Filling(shape_, std::move(rows)),
                   WeightVector{{content_.parts().begin(),
                                 content_.parts().end()}}};
}

std::vector<LrWitness> enumerate_lr_fillings(const Partition& outer,
                                             const Partition& inner,
                                             const Partition& content) {
  std::vector<LrWitness> out;
  LrEnumerator gen(outer, inner, content);
  while (auto w = gen.next()) out.push_back(std::move(*w));
  return out;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu,
                      const Partition& nu) {
  std::uint64_t count = 0;
  LrEnumerator gen(nu, lambda, mu);
  while (gen.next()) ++count;
  return count;
}

}  // namespace youngtab
