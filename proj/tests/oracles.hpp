#pragma once

// Brute-force reference computations used only by the tests. Nothing here
// calls into the library under test: shapes are plain row-length vectors and
// fillings plain nested vectors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Rows = std::vector<std::vector<unsigned>>;

// Rows of outer/inner; inner may be shorter than outer.
inline bool semistandard(const std::vector<unsigned>& outer,
                         const std::vector<unsigned>& inner, const Rows& rows) {
  auto in = [&](std::size_t r) { return r < inner.size() ? inner[r] : 0u; };
  for (std::size_t r = 0; r < outer.size(); ++r) {
    for (std::size_t k = 1; k < rows[r].size(); ++k) {
      if (rows[r][k - 1] > rows[r][k]) return false;
    }
    if (r == 0) continue;
    for (unsigned c = in(r); c < outer[r]; ++c) {
      if (c >= in(r - 1) && c < outer[r - 1] &&
          rows[r - 1][c - in(r - 1)] >= rows[r][c - in(r)]) {
        return false;
      }
    }
  }
  return true;
}

inline Rows split(const std::vector<unsigned>& outer,
                  const std::vector<unsigned>& inner,
                  const std::vector<unsigned>& word) {
  Rows rows;
  std::size_t k = 0;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    unsigned len = outer[r] - (r < inner.size() ? inner[r] : 0u);
    rows.emplace_back(word.begin() + k, word.begin() + k + len);
    k += len;
  }
  return rows;
}

inline unsigned boxes(const std::vector<unsigned>& outer,
                      const std::vector<unsigned>& inner) {
  return std::accumulate(outer.begin(), outer.end(), 0u) -
         std::accumulate(inner.begin(), inner.end(), 0u);
}

// Every semistandard filling with entries in 1..bound, by filtering all
// bound^boxes assignments. Produced in lexicographic order of the
// row-reading word.
inline std::vector<Rows> all_ssyt(const std::vector<unsigned>& outer,
                                  const std::vector<unsigned>& inner,
                                  unsigned bound) {
  const unsigned n = boxes(outer, inner);
  std::vector<Rows> out;
  std::vector<unsigned> word(n, 1);
  while (true) {
    Rows rows = split(outer, inner, word);
    if (semistandard(outer, inner, rows)) out.push_back(rows);
    std::size_t i = n;
    while (i > 0 && word[i - 1] == bound) word[--i] = 1;
    if (i == 0) break;
    ++word[i - 1];
  }
  return out;
}

// Standard tableaux of a straight shape by filtering all n! placements.
inline std::vector<Rows> all_syt(const std::vector<unsigned>& shape) {
  const unsigned n = boxes(shape, {});
  std::vector<unsigned> word(n);
  std::iota(word.begin(), word.end(), 1u);
  std::vector<Rows> out;
  do {
    Rows rows = split(shape, {}, word);
    if (semistandard(shape, {}, rows)) out.push_back(rows);
  } while (std::next_permutation(word.begin(), word.end()));
  return out;
}

// Number of partitions of n, by the recurrence on the largest part.
inline std::uint64_t partition_count(unsigned n) {
  std::vector<std::uint64_t> ways(n + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= n; ++part) {
    for (unsigned total = part; total <= n; ++total) {
      ways[total] += ways[total - part];
    }
  }
  return ways[n];
}

// Longest increasing subsequence by checking every subset.
inline unsigned lis_by_subsets(const std::vector<unsigned>& seq) {
  unsigned best = 0;
  const std::size_t n = seq.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    unsigned last = 0;
    unsigned len = 0;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      ok = seq[i] > last;
      last = seq[i];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// Schur polynomial coefficients keyed by exponent vector, from all_ssyt.
inline std::map<std::vector<unsigned>, long long> schur_terms(
    const std::vector<unsigned>& shape, unsigned width) {
  std::map<std::vector<unsigned>, long long> terms;
  for (const Rows& t : all_ssyt(shape, {}, width)) {
    std::vector<unsigned> exps(width, 0);
    for (const auto& row : t) {
      for (unsigned v : row) ++exps[v - 1];
    }
    ++terms[exps];
  }
  return terms;
}

// LR fillings by filtering all semistandard fillings of outer/inner with
// entries up to the number of rows of content.
inline std::vector<Rows> lr_fillings(const std::vector<unsigned>& outer,
                                     const std::vector<unsigned>& inner,
                                     const std::vector<unsigned>& content) {
  std::vector<Rows> out;
  if (content.empty()) {
    if (boxes(outer, inner) == 0) out.push_back(split(outer, inner, {}));
    return out;
  }
  for (const Rows& t : all_ssyt(outer, inner,
                                static_cast<unsigned>(content.size()))) {
    std::vector<unsigned> seen(content.size() + 1, 0);
    bool ok = true;
    for (const auto& row : t) {
      for (auto it = row.rbegin(); it != row.rend() && ok; ++it) {
        ++seen[*it];
        ok = *it == 1 || seen[*it] <= seen[*it - 1];
      }
    }
    for (std::size_t i = 0; i < content.size() && ok; ++i) {
      ok = seen[i + 1] == content[i];
    }
    if (ok) out.push_back(t);
  }
  return out;
}

}  // namespace oracle
