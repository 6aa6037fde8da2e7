#include "youngtab/tableau.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "slot_search.hpp"
#include "youngtab/error.hpp"

namespace youngtab {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t at = s.find(sep, pos);
    out.push_back(s.substr(pos, at == std::string_view::npos ? at : at - pos));
    if (at == std::string_view::npos) break;
    pos = at + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view row) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  };
  while (i < row.size()) {
    while (i < row.size() && is_sep(row[i])) ++i;
    std::size_t start = i;
    while (i < row.size() && !is_sep(row[i])) ++i;
    if (i > start) out.push_back(row.substr(start, i - start));
  }
  return out;
}

// For every box in row-reading order: index of the box to its left and the
// box above it within the shape, or -1.
void neighbour_indices(const SkewShape& shape,
                       std::vector<std::ptrdiff_t>& left,
                       std::vector<std::ptrdiff_t>& above) {
  std::vector<std::ptrdiff_t> row_start(shape.num_rows() + 1, 0);
  for (std::size_t r = 0; r < shape.num_rows(); ++r) {
    row_start[r + 1] =
        row_start[r] + static_cast<std::ptrdiff_t>(shape.row_length(r));
  }
  for (const BoxCoord& b : shape.boxes()) {
    const auto here = row_start[b.row] +
                      static_cast<std::ptrdiff_t>(b.col - shape.row_begin(b.row));
    left.push_back(b.col > shape.row_begin(b.row) ? here - 1 : -1);
    if (b.row > 0 && shape.has_box({b.row - 1, b.col})) {
      above.push_back(row_start[b.row - 1] +
                      static_cast<std::ptrdiff_t>(b.col -
                                                  shape.row_begin(b.row - 1)));
    } else {
      above.push_back(-1);
    }
  }
}

std::vector<std::vector<Entry>> split_rows(const SkewShape& shape,
                                           const std::vector<Entry>& values) {
  std::vector<std::vector<Entry>> rows(shape.num_rows());
  auto it = values.begin();
  for (std::size_t r = 0; r < shape.num_rows(); ++r) {
    auto len = static_cast<std::ptrdiff_t>(shape.row_length(r));
    rows[r].assign(it, it + len);
    it += len;
  }
  return rows;
}

}  // namespace

Filling::Filling(SkewShape shape, std::vector<std::vector<Entry>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (rows_.size() != shape_.num_rows()) {
    throw Error(ErrorCode::MalformedFilling,
                "filling has " + std::to_string(rows_.size()) +
                    " rows but shape " + shape_.to_string() + " has " +
                    std::to_string(shape_.num_rows()));
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].size() != shape_.row_length(r)) {
      throw Error(ErrorCode::MalformedFilling,
                  "row " + std::to_string(r) + " of shape " +
                      shape_.to_string() + " needs " +
                      std::to_string(shape_.row_length(r)) + " entries");
    }
    if (std::find(rows_[r].begin(), rows_[r].end(), Entry{0}) !=
        rows_[r].end()) {
      throw Error(ErrorCode::MalformedFilling, "entries must be positive");
    }
  }
}

Filling Filling::straight(std::vector<std::vector<Entry>> rows) {
  std::vector<Part> lengths;
  for (const auto& row : rows) {
    if (row.empty()) {
      throw Error(ErrorCode::MalformedFilling,
                  "straight fillings cannot have empty rows");
    }
    lengths.push_back(static_cast<Part>(row.size()));
  }
  Partition shape;
  try {
    shape = Partition::from_parts(lengths);
  } catch (const Error&) {
    throw Error(ErrorCode::MalformedFilling,
                "row lengths of a filling must be weakly decreasing");
  }
  return Filling(SkewShape(std::move(shape)), std::move(rows));
}

Filling Filling::parse(std::string_view text) {
  std::vector<Part> outer;
  std::vector<Part> inner;
  std::vector<std::vector<Entry>> rows;
  bool blank = std::all_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  if (!blank) {
    for (std::string_view row_text : split(text, '/')) {
      std::vector<Entry> row;
      Part dots = 0;
      for (std::string_view tok : tokens(row_text)) {
        if (tok == ".") {
          if (!row.empty()) {
            throw Error(ErrorCode::Parse,
                        "inner-shape '.' must precede the entries of a row");
          }
          ++dots;
          continue;
        }
        Entry v = 0;
        auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size() || v == 0) {
          throw Error(ErrorCode::Parse,
                      "bad tableau entry '" + std::string(tok) + "'");
        }
        row.push_back(v);
      }
      if (dots == 0 && row.empty()) {
        throw Error(ErrorCode::Parse, "empty row in '" + std::string(text) + "'");
      }
      inner.push_back(dots);
      outer.push_back(dots + static_cast<Part>(row.size()));
      rows.push_back(std::move(row));
    }
  }
  try {
    return Filling(SkewShape(Partition::from_parts(outer),
                             Partition::from_parts(inner)),
                   std::move(rows));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, "'" + std::string(text) +
                                      "' is not a filling of a skew shape: " +
                                      e.what());
  }
}

std::string Filling::render() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '\n';
    bool first = true;
    auto emit = [&](const std::string& tok) {
      if (!first) out += ' ';
      out += tok;
      first = false;
    };
    for (std::size_t c = 0; c < shape_.row_begin(r); ++c) emit(".");
    for (Entry v : rows_[r]) emit(std::to_string(v));
  }
  return out;
}

bool is_semistandard(const Filling& t) {
  const SkewShape& shape = t.shape();
  for (std::size_t r = 0; r < shape.num_rows(); ++r) {
    const auto& row = t.rows()[r];
    if (!std::is_sorted(row.begin(), row.end())) return false;
    if (r == 0) continue;
    for (std::size_t c = shape.row_begin(r); c < shape.row_end(r); ++c) {
      if (shape.has_box({r - 1, c}) && t.at({r - 1, c}) >= t.at({r, c})) {
        return false;
      }
    }
  }
  return true;
}

bool is_standard(const Filling& t) {
  if (!is_semistandard(t)) return false;
  std::vector<bool> seen(t.num_boxes() + 1, false);
  for (const auto& row : t.rows()) {
    for (Entry v : row) {
      if (v > t.num_boxes() || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

WeightVector weight(const Filling& t, Entry bound) {
  WeightVector w{std::vector<std::uint32_t>(bound, 0)};
  for (const auto& row : t.rows()) {
    for (Entry v : row) {
      if (v > bound) {
        throw Error(ErrorCode::EntryExceedsBound,
                    "entry " + std::to_string(v) + " exceeds bound " +
                        std::to_string(bound));
      }
      ++w.counts[v - 1];
    }
  }
  return w;
}

SsytEnumerator::SsytEnumerator(SkewShape shape, Entry bound)
    : shape_(std::move(shape)), bound_(bound) {
  if (bound_ == 0) {
    throw Error(ErrorCode::InvalidArgument, "entry bound must be positive");
  }
  neighbour_indices(shape_, left_, above_);
  // A box with d boxes below it in its column needs room for d larger values.
  for (const BoxCoord& b : shape_.boxes()) {
    Entry depth = 0;
    for (std::size_t r = b.row + 1; r < shape_.num_rows(); ++r) {
      if (shape_.row_end(r) <= b.col) break;
      ++depth;
    }
    upper_.push_back(depth >= bound_ ? 0 : bound_ - depth);
  }
  values_.assign(upper_.size(), 0);
}

std::optional<Filling> SsytEnumerator::next() {
  if (done_) return std::nullopt;
  struct Policy {
    const SsytEnumerator& e;
    Entry lower(std::size_t k) const {
      Entry lo = 1;
      if (e.left_[k] >= 0) lo = std::max(lo, e.values_[e.left_[k]]);
      if (e.above_[k] >= 0) lo = std::max(lo, e.values_[e.above_[k]] + 1);
      return lo;
    }
    Entry upper(std::size_t k) const { return e.upper_[k]; }
    bool admissible(std::size_t, Entry) const { return true; }
    void place(std::size_t, Entry) {}
    void unplace(std::size_t, Entry) {}
  } policy{*this};
  if (!detail::next_assignment(policy, values_, started_)) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return build();
}

Filling SsytEnumerator::build() const {
  return Filling(shape_, split_rows(shape_, values_));
}

SytEnumerator::SytEnumerator(const Partition& lambda) : shape_(lambda) {
  if (lambda.size() > kMaxSytBoxes) {
    throw Error(ErrorCode::GuardExceeded,
                "standard tableau enumeration accepts at most " +
                    std::to_string(kMaxSytBoxes) + " boxes, got " +
                    std::to_string(lambda.size()));
  }
  neighbour_indices(shape_, left_, above_);
  // Every box weakly south-east of b must hold a value at least b's.
  const auto n = static_cast<Entry>(lambda.size());
  for (const BoxCoord& b : shape_.boxes()) {
    Entry larger = 0;
    for (std::size_t r = b.row; r < lambda.num_rows(); ++r) {
      if (lambda.part(r) <= b.col) break;
      larger += static_cast<Entry>(lambda.part(r) - b.col);
    }
    upper_.push_back(n - (larger - 1));
  }
  values_.assign(upper_.size(), 0);
}

std::optional<Filling> SytEnumerator::next() {
  if (done_) return std::nullopt;
  struct Policy {
    SytEnumerator& e;
    Entry lower(std::size_t k) const {
      Entry lo = 0;
      if (e.left_[k] >= 0) lo = std::max(lo, e.values_[e.left_[k]]);
      if (e.above_[k] >= 0) lo = std::max(lo, e.values_[e.above_[k]]);
      return lo + 1;
    }
    Entry upper(std::size_t k) const { return e.upper_[k]; }
    bool admissible(std::size_t, Entry v) const {
      return (e.used_ & (1u << (v - 1))) == 0;
    }
    void place(std::size_t, Entry v) { e.used_ |= 1u << (v - 1); }
    void unplace(std::size_t, Entry v) { e.used_ &= ~(1u << (v - 1)); }
  } policy{*this};
  if (!detail::next_assignment(policy, values_, started_)) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return Filling(shape_, split_rows(shape_, values_));
}

std::vector<Filling> enumerate_ssyt(const SkewShape& shape, Entry bound) {
  std::vector<Filling> out;
  SsytEnumerator gen(shape, bound);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

std::vector<Filling> enumerate_syt(const Partition& lambda) {
  std::vector<Filling> out;
  SytEnumerator gen(lambda);
  while (auto t = gen.next()) out.push_back(std::move(*t));
  return out;
}

Filling bender_knuth(const Filling& t, Entry i) {
  if (i == 0) {
    throw Error(ErrorCode::InvalidArgument, "Bender-Knuth index must be >= 1");
  }
  if (!is_semistandard(t)) {
    throw Error(ErrorCode::InvalidArgument,
                "Bender-Knuth needs a semistandard filling");
  }
  const SkewShape& shape = t.shape();
  std::vector<std::vector<Entry>> rows = t.rows();
  for (std::size_t r = 0; r < shape.num_rows(); ++r) {
    std::vector<std::size_t> free_cols;
    std::size_t lows = 0;
    for (std::size_t c = shape.row_begin(r); c < shape.row_end(r); ++c) {
      const Entry v = t.at({r, c});
      if (v == i) {
        BoxCoord below{r + 1, c};
        if (shape.has_box(below) && t.at(below) == i + 1) continue;
        ++lows;
      } else if (v == i + 1) {
        if (r > 0 && shape.has_box({r - 1, c}) && t.at({r - 1, c}) == i) {
          continue;
        }
      } else {
        continue;
      }
      free_cols.push_back(c);
    }
    const std::size_t highs = free_cols.size() - lows;
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
      rows[r][free_cols[k] - shape.row_begin(r)] = k < highs ? i : i + 1;
    }
  }
  return Filling(shape, std::move(rows));
}

}  // namespace youngtab
