#include "youngtab/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "youngtab/error.hpp"

namespace youngtab {

Partition::Partition(std::initializer_list<Part> parts)
    : Partition(from_parts(std::span<const Part>(parts.begin(), parts.size()))) {}

Partition Partition::from_parts(std::span<const Part> parts) {
  Partition p;
  for (Part x : parts) {
    if (x == 0) continue;
    if (!p.parts_.empty() && x > p.parts_.back()) {
      throw Error(ErrorCode::NotWeaklyDecreasing,
                  "partition parts must be weakly decreasing");
    }
    p.parts_.push_back(x);
    p.size_ += x;
  }
  return p;
}

Partition Partition::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error(ErrorCode::Parse,
                "expected a partition like [4,2,1], got '" + std::string(text) +
                    "'");
  }
  std::string_view body(s.data() + 1, s.size() - 2);
  std::vector<Part> parts;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = body.find(',', pos);
      std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
      Part value = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
        throw Error(ErrorCode::Parse, "bad partition part '" + std::string(tok) +
                                          "' in '" + std::string(text) + "'");
      }
      parts.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  return from_parts(parts);
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.to_string();
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(inner_, outer_)) {
    throw Error(ErrorCode::NotContained, inner_.to_string() +
                                             " is not contained in " +
                                             outer_.to_string());
  }
}

std::vector<BoxCoord> SkewShape::boxes() const {
  std::vector<BoxCoord> out;
  out.reserve(size());
  for (std::size_t r = 0; r < num_rows(); ++r) {
    for (std::size_t c = row_begin(r); c < row_end(r); ++c) out.push_back({r, c});
  }
  return out;
}

std::string SkewShape::to_string() const {
  if (is_straight()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

bool contains(const Partition& inner, const Partition& outer) {
  if (inner.num_rows() > outer.num_rows()) return false;
  for (std::size_t i = 0; i < inner.num_rows(); ++i) {
    if (inner.part(i) > outer.part(i)) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda) {
  std::vector<Part> cols(lambda.part(0), 0);
  for (Part row : lambda.parts()) {
    for (Part c = 0; c < row; ++c) ++cols[c];
  }
  return Partition::from_parts(cols);
}

std::uint64_t hook_length(const Partition& lambda, BoxCoord box) {
  if (box.row >= lambda.num_rows() || box.col >= lambda.part(box.row)) {
    throw Error(ErrorCode::InvalidBox,
                "box (" + std::to_string(box.row) + "," +
                    std::to_string(box.col) + ") is not in " +
                    lambda.to_string());
  }
  std::uint64_t arm = lambda.part(box.row) - box.col - 1;
  std::uint64_t leg = 0;
  for (std::size_t r = box.row + 1; r < lambda.num_rows(); ++r) {
    if (lambda.part(r) <= box.col) break;
    ++leg;
  }
  return arm + leg + 1;
}

std::vector<std::uint64_t> hook_lengths(const Partition& lambda) {
  std::vector<std::uint64_t> hooks;
  hooks.reserve(lambda.size());
  for (const BoxCoord& b : SkewShape(lambda).boxes()) {
    hooks.push_back(hook_length(lambda, b));
  }
  std::sort(hooks.begin(), hooks.end(), std::greater<>());
  return hooks;
}

BigInt count_standard(const Partition& lambda) {
  if (lambda.size() > kMaxCountBoxes) {
    throw Error(ErrorCode::GuardExceeded,
                "count_standard accepts at most " +
                    std::to_string(kMaxCountBoxes) + " boxes, got " +
                    std::to_string(lambda.size()));
  }
  // Divide out hooks as soon as they divide the running factorial so the
  // accumulator stays close to the size of the answer.
  std::vector<std::uint64_t> pending;
  for (std::uint64_t h : hook_lengths(lambda)) {
    if (h > 1) pending.push_back(h);
  }
  BigInt acc = 1;
  for (std::uint64_t k = 2; k <= lambda.size(); ++k) {
    acc *= k;
    std::vector<std::uint64_t> still;
    for (std::uint64_t h : pending) {
      if (acc % h == 0) {
        acc /= h;
      } else {
        still.push_back(h);
      }
    }
    pending.swap(still);
  }
  for (std::uint64_t h : pending) {
    if (acc % h != 0) {
      throw Error(ErrorCode::Internal,
                  "hook-length division left a remainder for " +
                      lambda.to_string());
    }
    acc /= h;
  }
  return acc;
}

SkewShape skew(const Partition& outer, const Partition& inner) {
  return SkewShape(outer, inner);
}

std::optional<Partition> PartitionGenerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    if (n_ > 0) current_.push_back(n_);
    if (n_ == 0) done_ = true;
    return Partition::from_parts(current_);
  }
  // Rightmost part larger than 1.
  std::size_t j = current_.size();
  while (j > 0 && current_[j - 1] == 1) --j;
  if (j == 0) {
    done_ = true;
    return std::nullopt;
  }
  --j;
  Part rest = static_cast<Part>(current_.size() - j - 1) + 1;
  Part cap = --current_[j];
  current_.resize(j + 1);
  while (rest > 0) {
    Part x = std::min(cap, rest);
    current_.push_back(x);
    rest -= x;
  }
  return Partition::from_parts(current_);
}

std::vector<Partition> partitions_of(Part n) {
  std::vector<Partition> out;
  PartitionGenerator gen(n);
  while (auto p = gen.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace youngtab
