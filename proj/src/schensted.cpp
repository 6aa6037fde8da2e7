#include "youngtab/schensted.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "youngtab/error.hpp"

namespace youngtab {

namespace {

using Rows = std::vector<std::vector<Entry>>;

// Returns the coordinate of the box created at the end of the cascade.
BoxCoord insert_into(Rows& rows, Entry v) {
  for (std::size_t r = 0;; ++r) {
    if (r == rows.size()) {
      rows.push_back({v});
      return {r, 0};
    }
    auto& row = rows[r];
    auto it = std::upper_bound(row.begin(), row.end(), v);
    if (it == row.end()) {
      row.push_back(v);
      return {r, row.size() - 1};
    }
    std::swap(*it, v);
  }
}

void place(Rows& rows, BoxCoord b, Entry v) {
  if (b.row == rows.size()) rows.emplace_back();
  rows[b.row].push_back(v);
}

}  // namespace

Permutation::Permutation(std::vector<Entry> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (Entry v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) {
      throw Error(ErrorCode::InvalidArgument,
                  "not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Entry> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Entry>(i + 1);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<Entry> images;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::Parse,
                    "bad one-line notation '" + std::string(text) + "'");
      }
      images.push_back(static_cast<Entry>(c - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string_view tok = text.substr(
          pos, comma == std::string_view::npos ? comma : comma - pos);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front())))
        tok.remove_prefix(1);
      while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back())))
        tok.remove_suffix(1);
      Entry v = 0;
      auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc() || end != tok.data() + tok.size()) {
        throw Error(ErrorCode::Parse,
                    "bad one-line notation '" + std::string(text) + "'");
      }
      images.push_back(v);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }
  try {
    return Permutation(std::move(images));
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, "'" + std::string(text) + "': " + e.what());
  }
}

Permutation Permutation::inverse() const {
  std::vector<Entry> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i] - 1] = static_cast<Entry>(i + 1);
  }
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = images_.size() <= 9;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i && !compact) out += ',';
    out += std::to_string(images_[i]);
  }
  return out;
}

InsertionResult row_insert(const Filling& t, Entry v) {
  if (!t.shape().is_straight()) {
    throw Error(ErrorCode::InvalidArgument,
                "row insertion needs a straight-shape tableau");
  }
  Rows rows = t.rows();
  for (const auto& row : rows) {
    if (std::find(row.begin(), row.end(), v) != row.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "tableau already contains " + std::to_string(v));
    }
  }
  BoxCoord box = insert_into(rows, v);
  return {Filling::straight(std::move(rows)), box};
}

std::vector<RskPair> rsk_trace(const Permutation& sigma) {
  std::vector<RskPair> steps;
  steps.reserve(sigma.size() + 1);
  Rows insertion;
  Rows recording;
  steps.push_back({});
  for (std::size_t i = 1; i <= sigma.size(); ++i) {
    BoxCoord box = insert_into(insertion, sigma(i));
    place(recording, box, static_cast<Entry>(i));
    steps.push_back({Filling::straight(insertion), Filling::straight(recording)});
  }
  return steps;
}

RskPair rsk(const Permutation& sigma) {
  Rows insertion;
  Rows recording;
  for (std::size_t i = 1; i <= sigma.size(); ++i) {
    BoxCoord box = insert_into(insertion, sigma(i));
    place(recording, box, static_cast<Entry>(i));
  }
  return {Filling::straight(std::move(insertion)),
          Filling::straight(std::move(recording))};
}

Permutation inverse_rsk(const RskPair& pair) {
  const Filling& p = pair.insertion;
  const Filling& q = pair.recording;
  if (!p.shape().is_straight() || p.shape() != q.shape() || !is_standard(p) ||
      !is_standard(q)) {
    throw Error(ErrorCode::MalformedPair,
                "inverse RSK needs two standard tableaux of the same shape");
  }
  const std::size_t n = p.num_boxes();
  Rows ins = p.rows();
  Rows rec = q.rows();
  std::vector<Entry> images(n);
  for (std::size_t i = n; i >= 1; --i) {
    // In a standard tableau the largest entry sits at the end of some row.
    std::size_t r = 0;
    while (rec[r].back() != i) ++r;
    rec[r].pop_back();
    Entry x = ins[r].back();
    ins[r].pop_back();
    if (ins[r].empty()) {
      ins.pop_back();
      rec.pop_back();
    }
    // Reverse bump: x displaces the rightmost entry smaller than it.
    while (r-- > 0) {
      auto it = std::lower_bound(ins[r].begin(), ins[r].end(), x);
      --it;
      std::swap(*it, x);
    }
    images[i - 1] = x;
  }
  return Permutation(std::move(images));
}

std::size_t lis_length(const Permutation& sigma) {
  std::vector<Entry> tops;
  for (Entry v : sigma.images()) {
    auto it = std::lower_bound(tops.begin(), tops.end(), v);
    if (it == tops.end()) {
      tops.push_back(v);
    } else {
      *it = v;
    }
  }
  return tops.size();
}

}  // namespace youngtab
