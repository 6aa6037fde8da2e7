#include "youngtab/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "youngtab/error.hpp"
#include "youngtab/tableau.hpp"

namespace youngtab {

SparsePolynomial::SparsePolynomial(std::size_t width) : width_(width) {
  if (width_ == 0) {
    throw Error(ErrorCode::InvalidArgument,
                "polynomials need at least one variable");
  }
}

SparsePolynomial SparsePolynomial::constant(std::size_t width, const BigInt& c) {
  SparsePolynomial p(width);
  p.add_term(ExponentVector(width, 0), c);
  return p;
}

SparsePolynomial SparsePolynomial::variable(std::size_t width,
                                            std::size_t index) {
  if (index >= width) {
    throw Error(ErrorCode::InvalidArgument,
                "variable index " + std::to_string(index + 1) +
                    " exceeds width " + std::to_string(width));
  }
  SparsePolynomial p(width);
  ExponentVector e(width, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

BigInt SparsePolynomial::coefficient(const ExponentVector& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void SparsePolynomial::add_term(const ExponentVector& exps, const BigInt& c) {
  if (exps.size() != width_) {
    throw Error(ErrorCode::WidthMismatch,
                "exponent vector of width " + std::to_string(exps.size()) +
                    " in a polynomial of width " + std::to_string(width_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<std::uint64_t> SparsePolynomial::homogeneous_degree() const {
  std::optional<std::uint64_t> degree;
  for (const auto& [exps, c] : terms_) {
    std::uint64_t d = std::accumulate(exps.begin(), exps.end(), std::uint64_t{0});
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

BigInt SparsePolynomial::evaluate(std::span<const BigInt> point) const {
  if (point.size() != width_) {
    throw Error(ErrorCode::WidthMismatch, "evaluation point has wrong width");
  }
  BigInt total = 0;
  for (const auto& [exps, c] : terms_) {
    BigInt term = c;
    for (std::size_t i = 0; i < width_; ++i) {
      term *= boost::multiprecision::pow(point[i], exps[i]);
    }
    total += term;
  }
  return total;
}

std::string SparsePolynomial::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exps, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.str();
    bool first = true;
    for (std::size_t i = 0; i < width_; ++i) {
      if (exps[i] == 0) continue;
      out += first ? " * " : " ";
      first = false;
      out += 'x' + std::to_string(i + 1);
      if (exps[i] > 1) out += '^' + std::to_string(exps[i]);
    }
  }
  return out;
}

void SparsePolynomial::check_width(const SparsePolynomial& rhs) const {
  if (width_ != rhs.width_) {
    throw Error(ErrorCode::WidthMismatch,
                "width " + std::to_string(width_) + " vs " +
                    std::to_string(rhs.width_));
  }
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& rhs) {
  check_width(rhs);
  for (const auto& [exps, c] : rhs.terms_) add_term(exps, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& rhs) {
  check_width(rhs);
  for (const auto& [exps, c] : rhs.terms_) add_term(exps, -c);
  return *this;
}

SparsePolynomial operator+(SparsePolynomial lhs, const SparsePolynomial& rhs) {
  lhs += rhs;
  return lhs;
}

SparsePolynomial operator-(SparsePolynomial lhs, const SparsePolynomial& rhs) {
  lhs -= rhs;
  return lhs;
}

SparsePolynomial operator*(const SparsePolynomial& lhs,
                           const SparsePolynomial& rhs) {
  if (lhs.width() != rhs.width()) {
    throw Error(ErrorCode::WidthMismatch,
                "width " + std::to_string(lhs.width()) + " vs " +
                    std::to_string(rhs.width()));
  }
  SparsePolynomial out(lhs.width());
  ExponentVector sum(lhs.width());
  for (const auto& [a, ca] : lhs.terms()) {
    for (const auto& [b, cb] : rhs.terms()) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a[i] + b[i];
      out.add_term(sum, ca * cb);
    }
  }
  return out;
}

SparsePolynomial operator*(const BigInt& c, const SparsePolynomial& p) {
  SparsePolynomial out(p.width());
  for (const auto& [exps, coeff] : p.terms()) out.add_term(exps, c * coeff);
  return out;
}

bool is_symmetric(const SparsePolynomial& p) {
  for (std::size_t i = 0; i + 1 < p.width(); ++i) {
    for (const auto& [exps, c] : p.terms()) {
      if (exps[i] == exps[i + 1]) continue;
      ExponentVector swapped = exps;
      std::swap(swapped[i], swapped[i + 1]);
      if (p.coefficient(swapped) != c) return false;
    }
  }
  return true;
}

SparsePolynomial schur_polynomial(const Partition& lambda, std::size_t width) {
  SparsePolynomial out(width);
  if (lambda.num_rows() > width) return out;
  SsytEnumerator gen(SkewShape(lambda), static_cast<Entry>(width));
  while (auto t = gen.next()) {
    out.add_term(weight(*t, static_cast<Entry>(width)).counts, 1);
  }
  return out;
}

SchurExpansion schur_expand(const SparsePolynomial& p) {
  SchurExpansion out;
  if (p.is_zero()) return out;
  if (!p.homogeneous_degree()) {
    throw Error(ErrorCode::NotHomogeneous,
                "Schur expansion needs a homogeneous polynomial");
  }
  // The lex-leading monomial of s_nu is x^nu with coefficient 1, and every
  // other monomial of s_nu is lex-smaller, so each step strictly lowers the
  // leading term of the remainder.
  SparsePolynomial rest = p;
  while (!rest.is_zero()) {
    const auto& [lead, coeff] = *rest.terms().begin();
    if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>())) {
      throw Error(ErrorCode::NotSymmetric,
                  "leading exponent vector is not a partition; input is not "
                  "symmetric");
    }
    Partition nu = Partition::from_parts(lead);
    BigInt c = coeff;
    rest -= c * schur_polynomial(nu, p.width());
    out.emplace(std::move(nu), std::move(c));
  }
  return out;
}

std::size_t product_width(const Partition& lambda, const Partition& mu) {
  return std::max<std::size_t>(1, lambda.size() + mu.size());
}

SchurExpansion expand_product(const Partition& lambda, const Partition& mu) {
  const std::size_t width = product_width(lambda, mu);
  return schur_expand(schur_polynomial(lambda, width) *
                      schur_polynomial(mu, width));
}

}  // namespace youngtab
