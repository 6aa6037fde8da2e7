#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "youngtab/bigint.hpp"
#include "youngtab/partition.hpp"

namespace youngtab {

// exps[i] is the exponent of x_{i+1}.
using ExponentVector = std::vector<std::uint32_t>;

// Polynomial in a fixed number of variables x_1..x_width with exact integer
// coefficients. Zero coefficients are never stored. Terms iterate in
// lexicographically decreasing order of exponent vector, so the first term is
// the lex-leading one.
class SparsePolynomial {
 public:
  using TermMap = std::map<ExponentVector, BigInt, std::greater<>>;

  // Throws InvalidArgument for width 0.
  explicit SparsePolynomial(std::size_t width);

  static SparsePolynomial constant(std::size_t width, const BigInt& c);
  // x_{index+1}
  static SparsePolynomial variable(std::size_t width, std::size_t index);

  std::size_t width() const noexcept { return width_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  BigInt coefficient(const ExponentVector& exps) const;

  // Adds c * x^exps, dropping the term if it cancels.
  void add_term(const ExponentVector& exps, const BigInt& c);

  // Total degree shared by all terms; nullopt if the terms disagree or the
  // polynomial is zero.
  std::optional<std::uint64_t> homogeneous_degree() const;

  BigInt evaluate(std::span<const BigInt> point) const;

  // Terms lex-descending, `coef * x1^a1 ... xN^aN`, joined by " + ". Zero
  // exponents are omitted and exponent 1 has no '^'. A constant term is just
  // its coefficient; the zero polynomial is "0".
  std::string render() const;

  SparsePolynomial& operator+=(const SparsePolynomial& rhs);
  SparsePolynomial& operator-=(const SparsePolynomial& rhs);

  friend bool operator==(const SparsePolynomial&,
                         const SparsePolynomial&) = default;

 private:
  void check_width(const SparsePolynomial& rhs) const;

  std::size_t width_;
  TermMap terms_;
};

// All binary operations throw WidthMismatch for differing widths.
SparsePolynomial operator+(SparsePolynomial lhs, const SparsePolynomial& rhs);
SparsePolynomial operator-(SparsePolynomial lhs, const SparsePolynomial& rhs);
SparsePolynomial operator*(const SparsePolynomial& lhs,
                           const SparsePolynomial& rhs);
SparsePolynomial operator*(const BigInt& c, const SparsePolynomial& p);

// Invariant under every adjacent transposition x_i <-> x_{i+1}.
bool is_symmetric(const SparsePolynomial& p);

// Sum of x^weight(T) over the semistandard tableaux T of shape lambda with
// entries at most width. Zero if lambda has more than width rows.
SparsePolynomial schur_polynomial(const Partition& lambda, std::size_t width);

// Ordered by decreasing partition (reverse lexicographic).
using SchurExpansion = std::map<Partition, BigInt, std::greater<>>;

// Coefficients c_nu with p = sum c_nu s_nu(x_1..x_width), by leading-term
// elimination. Throws NotHomogeneous or NotSymmetric. Coefficients are exact
// and may be negative.
SchurExpansion schur_expand(const SparsePolynomial& p);

// Smallest width that sees every s_nu in s_lambda * s_mu.
std::size_t product_width(const Partition& lambda, const Partition& mu);

// schur_expand(s_lambda * s_mu) at product_width(lambda, mu).
SchurExpansion expand_product(const Partition& lambda, const Partition& mu);

}  // namespace youngtab
