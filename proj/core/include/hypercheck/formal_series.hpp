#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypercheck/rat_poly.hpp"
#include "hypercheck/rational.hpp"
#include "hypercheck/series_spec.hpp"

namespace hypercheck {

/// Power series truncated to a fixed number of coefficients (its order).
///
/// Coefficient j multiplies x^j, j = 0..order-1. Binary operations require
/// equal orders and never touch indices at or beyond the order.
class FormalSeries {
 public:
  FormalSeries() = default;
  /// Zero series with `order` coefficients.
  explicit FormalSeries(long order);
  explicit FormalSeries(std::vector<Rational> coefficients);

  /// Truncates (or zero-pads) a polynomial to `order` coefficients.
  static FormalSeries from_polynomial(const RatPoly& p, long order);

  [[nodiscard]] long order() const { return static_cast<long>(coeffs_.size()); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] const Rational& operator[](long j) const { return coeffs_.at(static_cast<std::size_t>(j)); }

  /// Index of the first coefficient where the series differ; empty when equal.
  /// Throws OrderMismatch if the orders differ.
  [[nodiscard]] std::optional<long> first_difference(const FormalSeries& other) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string str() const;

  FormalSeries& operator+=(const FormalSeries& rhs);
  FormalSeries& operator-=(const FormalSeries& rhs);
  FormalSeries& operator*=(const Rational& scale);

  friend FormalSeries operator+(FormalSeries lhs, const FormalSeries& rhs) { return lhs += rhs; }
  friend FormalSeries operator-(FormalSeries lhs, const FormalSeries& rhs) { return lhs -= rhs; }
  friend FormalSeries operator*(FormalSeries lhs, const Rational& scale) { return lhs *= scale; }
  friend FormalSeries operator*(const Rational& scale, FormalSeries rhs) { return rhs *= scale; }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Expansion of pFq(top; bottom; sigma*x) with sigma = spec.argument.
/// Coefficient j is prod (top)_j / (prod (bottom)_j * j!) * sigma^j.
/// Throws PoleError naming the bottom parameter and index when a live
/// coefficient would divide by zero.
[[nodiscard]] FormalSeries series_from_hyp(const SeriesSpec& spec, long order);

/// Cauchy product truncated to the common order; throws OrderMismatch.
[[nodiscard]] FormalSeries series_mul(const FormalSeries& p, const FormalSeries& q);

/// scale * x^power * p, truncated to p's order.
[[nodiscard]] FormalSeries series_shift_mul(const FormalSeries& p, long power, const Rational& scale);

/// exp(x) = sum x^j / j!.
[[nodiscard]] FormalSeries series_exp(long order);

/// (1 - x)^exponent, coefficient j = (-exponent)_j / j!.
[[nodiscard]] FormalSeries series_binomial(const Rational& exponent, long order);

}  // namespace hypercheck
