#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypercheck/rational.hpp"

namespace hypercheck {

/// Univariate polynomial over the rationals, coefficient index = degree.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients);

  /// The monomial scale * t^power.
  static RatPoly monomial(const Rational& scale, long power);

  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of t^k, zero beyond the degree.
  [[nodiscard]] Rational coefficient(long k) const;

  /// Horner evaluation.
  [[nodiscard]] Rational eval(const Rational& t) const;

  /// Ascending-degree text such as "1/3 + t" or "-2 + 3/5*t^2"; "0" for zero.
  [[nodiscard]] std::string str(const std::string& variable = "t") const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const Rational& scale);

  friend RatPoly operator+(RatPoly lhs, const RatPoly& rhs) { return lhs += rhs; }
  friend RatPoly operator-(RatPoly lhs, const RatPoly& rhs) { return lhs -= rhs; }
  friend RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
  friend RatPoly operator*(RatPoly lhs, const Rational& scale) { return lhs *= scale; }

  friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

[[nodiscard]] inline Rational poly_eval(const RatPoly& p, const Rational& t) { return p.eval(t); }

/// Upper bound B such that every real root x of p satisfies |x| < B (Cauchy).
/// p must be non-constant.
[[nodiscard]] Rational cauchy_root_bound(const RatPoly& p);

}  // namespace hypercheck
