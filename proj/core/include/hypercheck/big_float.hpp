#pragma once

#include <compare>
#include <string>

#include <mpfr.h>

#include "hypercheck/rational.hpp"

namespace hypercheck {

/// Binary floating point number with an explicit precision in bits.
///
/// Values are immutable from the caller's point of view; arithmetic between
/// operands of different precision rounds to the smaller of the two.
/// Results are rounded to nearest unless a rounding mode is passed.
class BigFloat {
 public:
  explicit BigFloat(long precision_bits = 192);
  BigFloat(const Rational& value, long precision_bits, mpfr_rnd_t rnd = MPFR_RNDN);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  /// 2^exponent, exact.
  static BigFloat power_of_two(long exponent, long precision_bits);

  [[nodiscard]] long precision() const { return static_cast<long>(mpfr_get_prec(value_)); }
  [[nodiscard]] int sign() const { return mpfr_sgn(value_); }
  [[nodiscard]] bool is_finite() const { return mpfr_number_p(value_) != 0; }
  [[nodiscard]] double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Scientific notation with `digits` significant decimal digits; 0 picks
  /// enough digits to round-trip the precision.
  [[nodiscard]] std::string str(int digits = 0) const;

  /// Same value re-rounded to `precision_bits`.
  [[nodiscard]] BigFloat with_precision(long precision_bits, mpfr_rnd_t rnd = MPFR_RNDN) const;

  [[nodiscard]] BigFloat abs() const;

  [[nodiscard]] static BigFloat add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  [[nodiscard]] static BigFloat sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  [[nodiscard]] static BigFloat mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);
  [[nodiscard]] static BigFloat div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return add(a, b, MPFR_RNDN); }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return sub(a, b, MPFR_RNDN); }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return mul(a, b, MPFR_RNDN); }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return div(a, b, MPFR_RNDN); }

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  [[nodiscard]] mpfr_srcptr get() const { return value_; }
  [[nodiscard]] mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace hypercheck
