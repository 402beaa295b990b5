#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hypercheck {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Text form is "p/q", or "p" when q == 1, with the sign carried on the
/// numerator. Every arithmetic result is canonicalized before it is returned,
/// so equality is structural.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(long numerator, long denominator);

  explicit Rational(mpq_class value);

  /// Parses "p/q", "p", "-p/q" or "+p/q". Whitespace around the text is ignored.
  /// Throws ParseError on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  /// Parses a decimal such as "1e-30" or "0.125" exactly.
  static Rational parse_decimal(std::string_view text);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_integer() const;

  /// Integer value when the rational is integral and fits in a long.
  [[nodiscard]] std::optional<long> to_long() const;

  /// True for 0, -1, -2, ...
  [[nodiscard]] bool is_nonpositive_integer() const { return is_integer() && sign() <= 0; }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] const mpq_class& gmp() const { return value_; }

  [[nodiscard]] Rational abs() const;
  [[nodiscard]] Rational reciprocal() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// (-1)^k as a Rational.
[[nodiscard]] Rational sign_power(long k);

}  // namespace hypercheck
