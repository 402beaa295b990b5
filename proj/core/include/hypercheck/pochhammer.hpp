#pragma once

#include <string_view>

#include "hypercheck/rational.hpp"

namespace hypercheck {

/// Signed Pochhammer symbol (a)_k = Gamma(a+k)/Gamma(a).
///
/// k > 0 gives the rising product a(a+1)...(a+k-1), k == 0 gives 1, and
/// k < 0 uses (a)_k = (-1)^k / (1-a)_{-k}. Throws PoleError when the negative
/// branch divides by zero, i.e. a is a positive integer not exceeding -k.
[[nodiscard]] Rational pochhammer(const Rational& a, long k);

/// n! for n >= 0. Throws std::domain_error for negative n.
[[nodiscard]] Rational factorial(long n);

/// 1/n!, extended by the reciprocal-gamma convention 1/n! = 0 for n < 0.
[[nodiscard]] Rational reciprocal_factorial(long n);

/// 1/value, raising PoleError (tagged with `what`) instead of dividing by zero.
[[nodiscard]] Rational checked_reciprocal(const Rational& value, std::string_view what);

}  // namespace hypercheck
