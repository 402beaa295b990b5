#pragma once

#include <span>

#include "hypercheck/big_float.hpp"
#include "hypercheck/rational.hpp"
#include "hypercheck/series_spec.hpp"

namespace hypercheck {

/// A floating point value together with a rigorous bound on its absolute error.
struct NumericValue {
  BigFloat value;
  BigFloat error_bound;
};

/// Result of a numeric series summation.
struct NumericSum {
  BigFloat value;
  BigFloat error_bound;
  long terms = 0;
  bool exact = false;  ///< routed through the exact evaluator

  [[nodiscard]] NumericValue enclosure() const { return {value, error_bound}; }
};

/// Exact sum of a terminating pFq at its (rational) argument.
///
/// Sums terms 0..n where n = spec.last_term_index(). Throws NotTerminating if
/// no top parameter is a non-positive integer and PoleError if a bottom
/// Pochhammer vanishes at a live index.
[[nodiscard]] Rational eval_terminating(const SeriesSpec& spec);

/// sum(bottom) - sum(top); the convergence margin of a (q+1)Fq at unit argument.
[[nodiscard]] Rational series_excess(const SeriesSpec& spec);

/// Smallest excess accepted by eval_3f2_unit_numeric.
inline constexpr long kMinimumNumericExcess = 3;

/// Default cap on the number of summed terms.
inline constexpr long kDefaultTermBudget = 1'500'000;

/// Numeric value of a (q+1)Fq at unit argument with |result - sum| <= target_abs_err.
///
/// Terms are accumulated at precision_bits + 64 bits, each term obtained from
/// the previous one by a single correctly rounded multiplication with the
/// exact rational term ratio. The tail after N terms is bounded rigorously:
/// once the ratio satisfies 0 <= t_{k+1}/t_k <= 1 - q/(k+1) for every k >= N
/// (q = excess + 1/2, certified through polynomial root bounds), the tail is at
/// most |t_N| (1 + (N+1)/(q-1)). Summation additionally runs for at least
/// 10 (1 + max|parameter|) terms.
///
/// Terminating specs go to eval_terminating. Throws ConvergenceTooSlow when the
/// excess is below kMinimumNumericExcess or the term budget runs out,
/// PrecisionInsufficient when the rounding bound exceeds half the target, and
/// PoleError for a non-positive integer bottom parameter.
[[nodiscard]] NumericSum eval_3f2_unit_numeric(const SeriesSpec& spec, long precision_bits,
                                               const Rational& target_abs_err,
                                               long term_budget = kDefaultTermBudget);

/// prod Gamma(numerator) / prod Gamma(denominator) through log-gamma, with a
/// propagated error bound. Throws PoleError for a non-positive integer argument.
[[nodiscard]] NumericValue gamma_ratio(std::span<const Rational> numerator,
                                       std::span<const Rational> denominator, long precision_bits);

/// value * factor, with the error bound widened by the rounding of the product.
[[nodiscard]] NumericValue scale(const NumericValue& value, const Rational& factor);

/// Exact rational as a NumericValue (error bound covers the single rounding).
[[nodiscard]] NumericValue to_numeric(const Rational& value, long precision_bits);

}  // namespace hypercheck
