#include "hypercheck/hyp_eval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hypercheck/errors.hpp"
#include "hypercheck/rat_poly.hpp"

namespace hypercheck {
namespace {

// Error bookkeeping runs at a small precision with upward rounding.
constexpr long kErrorBits = 64;

BigFloat upper(const BigFloat& x) { return x.abs().with_precision(kErrorBits, MPFR_RNDU); }

BigFloat add_up(const BigFloat& a, const BigFloat& b) { return BigFloat::add(a, b, MPFR_RNDU); }
BigFloat mul_up(const BigFloat& a, const BigFloat& b) { return BigFloat::mul(a, b, MPFR_RNDU); }

BigFloat upper(const Rational& x) { return BigFloat(x.abs(), kErrorBits, MPFR_RNDU); }

/// Unit roundoff bound 2^(1-p) for round-to-nearest at precision p.
BigFloat unit_roundoff(long precision_bits) { return BigFloat::power_of_two(1 - precision_bits, kErrorBits); }

long ceil_to_long(const Rational& x) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
  if (!out.fits_slong_p()) throw ConvergenceTooSlow("term index bound does not fit in a long");
  return out.get_si();
}

/// prod (params[i] + k) as a polynomial in k.
RatPoly shifted_product(const std::vector<Rational>& params) {
  RatPoly out({Rational(1)});
  for (const auto& p : params) out = out * RatPoly({p, Rational(1)});
  return out;
}

BigFloat from_double_up(double x) {
  BigFloat out(kErrorBits);
  mpfr_set_d(out.get(), x, MPFR_RNDU);
  return out;
}

/// Upper bound for |psi| near x, x not a non-positive integer.
/// For y > 0: |psi(y)| <= |ln y| + 1/y + 1. Negative x goes through the
/// reflection psi(x) = psi(1-x) - pi cot(pi x) with |pi cot(pi x)| <= pi/(2 d),
/// d the distance from x to the nearest integer.
double digamma_bound(const Rational& x) {
  const double xd = x.to_double();
  if (xd > 0) return std::abs(std::log(xd)) + 1.0 / xd + 1.0;
  const double y = 1.0 - xd;
  const double d = std::abs(xd - std::round(xd));
  return std::abs(std::log(y)) + 1.0 / y + 1.0 + 3.1415926535897932 / (2.0 * d);
}

void check_bottom_poles(const SeriesSpec& spec) {
  for (const auto& b : spec.bottom) {
    if (b.is_nonpositive_integer()) {
      const long index = 1 - *b.to_long();
      throw PoleError("bottom parameter " + b.str() + " of " + spec.str() + " vanishes in (b)_" +
                      std::to_string(index) + " at index " + std::to_string(index));
    }
  }
}

}  // namespace

Rational eval_terminating(const SeriesSpec& spec) {
  const auto last = spec.last_term_index();
  if (!last) throw NotTerminating(spec.str() + " has no non-positive integer top parameter");
  Rational term(1);
  Rational sum(1);
  for (long k = 0; k < *last; ++k) {
    Rational ratio = spec.argument;
    for (const auto& a : spec.top) ratio *= a + Rational(k);
    if (ratio.is_zero()) break;
    for (const auto& b : spec.bottom) {
      const Rational factor = b + Rational(k);
      if (factor.is_zero()) {
        throw PoleError("bottom parameter " + b.str() + " of " + spec.str() + " vanishes in (b)_" +
                        std::to_string(k + 1) + " at index " + std::to_string(k + 1));
      }
      ratio /= factor;
    }
    ratio /= Rational(k + 1);
    term *= ratio;
    sum += term;
  }
  return sum;
}

Rational series_excess(const SeriesSpec& spec) {
  if (spec.top.size() != spec.bottom.size() + 1 || spec.argument != Rational(1)) {
    throw std::invalid_argument("series_excess: " + spec.str() + " is not a (q+1)Fq at unit argument");
  }
  Rational excess;
  for (const auto& b : spec.bottom) excess += b;
  for (const auto& a : spec.top) excess -= a;
  return excess;
}

NumericValue to_numeric(const Rational& value, long precision_bits) {
  BigFloat v(value, precision_bits);
  BigFloat err = mul_up(upper(v), unit_roundoff(precision_bits));
  return {std::move(v), std::move(err)};
}

NumericValue scale(const NumericValue& value, const Rational& factor) {
  const long precision = value.value.precision();
  BigFloat product(precision);
  mpfr_mul_q(product.get(), value.value.get(), factor.gmp().get_mpq_t(), MPFR_RNDN);
  BigFloat err = mul_up(value.error_bound, upper(factor));
  err = add_up(err, mul_up(upper(product), unit_roundoff(precision)));
  return {std::move(product), std::move(err)};
}

NumericSum eval_3f2_unit_numeric(const SeriesSpec& spec, long precision_bits,
                                 const Rational& target_abs_err, long term_budget) {
  if (target_abs_err.sign() <= 0) throw std::invalid_argument("target_abs_err must be positive");
  const long working = precision_bits + 64;

  const Rational excess = series_excess(spec);
  if (spec.terminating()) {
    const auto exact = to_numeric(eval_terminating(spec), working);
    return {exact.value, exact.error_bound, *spec.last_term_index() + 1, true};
  }
  if (excess < Rational(kMinimumNumericExcess)) {
    throw ConvergenceTooSlow("series excess " + excess.str() + " of " + spec.str() + " is below " +
                             std::to_string(kMinimumNumericExcess));
  }
  check_bottom_poles(spec);

  // Certify 0 <= ratio(k) <= 1 - q/(k+1) for all k >= certified_from.
  const Rational q = excess + Rational(1, 2);
  const RatPoly numerator = shifted_product(spec.top);
  std::vector<Rational> denominator_params = spec.bottom;
  denominator_params.emplace_back(1);
  const RatPoly denominator = shifted_product(denominator_params);
  const RatPoly gap = denominator * RatPoly({Rational(1) - q, Rational(1)}) -
                      RatPoly({Rational(1), Rational(1)}) * numerator;
  if (gap.degree() < 1 || gap.coefficients().back().sign() <= 0) {
    throw std::logic_error("tail certificate polynomial has unexpected leading term");
  }
  long certified_from = ceil_to_long(q);
  for (const RatPoly* p : {&numerator, &denominator, &gap}) {
    certified_from = std::max(certified_from, ceil_to_long(cauchy_root_bound(*p)));
  }
  Rational largest_param;
  for (const auto& a : spec.top) largest_param = std::max(largest_param, a.abs());
  for (const auto& b : spec.bottom) largest_param = std::max(largest_param, b.abs());
  const long start = std::max(certified_from, ceil_to_long(Rational(10) * (Rational(1) + largest_param)));

  const BigFloat u = unit_roundoff(working);
  const BigFloat half_target(target_abs_err / Rational(2), kErrorBits, MPFR_RNDD);
  const BigFloat tail_factor_base = upper(Rational(1) / (q - Rational(1)));

  BigFloat term(Rational(1), working);
  BigFloat sum(working);
  BigFloat rounding(kErrorBits);
  mpq_class ratio;
  for (long k = 0;; ++k) {
    // Relative error of term k after k correctly rounded multiplications.
    const BigFloat term_rel = mul_up(BigFloat(Rational(2 * k), kErrorBits, MPFR_RNDU), u);
    const BigFloat term_abs = upper(term);
    const BigFloat term_bound = mul_up(term_abs, add_up(BigFloat(Rational(1), kErrorBits), term_rel));
    if (k >= start) {
      BigFloat factor = add_up(BigFloat(Rational(1), kErrorBits),
                               mul_up(BigFloat(Rational(k + 1), kErrorBits, MPFR_RNDU), tail_factor_base));
      const BigFloat tail = mul_up(term_bound, factor);
      if (tail <= half_target) {
        return {sum, add_up(tail, rounding), k, false};
      }
    }
    if (k >= term_budget) {
      throw ConvergenceTooSlow("term budget of " + std::to_string(term_budget) + " exhausted for " +
                               spec.str() + " (excess " + excess.str() + ")");
    }
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    rounding = add_up(rounding, mul_up(term_abs, term_rel));
    rounding = add_up(rounding, mul_up(upper(sum), u));
    if (rounding > half_target) {
      throw PrecisionInsufficient("rounding error bound " + rounding.str(6) + " exceeds half of target " +
                                  target_abs_err.str() + " after " + std::to_string(k + 1) + " terms");
    }

    ratio = 1;
    for (const auto& a : spec.top) ratio *= a.gmp() + k;
    for (const auto& b : spec.bottom) ratio /= b.gmp() + k;
    ratio /= k + 1;
    mpfr_mul_q(term.get(), term.get(), ratio.get_mpq_t(), MPFR_RNDN);
  }
}

NumericValue gamma_ratio(std::span<const Rational> numerator, std::span<const Rational> denominator,
                         long precision_bits) {
  const BigFloat u = unit_roundoff(precision_bits);
  BigFloat log_sum(precision_bits);
  BigFloat log_error(kErrorBits);
  int sign = 1;
  auto accumulate = [&](const Rational& x, bool subtract) {
    if (x.is_nonpositive_integer()) throw PoleError("Gamma(" + x.str() + ") has a pole");
    BigFloat arg(x, precision_bits);
    BigFloat lg(precision_bits);
    int lg_sign = 1;
    mpfr_lgamma(lg.get(), &lg_sign, arg.get(), MPFR_RNDN);
    sign *= lg_sign;
    // Rounding x moves lnGamma by at most |psi| |x| u.
    if (!x.is_integer()) {
      const BigFloat shift = from_double_up(digamma_bound(x) * std::abs(x.to_double()) * 1.01);
      log_error = add_up(log_error, mul_up(shift, u));
    }
    log_error = add_up(log_error, mul_up(upper(lg), u));
    log_sum = subtract ? log_sum - lg : log_sum + lg;
    log_error = add_up(log_error, mul_up(upper(log_sum), u));
  };
  for (const auto& x : numerator) accumulate(x, false);
  for (const auto& x : denominator) accumulate(x, true);

  BigFloat value(precision_bits);
  mpfr_exp(value.get(), log_sum.get(), MPFR_RNDN);
  if (sign < 0) mpfr_neg(value.get(), value.get(), MPFR_RNDN);
  if (log_error > BigFloat(Rational(1, 4), kErrorBits)) {
    throw PrecisionInsufficient("log-gamma error bound too large for a meaningful gamma ratio");
  }
  // |e^d - 1| <= 2|d| for |d| <= 1/4, plus the rounding of exp itself.
  BigFloat rel = add_up(mul_up(BigFloat(Rational(2), kErrorBits), log_error), u);
  rel = mul_up(rel, BigFloat(Rational(101, 100), kErrorBits, MPFR_RNDU));
  return {value, mul_up(upper(value), rel)};
}

}  // namespace hypercheck
