#include "hypercheck/identities.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "hypercheck/errors.hpp"
#include "hypercheck/pochhammer.hpp"

namespace hypercheck {
namespace {

Rational F(std::vector<Rational> top, std::vector<Rational> bottom) {
  return eval_terminating(hyp(std::move(top), std::move(bottom)));
}

/// Expansion of 1F1(a; b; sign*x) (or 2F1 when two tops are given).
FormalSeries S(std::vector<Rational> top, std::vector<Rational> bottom, int sign, long order) {
  return series_from_hyp(hyp(std::move(top), std::move(bottom), Rational(sign)), order);
}

Rational inv(const Rational& value, std::string_view what) { return checked_reciprocal(value, what); }

long positive_part(long x) { return std::max(0L, x); }

long require_nonpositive_integer(const Rational& value, std::string_view name) {
  if (!value.is_nonpositive_integer()) {
    throw InvalidHypothesis(std::string(name) + " = " + value.str() +
                            " must be a non-positive integer for exact evaluation");
  }
  return -*value.to_long();
}

void require_nonnegative(long value, std::string_view name) {
  if (value < 0) throw InvalidHypothesis(std::string(name) + " = " + std::to_string(value) + " must be >= 0");
}

}  // namespace

std::string_view to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::thm1_rhs_index: return "thm1-rhs-index";
    case Mutation::km_rhs_index: return "km-rhs-index";
    case Mutation::cor1_rhs_sign: return "cor1-rhs-sign";
    case Mutation::thm2_second_index: return "thm2-second-index";
    case Mutation::thm4_rhs_sign: return "thm4-rhs-sign";
  }
  return "unknown";
}

std::optional<Mutation> mutation_from_string(std::string_view name) {
  for (Mutation m : {Mutation::none, Mutation::thm1_rhs_index, Mutation::km_rhs_index, Mutation::cor1_rhs_sign,
                     Mutation::thm2_second_index, Mutation::thm4_rhs_sign}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// THM1

ScalarValue lhs_thm1(const Rational& a, const Rational& b, const Rational& c, long l, long r, EvalMode mode,
                     const NumericSettings& numeric) {
  require_nonnegative(l, "l");
  const SeriesSpec spec = hyp({a, b - Rational(r), c}, {a - Rational(l), b + Rational(1)});
  if (mode == EvalMode::exact || c.is_integer()) {
    require_nonpositive_integer(c, "c");
    const Rational value = eval_terminating(spec);
    if (mode == EvalMode::exact) return value;
    return to_numeric(value, numeric.precision_bits + 64);
  }
  const auto sum = eval_3f2_unit_numeric(spec, numeric.precision_bits, numeric.target_abs_err);
  return sum.enclosure();
}

ScalarValue rhs_thm1(const Rational& a, const Rational& b, const Rational& c, long l, long r, EvalMode mode,
                     const NumericSettings& numeric, Mutation mutation) {
  require_nonnegative(l, "l");
  const long working = numeric.precision_bits + 64;
  if (r < 0) {
    // 1/r! = 0 annihilates the right side.
    if (mode == EvalMode::exact) return Rational(0);
    return NumericValue{BigFloat(working), BigFloat(64)};
  }
  const long index_shift = mutation == Mutation::thm1_rhs_index ? 1 : 0;
  Rational rational_part = sign_power(l) * pochhammer(a - c - Rational(l), r + index_shift) *
                           pochhammer(Rational(1) - b, r) * inv(pochhammer(Rational(1) - a, l), "(1-a)_l") *
                           inv(pochhammer(a - b, r - l), "(a-b)_{r-l}") * reciprocal_factorial(r);
  rational_part *= F({Rational(-r), Rational(1) - a, c - b},
                     {Rational(1) - b, Rational(1) - a + c + Rational(l) - Rational(r)});

  if (mode == EvalMode::exact || c.is_integer()) {
    const long n = require_nonpositive_integer(c, "c");
    // G(1-c) G(1+b) / G(1+b-c) = n! / (1+b)_n for c = -n.
    const Rational value = rational_part * factorial(n) * inv(pochhammer(Rational(1) + b, n), "(1+b)_n");
    if (mode == EvalMode::exact) return value;
    return to_numeric(value, working);
  }
  const std::array<Rational, 2> numerator{Rational(1) - c, Rational(1) + b};
  const std::array<Rational, 1> denominator{Rational(1) + b - c};
  return scale(gamma_ratio(numerator, denominator, working), rational_part);
}

// ---------------------------------------------------------------------------
// Karlsson-Minton, Karlsson, their combination, and the terminating transformation

ExactPair sides_km(const Rational& beta, const Rational& alpha, const Rational& gamma, long l, Mutation mutation) {
  require_nonnegative(l, "l");
  const long n = require_nonpositive_integer(gamma, "gamma");
  const long index_shift = mutation == Mutation::km_rhs_index ? 1 : 0;
  Rational lhs = F({beta, alpha + Rational(l), gamma}, {beta + Rational(1), alpha});
  Rational rhs = factorial(n) * inv(pochhammer(Rational(1) + beta, n), "(1+beta)_n") *
                 pochhammer(alpha - beta, l + index_shift) * inv(pochhammer(alpha, l), "(alpha)_l");
  return {std::move(lhs), std::move(rhs)};
}

ExactPair sides_k74(const Rational& beta, const Rational& delta, const Rational& gamma, const Rational& eta,
                    long r) {
  require_nonnegative(r, "r");
  require_nonpositive_integer(gamma, "gamma");
  Rational lhs = F({beta, delta, gamma}, {beta + Rational(r + 1), eta});
  Rational sum;
  for (long j = 0; j <= r; ++j) {
    const Rational bj = beta + Rational(j);
    sum += pochhammer(Rational(-r), j) * inv(bj, "beta+j") * reciprocal_factorial(j) *
           F({bj, delta, gamma}, {bj + Rational(1), eta});
  }
  Rational rhs = pochhammer(beta, r + 1) * reciprocal_factorial(r) * sum;
  return {std::move(lhs), std::move(rhs)};
}

PbmChain pbm_chain(const Rational& beta, const Rational& alpha, const Rational& gamma, long l, long r) {
  require_nonnegative(l, "l");
  require_nonnegative(r, "r");
  const long n = require_nonpositive_integer(gamma, "gamma");
  const Rational outer = pochhammer(beta, r + 1) * reciprocal_factorial(r);
  const Rational inv_alpha_l = inv(pochhammer(alpha, l), "(alpha)_l");

  PbmChain chain;
  chain.lhs = F({beta, alpha + Rational(l), gamma}, {beta + Rational(r + 1), alpha});
  Rational k74;
  Rational km;
  for (long j = 0; j <= r; ++j) {
    const Rational bj = beta + Rational(j);
    const Rational weight = pochhammer(Rational(-r), j) * inv(bj, "beta+j") * reciprocal_factorial(j);
    k74 += weight * F({bj, alpha + Rational(l), gamma}, {bj + Rational(1), alpha});
    // G(1-gamma) G(beta+j+1) / G(1+beta+j-gamma) = n! / (beta+j+1)_n.
    km += weight * factorial(n) * inv(pochhammer(bj + Rational(1), n), "(beta+j+1)_n") *
          pochhammer(alpha - bj, l) * inv_alpha_l;
  }
  chain.k74_sum = outer * k74;
  chain.km_sum = outer * km;
  // G(1-gamma) G(beta) / G(1+beta-gamma) = n! / (beta)_{n+1}.
  chain.rhs = outer * pochhammer(alpha - beta, l) * inv_alpha_l * factorial(n) *
              inv(pochhammer(beta, n + 1), "(beta)_{n+1}") *
              F({Rational(-r), beta, Rational(1) + beta - alpha},
                {Rational(1) + beta - gamma, Rational(1) + beta - alpha - Rational(l)});
  return chain;
}

ExactPair sides_pbm(const Rational& beta, const Rational& alpha, const Rational& gamma, long l, long r) {
  auto chain = pbm_chain(beta, alpha, gamma, l, r);
  return {std::move(chain.lhs), std::move(chain.rhs)};
}

ExactPair sides_rjrjr(long r, const Rational& A, const Rational& B, const Rational& D, const Rational& E) {
  require_nonnegative(r, "r");
  const Rational rr(r);
  Rational lhs = F({-rr, A, B}, {D, E});
  Rational rhs = pochhammer(D - A, r) * pochhammer(B, r) * inv(pochhammer(D, r), "(D)_r") *
                 inv(pochhammer(E, r), "(E)_r") *
                 F({-rr, E - B, Rational(1) - D - rr}, {Rational(1) - B - rr, Rational(1) + A - D - rr});
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// COR1

Rational lhs_cor1(const Rational& alpha, const Rational& gamma, long m1, long m2, long n) {
  require_nonnegative(n, "n");
  const Rational one(1);
  const Rational nn(n);
  const Rational prefactor = pochhammer(one - gamma, m2) * pochhammer(gamma - alpha, m1 - m2) *
                             pochhammer(alpha - Rational(m1), n) *
                             inv(pochhammer(gamma - Rational(m2), n), "(gamma-m2)_n") * reciprocal_factorial(n);
  return prefactor * F({-nn, one - alpha, one - gamma + Rational(m2) - nn},
                       {Rational(2) - gamma, one - alpha + Rational(m1) - nn});
}

Rational rhs_cor1(const Rational& alpha, const Rational& gamma, long m1, long m2, long n, Mutation mutation) {
  require_nonnegative(n, "n");
  // 1/(n-m2)! = 0 for n < m2.
  if (n < m2) return Rational(0);
  const long sign_exponent = n - m2 + (mutation == Mutation::cor1_rhs_sign ? 1 : 0);
  const Rational one(1);
  const Rational nn(n);
  const Rational prefactor = sign_power(sign_exponent) * pochhammer(one - alpha, n + m1 - m2) *
                             inv(pochhammer(Rational(2) - gamma, n), "(2-gamma)_n") * reciprocal_factorial(n - m2);
  return prefactor * F({Rational(m2) - nn, alpha, gamma - one - nn},
                       {gamma, alpha + Rational(m2 - m1) - nn});
}

// ---------------------------------------------------------------------------
// THM2

long remainder_cutoff(long m1, long m2) { return std::max(std::labs(m1), std::labs(m2 - m1)); }

Rational product_coeff_L(const Rational& alpha, const Rational& gamma, long m1, long m2, long n) {
  const long top = n - positive_part(m2);
  if (top < 0) return Rational(0);
  const Rational one(1);
  const Rational two(2);
  Rational sum;
  for (long k = 0; k <= top; ++k) {
    const long j = top - k;
    sum += pochhammer(alpha, k) * pochhammer(one - alpha + Rational(m1), j) * sign_power(j) *
           inv(pochhammer(gamma, k), "(gamma)_k") *
           inv(pochhammer(two - gamma + Rational(m2), j), "(2-gamma+m2)_j") * reciprocal_factorial(k) *
           reciprocal_factorial(j);
  }
  return pochhammer(one - alpha, m1) * inv(pochhammer(two - gamma, m2), "(2-gamma)_{m2}") * sum;
}

Rational product_coeff_R(const Rational& alpha, const Rational& gamma, long m1, long m2, long n) {
  const long top = n - positive_part(-m2);
  if (top < 0) return Rational(0);
  const Rational one(1);
  const Rational two(2);
  Rational sum;
  for (long k = 0; k <= top; ++k) {
    const long j = top - k;
    sum += pochhammer(one - alpha, k) * pochhammer(alpha - Rational(m1), j) * sign_power(k) *
           inv(pochhammer(two - gamma, k), "(2-gamma)_k") *
           inv(pochhammer(gamma - Rational(m2), j), "(gamma-m2)_j") * reciprocal_factorial(k) *
           reciprocal_factorial(j);
  }
  return pochhammer(one - gamma, m2) * pochhammer(gamma - alpha, m1 - m2) * sum;
}

Rational product_coeff_L_reduced(const Rational& alpha, const Rational& gamma, long m1, long m2, long n) {
  const Rational one(1);
  const Rational two(2);
  const Rational nn(n);
  if (m2 >= 0) {
    if (n < m2) return Rational(0);
    return sign_power(n - m2) * pochhammer(one - alpha, n + m1 - m2) *
           inv(pochhammer(two - gamma, n), "(2-gamma)_n") * reciprocal_factorial(n - m2) *
           F({Rational(m2) - nn, alpha, gamma - one - nn}, {gamma, alpha + Rational(m2 - m1) - nn});
  }
  const long p1 = -m1;
  const long p2 = -m2;
  return sign_power(p1 - p2 + n) * pochhammer(gamma - one, p2) * pochhammer(one - alpha - Rational(p1), n) *
         inv(pochhammer(alpha, p1), "(alpha)_{m1'}") *
         inv(pochhammer(two - gamma - Rational(p2), n), "(2-gamma-m2')_n") * reciprocal_factorial(n) *
         F({-nn, alpha, gamma - one + Rational(p2) - nn}, {gamma, alpha + Rational(p1) - nn});
}

Rational product_coeff_R_reduced(const Rational& alpha, const Rational& gamma, long m1, long m2, long n) {
  const Rational one(1);
  const Rational two(2);
  const Rational nn(n);
  if (m2 >= 0) {
    return pochhammer(one - gamma, m2) * pochhammer(gamma - alpha, m1 - m2) * pochhammer(alpha - Rational(m1), n) *
           inv(pochhammer(gamma - Rational(m2), n), "(gamma-m2)_n") * reciprocal_factorial(n) *
           F({-nn, one - alpha, one - gamma + Rational(m2) - nn}, {two - gamma, one - alpha + Rational(m1) - nn});
  }
  const long p1 = -m1;
  const long p2 = -m2;
  if (n < p2) return Rational(0);
  return sign_power(p1) * pochhammer(alpha + Rational(p1), n - p2) *
         inv(pochhammer(one - gamma + alpha, p1 - p2), "(1-gamma+alpha)_{m1'-m2'}") *
         inv(pochhammer(gamma, p2), "(gamma)_{m2'}") *
         inv(pochhammer(gamma + Rational(p2), n - p2), "(gamma+m2')_{n-m2'}") * reciprocal_factorial(n - p2) *
         F({Rational(p2) - nn, one - alpha, one - gamma - nn}, {two - gamma, one - alpha + Rational(p2 - p1) - nn});
}

RatPoly compute_Pr(const Rational& alpha, const Rational& gamma, long m1, long m2) {
  if (m1 == 0 && m2 == 0) throw InvalidHypothesis("m1^2+m2^2>0 violated");
  const long cutoff = remainder_cutoff(m1, m2);
  std::vector<Rational> coeffs;
  coeffs.reserve(static_cast<std::size_t>(cutoff));
  for (long n = 0; n < cutoff; ++n) {
    coeffs.push_back(product_coeff_L(alpha, gamma, m1, m2, n) - product_coeff_R(alpha, gamma, m1, m2, n));
  }
  return RatPoly(std::move(coeffs));
}

FormalSeries thm2_lhs_series(const Rational& alpha, const Rational& gamma, long m1, long m2, long order,
                             Mutation mutation) {
  if (m1 == 0 && m2 == 0) throw InvalidHypothesis("m1^2+m2^2>0 violated");
  const Rational one(1);
  const Rational two(2);
  const Rational first_scale = pochhammer(one - alpha, m1) * inv(pochhammer(two - gamma, m2), "(2-gamma)_{m2}");
  const long index_shift = mutation == Mutation::thm2_second_index ? 1 : 0;
  const Rational second_scale = pochhammer(one - gamma, m2) * pochhammer(gamma - alpha, m1 - m2 + index_shift);

  const FormalSeries first = series_shift_mul(
      series_mul(S({alpha}, {gamma}, +1, order), S({one - alpha + Rational(m1)}, {two - gamma + Rational(m2)}, -1, order)),
      positive_part(m2), first_scale);
  const FormalSeries second = series_shift_mul(
      series_mul(S({one - alpha}, {two - gamma}, -1, order), S({alpha - Rational(m1)}, {gamma - Rational(m2)}, +1, order)),
      positive_part(-m2), second_scale);
  return first - second;
}

SeriesPair sides_thm2(const Rational& alpha, const Rational& gamma, long m1, long m2, long order, Mutation mutation) {
  FormalSeries lhs = thm2_lhs_series(alpha, gamma, m1, m2, order, mutation);
  FormalSeries rhs = FormalSeries::from_polynomial(compute_Pr(alpha, gamma, m1, m2), order);
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// Printed examples

ExampleShift example_shift(int which) {
  switch (which) {
    case 1: return {1, 1};
    case 2: return {0, -1};
    case 3: return {1, 2};
    case 4: return {1, 0};
    case 5: return {-1, 1};
    case 6: return {2, 4};
    default: throw std::out_of_range("example index must be in 1..6");
  }
}

Rational example_normalization(int which, const Rational& alpha, const Rational& gamma) {
  const Rational one(1);
  switch (which) {
    case 1: return inv(gamma - one, "gamma-1");
    case 2: return inv(one - gamma, "1-gamma");
    case 3: return (one + alpha - gamma) * inv(pochhammer(one - gamma, 2), "(1-gamma)_2");
    case 4: return inv(one - gamma, "1-gamma");
    case 5: return -alpha * pochhammer(one + alpha - gamma, 2) * inv(one - gamma, "1-gamma");
    case 6: return pochhammer(one + alpha - gamma, 2) * inv(one - gamma, "1-gamma");
    default: throw std::out_of_range("example index must be in 1..6");
  }
}

RatPoly example_printed_rhs(int which, const Rational& alpha, const Rational& gamma) {
  switch (which) {
    case 1:
    case 2:
    case 3:
    case 4: return RatPoly({Rational(1)});
    case 5: return RatPoly({alpha, Rational(1)});
    case 6:
      return RatPoly({pochhammer(gamma - Rational(4), 3), (Rational(2) * alpha - gamma) * (gamma - Rational(3))});
    default: throw std::out_of_range("example index must be in 1..6");
  }
}

SeriesPair sides_example(int which, const Rational& alpha, const Rational& gamma, long order) {
  const Rational one(1);
  const Rational a = alpha;
  const Rational g = gamma;
  FormalSeries lhs(order);
  switch (which) {
    case 1: {
      const Rational c = (a - one) * inv((g - one) * (g - Rational(2)), "(gamma-1)(gamma-2)");
      lhs = series_shift_mul(series_mul(S({a}, {g}, +1, order), S({Rational(2) - a}, {Rational(3) - g}, -1, order)), 1, c) +
            series_mul(S({one - a}, {Rational(2) - g}, -1, order), S({a - one}, {g - one}, +1, order));
      break;
    }
    case 2: {
      const Rational c = (g - a) * inv(g * (g - one), "gamma(gamma-1)");
      lhs = series_mul(S({a}, {g}, +1, order), S({one - a}, {one - g}, -1, order)) -
            series_shift_mul(series_mul(S({one - a}, {Rational(2) - g}, -1, order), S({a}, {g + one}, +1, order)), 1, c);
      break;
    }
    case 3: {
      const Rational c = (one - a) * (g - a - one) *
                         inv((g - Rational(2)) * pochhammer(one - g, 3), "(gamma-2)(1-gamma)_3");
      lhs = series_shift_mul(series_mul(S({a}, {g}, +1, order), S({Rational(2) - a}, {Rational(4) - g}, -1, order)), 2, c) +
            series_mul(S({one - a}, {Rational(2) - g}, -1, order), S({a - one}, {g - Rational(2)}, +1, order));
      break;
    }
    case 4: {
      const Rational d = inv(one - g, "1-gamma");
      lhs = (one - a) * d * series_mul(S({a}, {g}, +1, order), S({Rational(2) - a}, {Rational(2) - g}, -1, order)) -
            (g - a) * d * series_mul(S({one - a}, {Rational(2) - g}, -1, order), S({a - one}, {g}, +1, order));
      break;
    }
    case 5: {
      const Rational c = pochhammer(g - a - Rational(2), 2) * inv(pochhammer(one - g, 2), "(1-gamma)_2");
      lhs = series_shift_mul(series_mul(S({a}, {g}, +1, order), S({-a}, {Rational(3) - g}, -1, order)), 1, c) +
            a * series_mul(S({one - a}, {Rational(2) - g}, -1, order), S({a + one}, {g - one}, +1, order));
      break;
    }
    case 6: {
      const Rational c = pochhammer(g - a - Rational(2), 2) * pochhammer(one - a, 2) *
                         inv(pochhammer(one - g, 5), "(1-gamma)_5");
      lhs = series_shift_mul(series_mul(S({a}, {g}, +1, order), S({Rational(3) - a}, {Rational(6) - g}, -1, order)), 4, c) -
            pochhammer(Rational(2) - g, 3) *
                series_mul(S({one - a}, {Rational(2) - g}, -1, order), S({a - Rational(2)}, {g - Rational(4)}, +1, order));
      break;
    }
    default: throw std::out_of_range("example index must be in 1..6");
  }
  FormalSeries rhs = FormalSeries::from_polynomial(example_printed_rhs(which, alpha, gamma), order);
  return {std::move(lhs), std::move(rhs)};
}

// ---------------------------------------------------------------------------
// THM4 / LEM3

SeriesPair sides_thm4(const Rational& mu, const Rational& beta, long order, Mutation mutation) {
  const Rational one(1);
  const Rational mb = mu + beta;
  const Rational rhs_mu = mutation == Mutation::thm4_rhs_sign ? -mu : mu;
  const FormalSeries f_mu1 = S({one}, {mu + one}, +1, order);
  const FormalSeries f_mb1 = S({one}, {mb + one}, +1, order);
  FormalSeries lhs = mb * series_mul(f_mu1, S({one}, {mb}, +1, order)) - mu * series_mul(S({one}, {mu}, +1, order), f_mb1);
  FormalSeries rhs = mb * f_mu1 - rhs_mu * f_mb1;
  return {std::move(lhs), std::move(rhs)};
}

ExactPair sides_lem3(const Rational& mu, const Rational& beta, long m) {
  require_nonnegative(m, "m");
  const Rational mb = mu + beta;
  Rational lhs;
  for (long k = 0; k <= m; ++k) {
    lhs += inv(pochhammer(mu, k + 1) * pochhammer(mb, m - k), "(mu)_{k+1}(mu+beta)_{m-k}") -
           inv(pochhammer(mu, k) * pochhammer(mb, m - k + 1), "(mu)_k(mu+beta)_{m-k+1}");
  }
  Rational rhs = (pochhammer(mb, m + 1) - pochhammer(mu, m + 1)) *
                 inv(pochhammer(mu, m + 1) * pochhammer(mb, m + 1), "(mu)_{m+1}(mu+beta)_{m+1}");
  return {std::move(lhs), std::move(rhs)};
}

std::optional<long> thm4_lem3_link_mismatch(const Rational& mu, const Rational& beta, long order) {
  const auto thm4 = sides_thm4(mu, beta, order);
  const Rational normalization = mu * (mu + beta);
  for (long m = 0; m < order; ++m) {
    const auto lem3 = sides_lem3(mu, beta, m);
    if (thm4.lhs[m] != normalization * lem3.lhs || thm4.rhs[m] != normalization * lem3.rhs) return m;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Classical fixtures

SeriesPair sides_euler(const Rational& a, const Rational& b, const Rational& c, long order) {
  const Rational one(1);
  const Rational two(2);
  FormalSeries lhs = series_mul(S({a, b}, {c}, +1, order), S({one - a, one - b}, {two - c}, +1, order));
  FormalSeries rhs =
      series_mul(S({c - a, c - b}, {c}, +1, order), S({one + a - c, one + b - c}, {two - c}, +1, order));
  return {std::move(lhs), std::move(rhs)};
}

SeriesPair sides_gauss(const Rational& a, const Rational& b, const Rational& c, long order) {
  const Rational one(1);
  const Rational two(2);
  const Rational weight = a * b * (c - a) * (c - b) * inv(c * c * (c * c - one), "c^2(c^2-1)");
  FormalSeries lhs = series_mul(S({a, b}, {c}, +1, order), S({-a, -b}, {-c}, +1, order)) -
                     series_shift_mul(series_mul(S({one - a, one - b}, {two - c}, +1, order),
                                                 S({one + a, one + b}, {two + c}, +1, order)),
                                      2, weight);
  FormalSeries rhs = FormalSeries::from_polynomial(RatPoly({one}), order);
  return {std::move(lhs), std::move(rhs)};
}

SeriesPair sides_kummer(const Rational& a, const Rational& b, long order) {
  FormalSeries lhs = S({a}, {b}, +1, order);
  FormalSeries rhs = series_mul(series_exp(order), S({b - a}, {b}, -1, order));
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace hypercheck
