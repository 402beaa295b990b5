#pragma once

#include <optional>
#include <string_view>
#include <variant>

#include "hypercheck/formal_series.hpp"
#include "hypercheck/hyp_eval.hpp"
#include "hypercheck/rat_poly.hpp"
#include "hypercheck/rational.hpp"

namespace hypercheck {

/// Deliberate single-site corruptions of catalog evaluators. Used only to
/// check that the verification harness notices a broken identity.
enum class Mutation {
  none,
  thm1_rhs_index,     ///< (a-c-l)_r -> (a-c-l)_{r+1} on the right side of THM1
  km_rhs_index,       ///< (alpha-beta)_l -> (alpha-beta)_{l+1} on the right side of KM
  cor1_rhs_sign,      ///< (-1)^{n-m2} -> (-1)^{n-m2+1} on the right side of COR1
  thm2_second_index,  ///< (gamma-alpha)_{m1-m2} -> (gamma-alpha)_{m1-m2+1} in the THM2 left side
  thm4_rhs_sign,      ///< -mu -> +mu on the right side of THM4
};

[[nodiscard]] std::string_view to_string(Mutation m);
[[nodiscard]] std::optional<Mutation> mutation_from_string(std::string_view name);

enum class EvalMode { exact, numeric };

struct NumericSettings {
  long precision_bits = 192;
  Rational target_abs_err = Rational(mpq_class(1, mpz_class("1000000000000000000000000000000")));
};

/// Either an exact rational or a numeric enclosure.
using ScalarValue = std::variant<Rational, NumericValue>;

struct ExactPair {
  Rational lhs;
  Rational rhs;
};

struct SeriesPair {
  FormalSeries lhs;
  FormalSeries rhs;
};

// ---------------------------------------------------------------------------
// 3F2(1) summation with two integral parameter differences (THM1)
//
//   3F2(a, b-r, c; a-l, b+1; 1)
//     = (-1)^l G(1-c) G(1+b) (a-c-l)_r (1-b)_r / (G(1+b-c) (1-a)_l (a-b)_{r-l} r!)
//       * 3F2(-r, 1-a, c-b; 1-b, 1-a+c+l-r; 1)
//
// Exact mode needs c = -n, where the gamma quotient is n!/(1+b)_n. Numeric mode
// handles non-integer c < r - l. 1/r! = 0 for r < 0.
// ---------------------------------------------------------------------------

[[nodiscard]] ScalarValue lhs_thm1(const Rational& a, const Rational& b, const Rational& c, long l, long r,
                                   EvalMode mode, const NumericSettings& numeric = {});
[[nodiscard]] ScalarValue rhs_thm1(const Rational& a, const Rational& b, const Rational& c, long l, long r,
                                   EvalMode mode, const NumericSettings& numeric = {},
                                   Mutation mutation = Mutation::none);

// ---------------------------------------------------------------------------
// Summation formulas used to derive THM1 (exact, gamma = -n)
// ---------------------------------------------------------------------------

/// 3F2(beta, alpha+l, gamma; beta+1, alpha; 1) = n!/(1+beta)_n (alpha-beta)_l/(alpha)_l, gamma = -n.
[[nodiscard]] ExactPair sides_km(const Rational& beta, const Rational& alpha, const Rational& gamma, long l,
                                 Mutation mutation = Mutation::none);

/// 3F2(beta, delta, gamma; beta+r+1, eta; 1) as a finite j-sum of 3F2(beta+j, ...; beta+j+1, eta; 1).
[[nodiscard]] ExactPair sides_k74(const Rational& beta, const Rational& delta, const Rational& gamma,
                                  const Rational& eta, long r);

/// The four expressions of the combined Karlsson-Minton / Karlsson chain.
struct PbmChain {
  Rational lhs;      ///< 3F2(beta, alpha+l, gamma; beta+r+1, alpha; 1)
  Rational k74_sum;  ///< j-sum of 3F2(beta+j, alpha+l, gamma; beta+j+1, alpha; 1)
  Rational km_sum;   ///< j-sum with each inner 3F2 replaced by its closed form
  Rational rhs;      ///< prefactor * 3F2(-r, beta, 1+beta-alpha; 1+beta-gamma, 1+beta-alpha-l; 1)
};
[[nodiscard]] PbmChain pbm_chain(const Rational& beta, const Rational& alpha, const Rational& gamma, long l,
                                 long r);
[[nodiscard]] ExactPair sides_pbm(const Rational& beta, const Rational& alpha, const Rational& gamma, long l,
                                  long r);

/// Terminating transformation
///   3F2(-r, A, B; D, E; 1) = (D-A)_r (B)_r / ((D)_r (E)_r) 3F2(-r, E-B, 1-D-r; 1-B-r, 1+A-D-r; 1).
[[nodiscard]] ExactPair sides_rjrjr(long r, const Rational& A, const Rational& B, const Rational& D,
                                    const Rational& E);

// ---------------------------------------------------------------------------
// Terminating 3F2 transformation (COR1); both sides vanish for n < m2.
// ---------------------------------------------------------------------------

[[nodiscard]] Rational lhs_cor1(const Rational& alpha, const Rational& gamma, long m1, long m2, long n);
[[nodiscard]] Rational rhs_cor1(const Rational& alpha, const Rational& gamma, long m1, long m2, long n,
                                Mutation mutation = Mutation::none);

// ---------------------------------------------------------------------------
// Two-shift Kummer product reduction (THM2)
//
//   (1-alpha)_{m1} t^{(m2)+} / (2-gamma)_{m2} 1F1(alpha; gamma; t) 1F1(1-alpha+m1; 2-gamma+m2; -t)
//   - (1-gamma)_{m2} (gamma-alpha)_{m1-m2} t^{(-m2)+} 1F1(1-alpha; 2-gamma; -t) 1F1(alpha-m1; gamma-m2; t)
//   = P(t),  deg P <= max(|m1|, |m2-m1|) - 1.
// ---------------------------------------------------------------------------

/// max(|m1|, |m2-m1|): every coefficient at or above this index cancels.
[[nodiscard]] long remainder_cutoff(long m1, long m2);

/// Coefficient of t^n in the first product, as the written finite sum.
[[nodiscard]] Rational product_coeff_L(const Rational& alpha, const Rational& gamma, long m1, long m2, long n);
/// Coefficient of t^n in the second product (including its prefactor), as the written finite sum.
[[nodiscard]] Rational product_coeff_R(const Rational& alpha, const Rational& gamma, long m1, long m2, long n);

/// L(n) through the terminating-3F2 rewrite (separate branches for m2 >= 0 and m2 < 0).
[[nodiscard]] Rational product_coeff_L_reduced(const Rational& alpha, const Rational& gamma, long m1, long m2,
                                               long n);
/// R(n) through the terminating-3F2 rewrite (separate branches for m2 >= 0 and m2 < 0).
[[nodiscard]] Rational product_coeff_R_reduced(const Rational& alpha, const Rational& gamma, long m1, long m2,
                                               long n);

/// The remainder polynomial: coefficient n = L(n) - R(n) for n < remainder_cutoff.
/// Throws InvalidHypothesis when m1 = m2 = 0.
[[nodiscard]] RatPoly compute_Pr(const Rational& alpha, const Rational& gamma, long m1, long m2);

/// Left side of THM2 assembled from 1F1 expansions.
[[nodiscard]] FormalSeries thm2_lhs_series(const Rational& alpha, const Rational& gamma, long m1, long m2,
                                           long order, Mutation mutation = Mutation::none);

/// (left side series, compute_Pr padded to `order`).
[[nodiscard]] SeriesPair sides_thm2(const Rational& alpha, const Rational& gamma, long m1, long m2, long order,
                                    Mutation mutation = Mutation::none);

// ---------------------------------------------------------------------------
// Worked examples of THM2, stored in their printed normalizations.
// ---------------------------------------------------------------------------

struct ExampleShift {
  long m1;
  long m2;
};

/// (m1, m2) behind EX1..EX6.
[[nodiscard]] ExampleShift example_shift(int which);

/// Factor f with printed left side = f * (THM2 left side) for the example's shifts.
[[nodiscard]] Rational example_normalization(int which, const Rational& alpha, const Rational& gamma);

/// The printed right-hand polynomial of EX1..EX6.
[[nodiscard]] RatPoly example_printed_rhs(int which, const Rational& alpha, const Rational& gamma);

/// (printed left side series, printed right side padded to `order`).
[[nodiscard]] SeriesPair sides_example(int which, const Rational& alpha, const Rational& gamma, long order);

// ---------------------------------------------------------------------------
// Linearization identity (THM4) and its reciprocal-gamma coefficient form (LEM3)
// ---------------------------------------------------------------------------

/// (mu+beta) 1F1(1;mu+1;x) 1F1(1;mu+beta;x) - mu 1F1(1;mu;x) 1F1(1;mu+1+beta;x)
///   = (mu+beta) 1F1(1;mu+1;x) - mu 1F1(1;mu+1+beta;x)
[[nodiscard]] SeriesPair sides_thm4(const Rational& mu, const Rational& beta, long order,
                                    Mutation mutation = Mutation::none);

/// Both sides of the reciprocal-gamma sum identity at index m, multiplied by
/// Gamma(mu) Gamma(mu+beta) so that only Pochhammer symbols remain:
///   sum_k [1/((mu)_{k+1} (mu+beta)_{m-k}) - 1/((mu)_k (mu+beta)_{m-k+1})]
///     = ((mu+beta)_{m+1} - (mu)_{m+1}) / ((mu)_{m+1} (mu+beta)_{m+1})
[[nodiscard]] ExactPair sides_lem3(const Rational& mu, const Rational& beta, long m);

/// First index m < order where coefficient m of a THM4 side differs from
/// mu (mu+beta) times the matching LEM3 side at m; empty when the link holds.
[[nodiscard]] std::optional<long> thm4_lem3_link_mismatch(const Rational& mu, const Rational& beta, long order);

// ---------------------------------------------------------------------------
// Classical fixtures
// ---------------------------------------------------------------------------

/// 2F1(a,b;c;x) 2F1(1-a,1-b;2-c;x) = 2F1(c-a,c-b;c;x) 2F1(1+a-c,1+b-c;2-c;x)
[[nodiscard]] SeriesPair sides_euler(const Rational& a, const Rational& b, const Rational& c, long order);

/// 2F1(a,b;c;x) 2F1(-a,-b;-c;x)
///   - x^2 ab(c-a)(c-b)/(c^2(c^2-1)) 2F1(1-a,1-b;2-c;x) 2F1(1+a,1+b;2+c;x) = 1
[[nodiscard]] SeriesPair sides_gauss(const Rational& a, const Rational& b, const Rational& c, long order);

/// 1F1(a;b;x) = e^x 1F1(b-a;b;-x)
[[nodiscard]] SeriesPair sides_kummer(const Rational& a, const Rational& b, long order);

}  // namespace hypercheck
