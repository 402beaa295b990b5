#include <gtest/gtest.h>

#include "hypercheck/errors.hpp"
#include "hypercheck/identities.hpp"
#include "hypercheck/pochhammer.hpp"
#include "test_support.hpp"

using namespace hypercheck;

namespace {

Rational exact(const ScalarValue& v) { return std::get<Rational>(v); }

/// Terminating 3F2(1) by an explicit double loop over Pochhammer products.
Rational brute_3f2(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& b1,
                   const Rational& b2, long terms) {
  Rational sum;
  for (long k = 0; k <= terms; ++k) {
    Rational num(1);
    Rational den(1);
    for (long j = 0; j < k; ++j) {
      num *= (a1 + Rational(j)) * (a2 + Rational(j)) * (a3 + Rational(j));
      den *= (b1 + Rational(j)) * (b2 + Rational(j)) * Rational(j + 1);
    }
    sum += num / den;
  }
  return sum;
}

FormalSeries F11(const Rational& a, const Rational& b, int sign, long order) {
  return series_from_hyp(hyp({a}, {b}, Rational(sign)), order);
}

}  // namespace

TEST(Thm1, WorkedInstance) {
  const Rational a(1, 2);
  const Rational b(1, 3);
  EXPECT_EQ(exact(lhs_thm1(a, b, Rational(-1), 1, 1, EvalMode::exact)), Rational(1, 2));
  EXPECT_EQ(exact(rhs_thm1(a, b, Rational(-1), 1, 1, EvalMode::exact)), Rational(1, 2));
}

TEST(Thm1, NegativeRVanishes) {
  testkit::RationalGen gen(51);
  for (int i = 0; i < 50; ++i) {
    const Rational a = gen.next();
    const Rational b = gen.next();
    const long r = gen.integer(-4, -1);
    const long l = gen.integer(0, 3);
    const long n = gen.integer(l - r, 8);
    EXPECT_EQ(exact(lhs_thm1(a, b, Rational(-n), l, r, EvalMode::exact)), Rational(0));
    EXPECT_EQ(exact(rhs_thm1(a, b, Rational(-n), l, r, EvalMode::exact)), Rational(0));
  }
}

TEST(Thm1, TrivialInstances) {
  EXPECT_EQ(exact(lhs_thm1(Rational(1), Rational(1), Rational(0), 0, 0, EvalMode::exact)), Rational(1));
  for (long n = 0; n <= 5; ++n) {
    const Rational b(2, 7);
    EXPECT_EQ(exact(lhs_thm1(Rational(1), b, Rational(-n), 0, 0, EvalMode::exact)),
              exact(rhs_thm1(Rational(1), b, Rational(-n), 0, 0, EvalMode::exact)));
  }
}

TEST(Thm1, ExactModeNeedsIntegerC) {
  EXPECT_THROW((void)lhs_thm1(Rational(1, 2), Rational(1, 3), Rational(-1, 2), 0, 3, EvalMode::exact),
               InvalidHypothesis);
  EXPECT_THROW((void)lhs_thm1(Rational(1, 2), Rational(1, 3), Rational(-1), -1, 3, EvalMode::exact),
               InvalidHypothesis);
}

TEST(Thm1, NumericInstance) {
  // excess 9/2: 1e-20 is reachable within the term budget, 1e-30 is not
  NumericSettings settings;
  settings.target_abs_err = Rational(mpq_class(1, mpz_class("100000000000000000000")));
  const Rational a(1, 2);
  const Rational b(1, 3);
  const Rational c(-1, 2);
  const auto lhs = std::get<NumericValue>(lhs_thm1(a, b, c, 0, 3, EvalMode::numeric, settings));
  const auto rhs = std::get<NumericValue>(rhs_thm1(a, b, c, 0, 3, EvalMode::numeric, settings));
  BigFloat ref(300);
  mpfr_set_str(ref.get(), "1.84036401323965871779221254125351105279521664461898175123887", 10, MPFR_RNDN);
  const BigFloat target(settings.target_abs_err, 64, MPFR_RNDU);
  EXPECT_LE(BigFloat::sub(lhs.value, ref, MPFR_RNDN).abs(), target);
  EXPECT_LE(BigFloat::sub(rhs.value, ref, MPFR_RNDN).abs(), target);
  EXPECT_LE(lhs.error_bound, target);
  EXPECT_LE(rhs.error_bound, target);

  EXPECT_THROW((void)lhs_thm1(a, b, c, 0, 3, EvalMode::numeric), ConvergenceTooSlow);
}

TEST(Thm1, NumericInstanceDeepC) {
  NumericSettings settings;
  const Rational a(1, 2);
  const Rational b(1, 3);
  const Rational c(-43, 7);
  const auto lhs = std::get<NumericValue>(lhs_thm1(a, b, c, 0, 3, EvalMode::numeric, settings));
  const auto rhs = std::get<NumericValue>(rhs_thm1(a, b, c, 0, 3, EvalMode::numeric, settings));
  const BigFloat target(settings.target_abs_err, 64, MPFR_RNDU);
  EXPECT_LE(BigFloat::sub(lhs.value, rhs.value, MPFR_RNDN).abs(), BigFloat::add(target, target, MPFR_RNDU));
}

TEST(Thm1, PoleInRightPrefactor) {
  // a - b = -1 and r - l = 2: (a-b)_{r-l} = (-1)(0)
  EXPECT_THROW((void)rhs_thm1(Rational(1, 3), Rational(4, 3), Rational(-3), 0, 2, EvalMode::exact), PoleError);
}

TEST(KarlssonMinton, SpecExample) {
  const auto p = sides_km(Rational(1), Rational(2), Rational(-1), 1);
  EXPECT_EQ(p.lhs, Rational(1, 4));
  EXPECT_EQ(p.rhs, Rational(1, 4));
}

TEST(KarlssonMinton, RequiresIntegerGamma) {
  EXPECT_THROW((void)sides_km(Rational(1, 3), Rational(2, 7), Rational(1, 2), 1), InvalidHypothesis);
}

TEST(Rjrjr, SpecExamples) {
  const auto trivial = sides_rjrjr(0, Rational(1, 3), Rational(2, 5), Rational(3, 7), Rational(4, 9));
  EXPECT_EQ(trivial.lhs, Rational(1));
  EXPECT_EQ(trivial.rhs, Rational(1));
  const Rational A(1, 2);
  const Rational B(1, 3);
  const Rational D(5, 7);
  const Rational E(2, 5);
  const auto p = sides_rjrjr(1, A, B, D, E);
  EXPECT_EQ(p.lhs, Rational(1) - A * B / (D * E));
  EXPECT_EQ(p.lhs, Rational(5, 12));
  EXPECT_EQ(p.rhs, Rational(5, 12));
}

TEST(Pbm, SpecExampleAndChain) {
  const auto chain = pbm_chain(Rational(1, 3), Rational(3, 2), Rational(-2), 1, 2);
  EXPECT_EQ(chain.lhs, chain.k74_sum);
  EXPECT_EQ(chain.k74_sum, chain.km_sum);
  EXPECT_EQ(chain.km_sum, chain.rhs);
  const auto p = sides_pbm(Rational(1, 3), Rational(3, 2), Rational(-2), 1, 2);
  EXPECT_EQ(p.lhs, brute_3f2(Rational(1, 3), Rational(5, 2), Rational(-2), Rational(10, 3), Rational(3, 2), 2));
  EXPECT_EQ(p.lhs, p.rhs);
}

TEST(K74, Instances) {
  testkit::RationalGen gen(52);
  for (int i = 0; i < 40; ++i) {
    const auto p = sides_k74(gen.next(), gen.next(), Rational(-gen.integer(0, 6)), gen.next(), gen.integer(0, 4));
    EXPECT_EQ(p.lhs, p.rhs);
  }
}

TEST(Cor1, SpecExamples) {
  const Rational alpha(1, 3);
  const Rational gamma(2, 7);
  EXPECT_EQ(lhs_cor1(alpha, gamma, 1, 3, 2), Rational(0));
  EXPECT_EQ(rhs_cor1(alpha, gamma, 1, 3, 2), Rational(0));

  // n = m1 = m2 = 1: both 3F2 sums have at most two terms
  const Rational one(1);
  const Rational two(2);
  const Rational brute_l = (one - gamma) * (alpha - one) / (gamma - one) *
                           brute_3f2(-one, one - alpha, one - gamma, two - gamma, one - alpha, 1);
  const Rational brute_r = (one - alpha) / (two - gamma) * brute_3f2(Rational(0), alpha, gamma - two, gamma, alpha - one, 0);
  EXPECT_EQ(lhs_cor1(alpha, gamma, 1, 1, 1), brute_l);
  EXPECT_EQ(rhs_cor1(alpha, gamma, 1, 1, 1), brute_r);
  EXPECT_EQ(brute_l, brute_r);

  EXPECT_EQ(lhs_cor1(Rational(5, 7), Rational(-3, 11), -2, -1, 3), rhs_cor1(Rational(5, 7), Rational(-3, 11), -2, -1, 3));
}

TEST(Cor1, MutantFlipsSign) {
  const Rational alpha(1, 3);
  const Rational gamma(2, 7);
  const Rational r = rhs_cor1(alpha, gamma, 1, 1, 4);
  ASSERT_NE(r, Rational(0));
  EXPECT_EQ(rhs_cor1(alpha, gamma, 1, 1, 4, Mutation::cor1_rhs_sign), -r);
}

TEST(Thm2Coefficients, SingleTermExamples) {
  EXPECT_EQ(product_coeff_L(Rational(1, 3), Rational(5, 7), 1, 0, 0), Rational(2, 3));
  EXPECT_EQ(product_coeff_R(Rational(1, 3), Rational(5, 7), 1, 0, 0), Rational(8, 21));
}

TEST(Thm2Coefficients, MatchSeriesProducts) {
  testkit::RationalGen gen(53);
  const long order = 30;
  const Rational one(1);
  const Rational two(2);
  for (int i = 0; i < 4; ++i) {
    const Rational alpha = gen.next();
    const Rational gamma = gen.next();
    for (long m1 = -4; m1 <= 4; ++m1) {
      for (long m2 = -4; m2 <= 4; ++m2) {
        const auto first = series_shift_mul(
            series_mul(F11(alpha, gamma, 1, order), F11(one - alpha + Rational(m1), two - gamma + Rational(m2), -1, order)),
            std::max(0L, m2), pochhammer(one - alpha, m1) / pochhammer(two - gamma, m2));
        const auto second = series_shift_mul(
            series_mul(F11(one - alpha, two - gamma, -1, order), F11(alpha - Rational(m1), gamma - Rational(m2), 1, order)),
            std::max(0L, -m2), pochhammer(one - gamma, m2) * pochhammer(gamma - alpha, m1 - m2));
        for (long n = 0; n < order; ++n) {
          ASSERT_EQ(product_coeff_L(alpha, gamma, m1, m2, n), first[n]) << m1 << ' ' << m2 << ' ' << n;
          ASSERT_EQ(product_coeff_R(alpha, gamma, m1, m2, n), second[n]) << m1 << ' ' << m2 << ' ' << n;
        }
      }
    }
  }
}

TEST(Thm2Coefficients, ReducedFormsMatchDirectSums) {
  testkit::RationalGen gen(54);
  for (int i = 0; i < 6; ++i) {
    const Rational alpha = gen.next();
    const Rational gamma = gen.next();
    for (long m1 = -4; m1 <= 4; ++m1) {
      for (long m2 = -4; m2 <= 4; ++m2) {
        for (long n = 0; n <= 14; ++n) {
          ASSERT_EQ(product_coeff_L_reduced(alpha, gamma, m1, m2, n), product_coeff_L(alpha, gamma, m1, m2, n))
              << m1 << ' ' << m2 << ' ' << n;
          ASSERT_EQ(product_coeff_R_reduced(alpha, gamma, m1, m2, n), product_coeff_R(alpha, gamma, m1, m2, n))
              << m1 << ' ' << m2 << ' ' << n;
        }
      }
    }
  }
}

TEST(Thm2Coefficients, CoincideFromCutoff) {
  testkit::RationalGen gen(55);
  for (int i = 0; i < 6; ++i) {
    const Rational alpha = gen.next();
    const Rational gamma = gen.next();
    for (long m1 = -4; m1 <= 4; ++m1) {
      for (long m2 = -4; m2 <= 4; ++m2) {
        for (long n = remainder_cutoff(m1, m2); n <= 20; ++n) {
          ASSERT_EQ(product_coeff_L(alpha, gamma, m1, m2, n), product_coeff_R(alpha, gamma, m1, m2, n));
        }
      }
    }
  }
}

TEST(ComputePr, DegreeBoundAndHypothesis) {
  EXPECT_THROW((void)compute_Pr(Rational(1, 3), Rational(5, 7), 0, 0), InvalidHypothesis);
  testkit::RationalGen gen(56);
  for (int i = 0; i < 5; ++i) {
    const Rational alpha = gen.next();
    const Rational gamma = gen.next();
    for (long m1 = -4; m1 <= 4; ++m1) {
      for (long m2 = -4; m2 <= 4; ++m2) {
        if (m1 == 0 && m2 == 0) continue;
        EXPECT_LE(compute_Pr(alpha, gamma, m1, m2).degree(), remainder_cutoff(m1, m2) - 1);
      }
    }
  }
}

TEST(ComputePr, PrintedExamplesUnderNormalization) {
  const Rational alpha(1, 3);
  const Rational gamma(5, 7);
  for (int which = 1; which <= 6; ++which) {
    const auto shift = example_shift(which);
    const RatPoly p = compute_Pr(alpha, gamma, shift.m1, shift.m2);
    EXPECT_EQ(p * example_normalization(which, alpha, gamma), example_printed_rhs(which, alpha, gamma)) << which;
  }
  EXPECT_EQ(example_printed_rhs(5, alpha, gamma), RatPoly({alpha, Rational(1)}));
  EXPECT_EQ(example_printed_rhs(6, alpha, gamma),
            RatPoly({pochhammer(gamma - Rational(4), 3), (Rational(2) * alpha - gamma) * (gamma - Rational(3))}));
}

TEST(Thm2Series, HighCoefficientsVanish) {
  const auto p = sides_thm2(Rational(1, 3), Rational(5, 7), 2, 4, 30);
  EXPECT_FALSE(p.lhs.first_difference(p.rhs).has_value());
  const auto mutant = sides_thm2(Rational(1, 3), Rational(5, 7), 2, 4, 30, Mutation::thm2_second_index);
  EXPECT_TRUE(mutant.lhs.first_difference(mutant.rhs).has_value());
}

TEST(Examples, PrintedLeftSideIsNormalizedThm2Side) {
  testkit::RationalGen gen(57);
  for (int i = 0; i < 5; ++i) {
    const Rational alpha = gen.next();
    const Rational gamma = gen.next();
    for (int which = 1; which <= 6; ++which) {
      const auto shift = example_shift(which);
      const auto printed = sides_example(which, alpha, gamma, 30);
      const auto raw = thm2_lhs_series(alpha, gamma, shift.m1, shift.m2, 30);
      EXPECT_EQ(printed.lhs, example_normalization(which, alpha, gamma) * raw) << which;
      EXPECT_EQ(printed.lhs, printed.rhs) << which;
    }
  }
}

TEST(Examples, Ex2IsOne) {
  const auto p = sides_example(2, Rational(1, 3), Rational(5, 7), 25);
  std::vector<Rational> one(25);
  one[0] = Rational(1);
  EXPECT_EQ(p.lhs, FormalSeries(one));
}

TEST(Thm4, ConstantTerm) {
  const Rational mu(1, 3);
  const Rational beta(1, 5);
  const auto p = sides_thm4(mu, beta, 1);
  EXPECT_EQ(p.lhs[0], beta);
  EXPECT_EQ(p.rhs[0], beta);
}

TEST(Lem3, SpecExampleAndLink) {
  const auto p = sides_lem3(Rational(1, 3), Rational(1, 5), 0);
  EXPECT_EQ(p.lhs, Rational(9, 8));
  EXPECT_EQ(p.rhs, Rational(9, 8));
  EXPECT_FALSE(thm4_lem3_link_mismatch(Rational(1, 3), Rational(1, 5), 30).has_value());
}

TEST(Classical, GaussRelationIsOne) {
  const auto p = sides_gauss(Rational(1, 3), Rational(2, 7), Rational(5, 11), 20);
  EXPECT_EQ(p.lhs, p.rhs);
  EXPECT_EQ(p.rhs[0], Rational(1));
  EXPECT_THROW((void)sides_gauss(Rational(1, 3), Rational(2, 7), Rational(1), 20), PoleError);
}

TEST(Classical, EulerAndKummer) {
  testkit::RationalGen gen(58);
  for (int i = 0; i < 10; ++i) {
    const auto e = sides_euler(gen.next(), gen.next(), gen.next(), 30);
    EXPECT_EQ(e.lhs, e.rhs);
    const auto k = sides_kummer(gen.next(), gen.next(), 30);
    EXPECT_EQ(k.lhs, k.rhs);
  }
}

TEST(Mutation, NamesRoundTrip) {
  for (Mutation m : {Mutation::none, Mutation::thm1_rhs_index, Mutation::km_rhs_index, Mutation::cor1_rhs_sign,
                     Mutation::thm2_second_index, Mutation::thm4_rhs_sign}) {
    EXPECT_EQ(mutation_from_string(to_string(m)), m);
  }
  EXPECT_FALSE(mutation_from_string("bogus").has_value());
}
