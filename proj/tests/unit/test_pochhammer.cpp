#include <gtest/gtest.h>

#include "hypercheck/errors.hpp"
#include "hypercheck/pochhammer.hpp"
#include "test_support.hpp"

using namespace hypercheck;

TEST(Pochhammer, SpecExamples) {
  EXPECT_EQ(pochhammer(Rational(3, 7), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3), 4), Rational(360));
  EXPECT_EQ(pochhammer(Rational(5), -2), Rational(1, 12));
  EXPECT_EQ(pochhammer(Rational(1, 2), -1), Rational(-2));
}

TEST(Pochhammer, ZeroFactorInRisingProduct) {
  EXPECT_EQ(pochhammer(Rational(-2), 3), Rational(0));
  EXPECT_EQ(pochhammer(Rational(-2), 2), Rational(2));
}

TEST(Pochhammer, NegativeIndexPole) {
  // (1-a)_{-k} with a a positive integer <= -k
  EXPECT_THROW((void)pochhammer(Rational(2), -2), PoleError);
  EXPECT_THROW((void)pochhammer(Rational(1), -1), PoleError);
  EXPECT_NO_THROW((void)pochhammer(Rational(3), -2));
}

TEST(Pochhammer, Factorial) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(5), Rational(120));
  EXPECT_EQ(factorial(10), Rational(3628800));
  EXPECT_THROW((void)factorial(-1), std::domain_error);
}

TEST(Pochhammer, ReciprocalFactorial) {
  EXPECT_EQ(reciprocal_factorial(4), Rational(1, 24));
  EXPECT_EQ(reciprocal_factorial(-1), Rational(0));
  EXPECT_EQ(reciprocal_factorial(-5), Rational(0));
}

TEST(Pochhammer, CheckedReciprocal) {
  EXPECT_EQ(checked_reciprocal(Rational(-2, 3), "x"), Rational(-3, 2));
  try {
    (void)checked_reciprocal(Rational(0), "(a-b)_{r-l}");
    FAIL();
  } catch (const PoleError& e) {
    EXPECT_NE(std::string(e.what()).find("(a-b)_{r-l}"), std::string::npos);
  }
}

TEST(PochhammerProperty, AdditionLaw) {
  testkit::RationalGen gen(11);
  for (int i = 0; i < 300; ++i) {
    const Rational a = gen.next();
    const long m = gen.integer(-6, 6);
    const long n = gen.integer(-6, 6);
    EXPECT_EQ(pochhammer(a, m + n), pochhammer(a, m) * pochhammer(a + Rational(m), n))
        << a << ' ' << m << ' ' << n;
  }
}

TEST(PochhammerProperty, ReflectionForNegativeIndex) {
  testkit::RationalGen gen(12);
  for (int i = 0; i < 100; ++i) {
    const Rational a = gen.next();
    const long k = gen.integer(0, 8);
    EXPECT_EQ(pochhammer(a, -k), sign_power(k) / pochhammer(Rational(1) - a, k));
    EXPECT_EQ(pochhammer(a, k), sign_power(k) * pochhammer(-a - Rational(k - 1), k));
  }
}

TEST(PochhammerProperty, FactorialAgreesWithPochhammerOfOne) {
  for (long n = 0; n <= 20; ++n) EXPECT_EQ(factorial(n), pochhammer(Rational(1), n));
}

// Identities used to derive the terminating transformation from the 3F2(1) summation.
TEST(PochhammerProperty, ShiftedProductIdentities) {
  testkit::RationalGen gen(13);
  for (int i = 0; i < 40; ++i) {
    const Rational alpha = gen.next();
    const Rational gamma = gen.next();
    for (long m1 = -4; m1 <= 4; ++m1) {
      for (long m2 = -4; m2 <= 4; ++m2) {
        for (long n = std::max({0L, m1, m2 - m1}); n <= 10; ++n) {
          EXPECT_EQ(pochhammer(gamma - Rational(m2), n) / pochhammer(Rational(1) - gamma, m2),
                    pochhammer(gamma, n - m2) * sign_power(m2));
          EXPECT_EQ(pochhammer(Rational(1) - alpha, n + m1 - m2) / pochhammer(alpha - Rational(m1), n),
                    sign_power(m1) * pochhammer(Rational(1) - alpha + Rational(m1), n - m2) /
                        pochhammer(alpha, n - m1));
        }
      }
    }
  }
}
