#include <gtest/gtest.h>

#include <random>
#include <string>

#include "zetaodd/exact.hpp"

namespace zetaodd {
namespace {

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(7, 0), 1);
  EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, OutOfRangeLowerIndexIsZero) {
  EXPECT_EQ(binomial(4, 6), 0);
  EXPECT_EQ(binomial(4, -1), 0);
}

TEST(Binomial, RejectsNegativeUpperIndex) { EXPECT_THROW(binomial(-1, 0), std::invalid_argument); }

TEST(Binomial, AgreesWithFactorialRatioUpTo30) {
  for (long a = 0; a <= 30; ++a) {
    for (long b = 0; b <= a; ++b) {
      const BigInt ratio = factorial(a) / (factorial(b) * factorial(a - b));
      ASSERT_EQ(binomial(a, b), ratio) << "a=" << a << " b=" << b;
    }
  }
}

TEST(Factorial, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(6), 720);
  EXPECT_EQ(factorial(10), 3628800);
}

TEST(Rational, CanonicalForm) {
  const Rational r(BigInt(-50), BigInt(-4));
  EXPECT_EQ(r.numerator(), 25);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.str(), "25/2");
  EXPECT_EQ(Rational(BigInt(6), BigInt(-3)).str(), "-2");
  EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).denominator(), 1);
  EXPECT_EQ(Rational().str(), "0");
}

TEST(Rational, ZeroDenominatorAndDivisionByZero) {
  EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ParseAcceptsCanonicalText) {
  EXPECT_EQ(Rational::parse("-50"), Rational(-50));
  EXPECT_EQ(Rational::parse("25/12"), Rational(BigInt(25), BigInt(12)));
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
}

TEST(Rational, ParseRejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/3", "1/0", "1/-3", "1.5", "a/b", "1 /2", "+3"}) {
    EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(BigInt(1), BigInt(3)), Rational(BigInt(1), BigInt(2)));
  EXPECT_GT(Rational(-1), Rational(-2));
  EXPECT_EQ(abs(Rational(-7)), Rational(7));
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  BigInt big_num(num(rng));
  // Occasionally push well past 64 bits.
  if (rng() % 4 == 0) big_num *= pow_int(BigInt(10), 30);
  return Rational(big_num, BigInt(den(rng)));
}

TEST(RationalProperty, FieldLawsAndTextRoundTrip) {
  std::mt19937_64 rng(20240917);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = random_rational(rng);
    const Rational b = random_rational(rng);
    const Rational c = random_rational(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a - b) + b, a);
    if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
    ASSERT_EQ(Rational::parse(a.str()), a);
    // Canonical form is preserved by every operation.
    const Rational s = a * b - c;
    ASSERT_GT(s.denominator(), 0);
    ASSERT_EQ(gcd(s.numerator(), s.denominator()), 1);
  }
}

}  // namespace
}  // namespace zetaodd
