#include <gtest/gtest.h>

#include <limits>
#include <random>
#include <stdexcept>

#include "exclo/rational.hpp"

using exclo::Rational;

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(6, -8);
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 4);
  EXPECT_EQ(Rational(0, 5), Rational(0));
  EXPECT_EQ(Rational(0, 5).den(), 1);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(3, 4), Rational(-1, 4));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(Rational(5) * Rational(1, 4) - Rational(1), Rational(1, 4));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(1, 0), exclo::Error);
}

TEST(Rational, OrderingMatchesCrossMultiplication) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-50, 50), den(1, 50);
  for (int i = 0; i < 2000; ++i) {
    std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    EXPECT_EQ(Rational(a, b) < Rational(c, d), a * d < c * b);
    EXPECT_EQ(Rational(a, b) == Rational(c, d), a * d == c * b);
  }
}

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(Rational::parse("1/2"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_EQ(Rational(5, 4).str(), "5/4");
  EXPECT_EQ(Rational(3).str(), "3");
  for (const char* bad : {"", "1/", "/2", "a/b", "1/0", "1.5", "1/2x"}) EXPECT_THROW(Rational::parse(bad), exclo::Error) << bad;
}

TEST(Rational, OverflowIsReportedNotWrapped) {
  const auto big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(big) + Rational(1), std::overflow_error);
  EXPECT_THROW(Rational(big) * Rational(2), std::overflow_error);
  EXPECT_EQ(Rational(big) * Rational(1, big), Rational(1));
}
