#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "colorpart/exact.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using colorpart::ExactInt;
using colorpart::ExactRat;
using colorpart::make_rat;
using colorpart::rat_parse;
using colorpart::rat_render;

TEST(MakeRat, ReducesToLowestTerms) {
  const ExactRat q = make_rat(6, 4);
  EXPECT_EQ(q.num(), 3);
  EXPECT_EQ(q.den(), 2);
}

TEST(MakeRat, CanonicalZero) {
  const ExactRat q = make_rat(0, 7);
  EXPECT_EQ(q.num(), 0);
  EXPECT_EQ(q.den(), 1);
  EXPECT_EQ(q, ExactRat());
}

TEST(MakeRat, SignMovesToNumerator) {
  const ExactRat q = make_rat(3, -6);
  EXPECT_EQ(q.num(), -1);
  EXPECT_EQ(q.den(), 2);
  EXPECT_EQ(make_rat(-4, -8), make_rat(1, 2));
}

TEST(MakeRat, ZeroDenominatorThrows) { EXPECT_THROW(make_rat(1, 0), std::domain_error); }

TEST(RatRender, Forms) {
  EXPECT_EQ(rat_render(make_rat(3, 2)), "3/2");
  EXPECT_EQ(rat_render(make_rat(2, 1)), "2");
  EXPECT_EQ(rat_render(make_rat(-1, 2)), "-1/2");
  EXPECT_EQ(rat_render(ExactRat()), "0");
}

TEST(RatParse, AcceptsRenderedForms) {
  EXPECT_EQ(rat_parse("3/2"), make_rat(3, 2));
  EXPECT_EQ(rat_parse("-7"), ExactRat(-7));
  EXPECT_EQ(rat_parse("6/4"), make_rat(3, 2));
  EXPECT_EQ(rat_parse("123456789012345678901234567890"), ExactRat(ExactInt("123456789012345678901234567890")));
}

TEST(RatParse, RejectsMalformed) {
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "+3", "1/-2", "1/0", "a", "1 /2", "--1", "1/2/3"}) {
    EXPECT_THROW(rat_parse(bad), std::invalid_argument) << bad;
  }
}

TEST(RatParse, RenderParseIsIdentity) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const ExactRat q = testing_support::random_rat(rng) * testing_support::random_rat(rng);
    EXPECT_EQ(rat_parse(rat_render(q)), q);
    EXPECT_EQ(rat_render(rat_parse(rat_render(q))), rat_render(q));
  }
}

TEST(ExactRatArithmetic, AgreesWithBoostRational) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const oracle::Rat a = oracle::random_small_rational(rng) * oracle::random_small_rational(rng);
    const oracle::Rat b = oracle::random_small_rational(rng) + oracle::Rat(1, 7);
    const ExactRat ea = testing_support::to_exact(a);
    const ExactRat eb = testing_support::to_exact(b);
    EXPECT_EQ(ea + eb, testing_support::to_exact(a + b));
    EXPECT_EQ(ea - eb, testing_support::to_exact(a - b));
    EXPECT_EQ(ea * eb, testing_support::to_exact(a * b));
    if (b != 0) {
      EXPECT_EQ(ea / eb, testing_support::to_exact(a / b));
    }
    EXPECT_EQ(ea < eb, a < b);
  }
}

TEST(ExactRatArithmetic, RingLawsHoldExactly) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 300; ++i) {
    const ExactRat a = testing_support::random_rat(rng);
    const ExactRat b = testing_support::random_rat(rng);
    const ExactRat c = testing_support::random_rat(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a - a, ExactRat());
  }
}

TEST(ExactRatArithmetic, StaysCanonical) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const ExactRat q = testing_support::random_rat(rng) + testing_support::random_rat(rng) * testing_support::random_rat(rng);
    EXPECT_GT(q.den(), 0);
    EXPECT_EQ(gcd(q.num(), q.den()), q.is_zero() ? q.den() : ExactInt(1));
    EXPECT_EQ(make_rat(q.num(), q.den()), q);
  }
}

TEST(ExactRatArithmetic, ReciprocalOfZeroThrows) {
  EXPECT_THROW(reciprocal(ExactRat()), std::domain_error);
  EXPECT_THROW(ExactRat(1) / ExactRat(0), std::domain_error);
}

TEST(Binomial, Examples) {
  EXPECT_EQ(colorpart::binomial(9, 0), 1);
  EXPECT_EQ(colorpart::binomial(5, 2), 10);
  EXPECT_EQ(colorpart::binomial(3, 5), 0);
}

TEST(Binomial, MatchesPascalTriangle) {
  const auto table = oracle::pascal(60);
  for (unsigned n = 0; n <= 60; ++n) {
    for (unsigned k = 0; k <= n; ++k) EXPECT_EQ(colorpart::binomial(n, k), table[n][k]) << n << "," << k;
  }
}

TEST(Binomial, PascalRuleAndRowSums) {
  for (unsigned n = 1; n <= 80; ++n) {
    ExactInt row = 0;
    for (unsigned k = 0; k <= n; ++k) {
      row += colorpart::binomial(n, k);
      if (k >= 1) {
        EXPECT_EQ(colorpart::binomial(n, k), colorpart::binomial(n - 1, k - 1) + colorpart::binomial(n - 1, k));
      }
    }
    EXPECT_EQ(row, ExactInt(1) << n);
  }
}

TEST(Factorial, Examples) {
  EXPECT_EQ(colorpart::factorial(0), 1);
  EXPECT_EQ(colorpart::factorial(5), 120);
  EXPECT_EQ(colorpart::factorial(10), 3628800);
  for (unsigned n = 0; n <= 40; ++n) EXPECT_EQ(colorpart::factorial(n), oracle::factorial(n));
}

TEST(Pow, SmallCases) {
  EXPECT_EQ(colorpart::pow(make_rat(2, 3), 3), make_rat(8, 27));
  EXPECT_EQ(colorpart::pow(make_rat(-1, 2), 0), ExactRat(1));
  EXPECT_EQ(colorpart::pow(ExactRat(-2), 5), ExactRat(-32));
}
