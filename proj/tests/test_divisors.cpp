#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "colorpart/divisors.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using colorpart::ExactInt;
using colorpart::ExactRat;
using colorpart::make_rat;

TEST(Sigma, Examples) {
  EXPECT_EQ(colorpart::sigma(1), 1);
  EXPECT_EQ(colorpart::sigma(6), 12);
  EXPECT_EQ(colorpart::sigma(12), 28);
  EXPECT_EQ(colorpart::sigma(1'000'000'007ULL), ExactInt(1'000'000'008ULL));
}

TEST(Sigma, ZeroThrows) {
  EXPECT_THROW(colorpart::sigma(0), std::domain_error);
  EXPECT_THROW(colorpart::theta(0), std::domain_error);
}

TEST(Sigma, MatchesExhaustiveDivisorTest) {
  for (std::uint64_t n = 1; n <= 2000; ++n) EXPECT_EQ(colorpart::sigma(n), oracle::divisor_sum(n)) << n;
}

TEST(SigmaSieve, Examples) {
  const auto t4 = colorpart::sigma_sieve(4);
  ASSERT_EQ(t4.values().size(), 4u);
  EXPECT_EQ(t4[1], 1);
  EXPECT_EQ(t4[2], 3);
  EXPECT_EQ(t4[3], 4);
  EXPECT_EQ(t4[4], 7);
  const auto t1 = colorpart::sigma_sieve(1);
  ASSERT_EQ(t1.values().size(), 1u);
  EXPECT_EQ(t1[1], 1);
}

TEST(SigmaSieve, GuardsAndBounds) {
  EXPECT_THROW(colorpart::sigma_sieve(0), std::domain_error);
  const auto t = colorpart::sigma_sieve(10);
  EXPECT_THROW(t[0], std::out_of_range);
  EXPECT_THROW(t[11], std::out_of_range);
}

TEST(SigmaSieve, AgreesWithTrialDivision) {
  const auto table = colorpart::sigma_sieve(5000);
  for (std::uint64_t n = 1; n <= 5000; ++n) EXPECT_EQ(table[n], colorpart::sigma(n)) << n;
}

TEST(SigmaSieve, PrimesGiveSuccessor) {
  const auto table = colorpart::sigma_sieve(1000);
  for (std::uint64_t p = 2; p <= 1000; ++p) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= p; ++d) prime = prime && (p % d != 0);
    if (prime) {
      EXPECT_EQ(table[p], ExactInt(p + 1)) << p;
    }
  }
}

TEST(SigmaSieve, Multiplicative) {
  const std::uint64_t limit = 3000;
  const auto table = colorpart::sigma_sieve(limit);
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t n = 1; m * n <= limit; ++n) {
      if (std::gcd(m, n) == 1) {
        EXPECT_EQ(table[m * n], table[m] * table[n]) << m << "*" << n;
      }
    }
  }
}

TEST(Theta, Examples) {
  EXPECT_EQ(colorpart::theta(1), ExactRat(1));
  EXPECT_EQ(colorpart::theta(2), make_rat(3, 2));
  EXPECT_EQ(colorpart::theta(6), ExactRat(2));
}

TEST(Theta, EqualsReciprocalDivisorSum) {
  const auto table = colorpart::sigma_sieve(500);
  const auto values = colorpart::theta_values(500);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    const ExactRat expected = testing_support::to_exact(oracle::reciprocal_divisor_sum(n));
    EXPECT_EQ(colorpart::theta(n), expected) << n;
    EXPECT_EQ(table.theta(n), expected) << n;
    EXPECT_EQ(values[n], expected) << n;
  }
}
