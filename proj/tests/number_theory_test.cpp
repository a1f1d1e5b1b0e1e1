#include "burnside/number_theory.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace burnside;

TEST(EulerPhi, SmallValues) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(oracle::phi_by_gcd_scan(12), 4u);
  EXPECT_EQ(euler_phi(12), 4u);
  for (std::uint64_t p : {2, 3, 5, 7, 11}) {
    EXPECT_EQ(oracle::phi_by_gcd_scan(p), p - 1);
    EXPECT_EQ(euler_phi(p), p - 1);
  }
}

TEST(EulerPhi, MatchesGcdScan) {
  for (std::uint64_t n = 1; n <= 2000; ++n) ASSERT_EQ(euler_phi(n), oracle::phi_by_gcd_scan(n)) << n;
}

TEST(EulerPhi, RejectsZero) { EXPECT_THROW(euler_phi(0), UsageError); }

TEST(EulerPhi, MultiplicativeOnCoprimePairs) {
  for (std::uint64_t a = 1; a <= 300; ++a) {
    for (std::uint64_t b = 1; b <= 300; ++b) {
      if (gcd(a, b) != 1) continue;
      ASSERT_EQ(euler_phi(a * b), euler_phi(a) * euler_phi(b)) << a << "," << b;
    }
  }
}

TEST(EulerPhi, LargePrimePower) {
  // 2^40: phi = 2^39
  EXPECT_EQ(euler_phi(std::uint64_t{1} << 40), std::uint64_t{1} << 39);
  EXPECT_EQ(euler_phi(1'000'000'007ULL), 1'000'000'006ULL);
}

TEST(Divisors, Examples) {
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(oracle::divisors_by_trial(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(13), (std::vector<std::uint64_t>{1, 13}));
  EXPECT_EQ(divisors(36), oracle::divisors_by_trial(36));
  EXPECT_THROW(divisors(0), UsageError);
}

TEST(Divisors, ClosedUnderComplement) {
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const auto ds = divisors(n);
    ASSERT_EQ(ds, oracle::divisors_by_trial(n));
    ASSERT_TRUE(std::is_sorted(ds.begin(), ds.end()));
    for (auto d : ds) ASSERT_TRUE(std::binary_search(ds.begin(), ds.end(), n / d));
  }
}

TEST(DivisorSum, PhiOverDivisorsIsN) {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    std::uint64_t sum = 0;
    for (auto d : divisors(n)) sum += euler_phi(d);
    ASSERT_EQ(sum, n);
  }
}

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(0, 7), 7u);
  EXPECT_EQ(gcd(12, 18), 6u);
  EXPECT_EQ(gcd(1, 99), 1u);
  EXPECT_EQ(gcd(0, 0), 0u);
}

TEST(IsPrime, MatchesTrialOracle) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(91));
  for (std::uint64_t n = 0; n <= 3000; ++n) ASSERT_EQ(is_prime(n), oracle::prime_by_trial(n)) << n;
}

TEST(ModPow, Examples) {
  for (int x : {-5, 0, 1, 7}) EXPECT_EQ(mod_pow(x, 0, 11), 1);
  EXPECT_EQ(mod_pow(2, 10, 1000), 24);
  EXPECT_EQ(mod_pow(-1, 3, 5), 4);
  EXPECT_THROW(mod_pow(2, 3, 1), UsageError);
  EXPECT_THROW(mod_pow(2, -1, 7), UsageError);
}

TEST(ModPow, AgreesWithExactPower) {
  for (int base = -20; base <= 20; ++base) {
    for (std::uint64_t e = 0; e <= 40; ++e) {
      for (int m : {2, 3, 10, 97, 1000}) {
        const Count exact = oracle::pow_by_repeated_multiplication(base, e);
        ASSERT_EQ(mod_pow(base, e, m), residue(exact, m)) << base << "^" << e << " mod " << m;
      }
    }
  }
}

TEST(ModPow, ExponentsAdd) {
  std::mt19937_64 rng(20261015);
  std::uniform_int_distribution<int> base(-1000, 1000);
  std::uniform_int_distribution<std::uint64_t> exp(0, 500);
  std::uniform_int_distribution<int> mod(2, 5000);
  for (int trial = 0; trial < 2000; ++trial) {
    const Count a = base(rng);
    const std::uint64_t e1 = exp(rng), e2 = exp(rng);
    const Count m = mod(rng);
    ASSERT_EQ(mod_pow(a, e1 + e2, m), (mod_pow(a, e1, m) * mod_pow(a, e2, m)) % m);
  }
}

TEST(Count, PowerAndExactDivide) {
  EXPECT_EQ(power(4, 64), Count(1) << 128);
  EXPECT_EQ(power(0, 0), 1);
  EXPECT_EQ(exact_divide(48, 8, "t"), 6);
  EXPECT_THROW(exact_divide(49, 8, "t"), InternalError);
  EXPECT_THROW(exact_divide(1, 0, "t"), InternalError);
  EXPECT_EQ(residue(-16384, 7), 3);
}
