#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quadprimes/character.hpp"
#include "quadprimes/error.hpp"
#include "quadprimes/oracle.hpp"

namespace quadprimes {
namespace {

// chi_delta(p) for an odd prime p not dividing delta from a table of squares.
int residue_table_symbol(i64 delta, u64 p) {
  const u64 target = mod_floor(delta, p);
  for (u64 x = 1; x < p; ++x) {
    if (x * x % p == target) return 1;
  }
  return -1;
}

TEST(Kronecker, Examples) {
  EXPECT_EQ(kronecker(-4, 1), 1);
  EXPECT_EQ(kronecker(-4, 2), 0);
  EXPECT_EQ(kronecker(-4, 3), -1);
  EXPECT_EQ(residue_table_symbol(-4, 3), -1);
  EXPECT_EQ(kronecker(5, 11), 1);
  EXPECT_EQ(residue_table_symbol(5, 11), 1);
  EXPECT_THROW(kronecker(0, 0), Error);
  EXPECT_EQ(kronecker(1, 0), 1);
  EXPECT_EQ(kronecker(7, 0), 0);
}

TEST(Kronecker, NegativeArguments) {
  EXPECT_EQ(kronecker(-3, -1), -1);
  EXPECT_EQ(kronecker(5, -1), 1);
  EXPECT_EQ(kronecker(-7, -5), -kronecker(-7, 5));
  // delta = 1 mod 8 and 5 mod 8 at n = 2
  EXPECT_EQ(kronecker(17, 2), 1);
  EXPECT_EQ(kronecker(5, 2), -1);
  EXPECT_EQ(kronecker(-3, 2), -1);
  EXPECT_EQ(kronecker(-7, 2), 1);
}

TEST(Kronecker, AgreesWithResidueTable) {
  const auto primes = primes_up_to(400);
  for (i64 delta : {-163LL, -4LL, -3LL, 5LL, 8LL, 12LL, -15LL, 1001LL, -99991LL}) {
    for (u32 p : primes) {
      if (p == 2 || delta % p == 0) continue;
      EXPECT_EQ(kronecker(delta, p), residue_table_symbol(delta, p)) << delta << " " << p;
    }
  }
}

TEST(Kronecker, CompletelyMultiplicative) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<i64> n(-100000, 100000);
  for (i64 delta : {-163LL, -20LL, -4LL, 5LL, 12LL, 24LL, 1000001LL}) {
    for (int t = 0; t < 2000; ++t) {
      const i64 m = n(rng), k = n(rng);
      if (m == 0 || k == 0) continue;
      EXPECT_EQ(kronecker(delta, m * k), kronecker(delta, m) * kronecker(delta, k));
    }
  }
}

TEST(Kronecker, PeriodicModuloDiscriminant) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<i64> n(1, 10'000'000);
  for (i64 delta : {-163LL, -3LL, -4LL, -8LL, 5LL, 8LL, 12LL, 21LL, -31LL, 4000037LL}) {
    ASSERT_TRUE(is_discriminant(delta)) << delta;
    for (int t = 0; t < 2000; ++t) {
      const i64 v = n(rng);
      EXPECT_EQ(kronecker(delta, v), kronecker(delta, v + std::llabs(delta)));
    }
  }
}

TEST(Lambda, Examples) {
  EXPECT_EQ(lambda(-4, 1), 1u);
  EXPECT_EQ(lambda(-4, 3), 0u);
  EXPECT_EQ(lambda(-4, 9), 1u);
  EXPECT_EQ(lambda(-4, 5), 2u);
  EXPECT_EQ(lambda(-4, 25), 3u);
}

TEST(Lambda, MatchesDivisorSum) {
  for (i64 delta : {-163LL, -4LL, 5LL, 12LL, -15LL}) {
    for (u64 n = 1; n <= 3000; ++n) {
      const i64 brute = oracle::brute_force_lambda(delta, n);
      ASSERT_GE(brute, 0);
      ASSERT_EQ(lambda(delta, n), static_cast<u64>(brute)) << delta << " " << n;
    }
    for (u32 p : primes_up_to(2000)) EXPECT_EQ(lambda(delta, p), static_cast<u64>(1 + kronecker(delta, p)));
  }
}

TEST(Discriminants, Classification) {
  EXPECT_TRUE(is_fundamental(-3));
  EXPECT_TRUE(is_fundamental(-4));
  EXPECT_TRUE(is_fundamental(-8));
  EXPECT_TRUE(is_fundamental(5));
  EXPECT_TRUE(is_fundamental(12));
  EXPECT_FALSE(is_fundamental(-12));  // -12 = 4 * -3, -3 = 1 mod 4
  EXPECT_FALSE(is_fundamental(-16));
  EXPECT_FALSE(is_fundamental(-27));
  EXPECT_FALSE(is_fundamental(9));
  EXPECT_FALSE(is_discriminant(-5));
  EXPECT_FALSE(is_discriminant(4));
}

TEST(LOne, LeibnizSeries) {
  auto l = l_one(-4, 1e-8);
  EXPECT_LE(l.error_bound, 1e-8 + 1e-11);  // tail <= tol, plus rounding
  EXPECT_NEAR(l.value, std::numbers::pi / 4, 2e-8);
}

TEST(LOne, DeltaMinusThree) {
  auto l = l_one(-3, 1e-8);
  EXPECT_NEAR(l.value, std::numbers::pi / (3 * std::sqrt(3.0)), l.error_bound);
}

TEST(LOne, DeltaFive) {
  auto l = l_one(5, 1e-8);
  const double expected = 2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0);
  EXPECT_NEAR(l.value, expected, l.error_bound);
  EXPECT_NEAR(l.value, 0.43040894, 1e-8);
}

TEST(LOne, Errors) {
  EXPECT_THROW(l_one(-5, 1e-3), Error);   // 3 mod 4
  EXPECT_THROW(l_one(16, 1e-3), Error);   // square
  try {
    l_one(-4, 1e-12, 1'000'000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ToleranceUnreachable);
  }
}

TEST(LOne, RefinementNeverLoosensBound) {
  for (i64 delta : {-4LL, -23LL, 5LL, 13LL, -163LL, -12LL}) {
    double tol = 1e-2;
    double prev = l_one(delta, tol).error_bound;
    for (int i = 0; i < 6; ++i) {
      tol /= 2;
      const double b = l_one(delta, tol).error_bound;
      EXPECT_GT(b, 0.0);
      EXPECT_LE(b, prev);
      prev = b;
    }
  }
}

TEST(ClassNumberOracle, Examples) {
  EXPECT_NEAR(l_one_class_number_oracle(-4), std::numbers::pi / 4, 1e-15);
  EXPECT_NEAR(l_one_class_number_oracle(-163), std::numbers::pi / std::sqrt(163.0), 1e-15);
  EXPECT_NEAR(l_one_class_number_oracle(-15), 2 * std::numbers::pi / std::sqrt(15.0), 1e-14);
  EXPECT_EQ(class_number(-15), 2u);
  EXPECT_EQ(class_number(-23), 3u);
  EXPECT_EQ(class_number(-163), 1u);
  EXPECT_EQ(class_number(-4 * 5), 2u);
  EXPECT_THROW(l_one_class_number_oracle(-12), Error);
  EXPECT_THROW(l_one_class_number_oracle(-1'000'003), Error);
}

TEST(ClassNumberOracle, AgreesWithSeriesOnSmallDiscriminants) {
  for (i64 delta = -3; delta > -400; --delta) {
    if (!is_fundamental(delta)) continue;
    auto l = l_one(delta, 1e-4);
    EXPECT_NEAR(l.value, l_one_class_number_oracle(delta), l.error_bound + 1e-12) << delta;
  }
}

TEST(CharacterContext, CachesValue) {
  CharacterContext chi(-163, 1e-5);
  EXPECT_EQ(chi(2), -1);
  EXPECT_EQ(chi(37), -1);
  EXPECT_EQ(chi(41), 1);  // -163 = 1 (mod 41)
  EXPECT_NEAR(chi.l_one_value(), std::numbers::pi / std::sqrt(163.0), chi.l_one_error_bound());
}

TEST(Metrics, DeltaMinusFour) {
  auto f = validate(1, 0, 1);
  const double l = std::numbers::pi / 4;
  auto m = metrics(f, 10, 7, l);
  const double beta = -std::log(l * std::log(4.0));
  EXPECT_NEAR(m.beta.value, beta, 1e-14);
  EXPECT_NEAR(m.beta.value, -0.08507, 1e-4);
  EXPECT_FALSE(m.s_diagnostic.has_value());
  EXPECT_NEAR(m.b_cap, 3 * std::log(4.0) / std::log(7.0), 1e-14);
  EXPECT_NEAR(m.l_cap.value, -std::log(l * std::log(7.0)), 1e-14);
  EXPECT_EQ(m.beta.radius, 0.0);
}

TEST(Metrics, BetaZeroWhenProductIsOne) {
  auto f = validate(1, 1, 41);
  auto m = metrics(f, 100, 16, 1.0 / std::log(163.0));
  EXPECT_NEAR(m.beta.value, 0.0, 1e-15);
}

TEST(Metrics, NegativeDeltaGBranch) {
  auto f = validate(-1, 1, -41);  // delta = 1 - 164 = -163
  const double l = std::numbers::pi / std::sqrt(163.0);
  auto m = metrics(f, 50, 10, l);
  const double beta = -std::log(l * std::log(163.0));  // about -0.226
  EXPECT_NEAR(m.beta.value, beta, 1e-14);
  EXPECT_NEAR(m.g_delta, 163.0 / (4.0 - std::exp(-beta / 2)), 1e-10);
  EXPECT_FALSE(m.s_diagnostic.has_value());

  auto exceptional = metrics(f, 50, 10, 1e-3);
  ASSERT_TRUE(exceptional.s_diagnostic.has_value());
  EXPECT_NEAR(*exceptional.s_diagnostic, 0.5 * std::sqrt(exceptional.beta.value / exceptional.b_cap), 1e-14);
}

TEST(Metrics, HypothesesVerdict) {
  auto f = validate(1, 1, 41);
  const double l = std::numbers::pi / std::sqrt(163.0);
  const double beta = -std::log(l * std::log(163.0));
  // beta < 0 puts e^{beta/5} below |a| = 1
  ASSERT_LT(std::exp(beta / 5), 1.0);
  EXPECT_FALSE(metrics(f, 100, 16, l).hypotheses_hold);
  // a tiny L value makes beta large and the window wide
  auto wide = metrics(f, 100, 16, 1e-4);
  EXPECT_TRUE(wide.hypotheses_hold);
  EXPECT_LE(wide.g_delta, 100.0);
}

TEST(Metrics, ErrorPropagationAndErrors) {
  auto f = validate(1, 1, 41);
  auto m = metrics(f, 100, 16, 0.25, 1e-3);
  EXPECT_GT(m.beta.radius, 0.0);
  EXPECT_NEAR(m.beta.radius, std::log(0.25 / 0.249), 1e-9);
  EXPECT_THROW(metrics(f, 100, 2, 0.25), Error);
  EXPECT_THROW(metrics(f, 100, 16, 0.0), Error);
}

}  // namespace
}  // namespace quadprimes
