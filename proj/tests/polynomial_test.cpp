#include <gtest/gtest.h>

#include <cmath>

#include "quadprimes/character.hpp"
#include "quadprimes/error.hpp"
#include "quadprimes/oracle.hpp"
#include "quadprimes/polynomial.hpp"
#include "quadprimes/random_poly.hpp"

namespace quadprimes {
namespace {

Errc validation_code(i64 a, i64 b, i64 c) {
  try {
    validate(a, b, c);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted (" << a << "," << b << "," << c << ")";
  return Errc::InvalidArgument;
}

TEST(Validate, AcceptsEuler) {
  auto f = validate(1, 1, 41);
  EXPECT_EQ(f.delta(), -163);
  EXPECT_EQ(f(0), 41);
  EXPECT_EQ(f(-8), 97);
}

TEST(Validate, ReportsFirstViolation) {
  EXPECT_EQ(validation_code(0, 1, 1), Errc::ZeroLeadingCoefficient);
  EXPECT_EQ(validation_code(1, 0, -1), Errc::SquareDiscriminant);
  EXPECT_EQ(validation_code(2, 2, 2), Errc::CommonFactor);
  EXPECT_EQ(validation_code(1, 1, 2), Errc::ParityObstruction);
  // common factor is checked before parity
  EXPECT_EQ(validation_code(2, 0, 4), Errc::CommonFactor);
  // square discriminant with everything else fine: (x+1)(2x+1)
  EXPECT_EQ(validation_code(2, 3, 1), Errc::SquareDiscriminant);
}

TEST(Validate, DiscriminantOverflowIsReported) {
  const i64 big = 4'000'000'000'000'000'000LL;
  EXPECT_THROW(validate(big, 1, big), Error);
}

TEST(EnumerationDomain, DeltaNegativeLeadingPositive) {
  auto dom = enumeration_domain(validate(1, 1, 41), 100);
  ASSERT_EQ(dom.intervals.size(), 1u);
  EXPECT_EQ(dom.intervals[0], (IntRange{-8, 7}));
  EXPECT_EQ(dom.cardinality_a, 16u);
  EXPECT_NEAR(dom.x_length, std::sqrt(237.0), 1e-12);
}

TEST(EnumerationDomain, TwoIntervals) {
  auto dom = enumeration_domain(validate(1, 0, -2), 7);
  ASSERT_EQ(dom.intervals.size(), 2u);
  EXPECT_EQ(dom.intervals[0], (IntRange{-3, -2}));
  EXPECT_EQ(dom.intervals[1], (IntRange{2, 3}));
  EXPECT_EQ(dom.cardinality_a, 4u);
  EXPECT_NEAR(dom.x_length, 28.0 / (6.0 + std::sqrt(8.0)), 1e-12);
}

TEST(EnumerationDomain, NegativeLeadingLargeN) {
  auto dom = enumeration_domain(validate(-1, 0, 3), 20);
  ASSERT_EQ(dom.intervals.size(), 1u);
  EXPECT_EQ(dom.intervals[0], (IntRange{-1, 1}));
  EXPECT_EQ(dom.cardinality_a, 3u);
  EXPECT_NEAR(dom.x_length, std::sqrt(12.0), 1e-12);
}

TEST(EnumerationDomain, NegativeLeadingSmallN) {
  // -x^2 + 3: values 3, 2, -1 ...; N = 2 < 12/4 keeps only f(+-1) = 2
  auto dom = enumeration_domain(validate(-1, 0, 3), 2);
  EXPECT_EQ(dom.cardinality_a, 2u);
  EXPECT_NEAR(dom.x_length, 8.0 / (std::sqrt(4.0) + std::sqrt(12.0)), 1e-12);
}

TEST(EnumerationDomain, EmptyCases) {
  for (u64 N : {1ULL, 100ULL, 1'000'000ULL}) {
    auto dom = enumeration_domain(validate(-1, 0, -3), N);
    EXPECT_TRUE(dom.intervals.empty());
    EXPECT_EQ(dom.cardinality_a, 0u);
    EXPECT_EQ(dom.x_length, 0.0);
  }
  // delta < 0, a > 0 with N below the minimum value
  auto dom = enumeration_domain(validate(1, 1, 41), 40);
  EXPECT_EQ(dom.cardinality_a, 0u);
  EXPECT_EQ(dom.x_length, 0.0);
}

TEST(EnumerationDomain, MatchesOracleAndIntervalBound) {
  oracle::PolyGenerator gen(11);
  for (int t = 0; t < 2000; ++t) {
    auto f = gen.next();
    const u64 N = gen.uniform(1, 200000);
    auto dom = enumeration_domain(f, N);
    auto pts = oracle::domain_points(f, N);
    ASSERT_EQ(dom.cardinality_a, pts.size()) << f.a() << " " << f.b() << " " << f.c() << " N=" << N;
    for (i64 n : pts) {
      bool inside = false;
      for (const auto& r : dom.intervals) inside = inside || r.contains(n);
      EXPECT_TRUE(inside);
    }
    if (dom.intervals.size() == 2) {
      EXPECT_GT(f.delta(), 0);
      EXPECT_LT(dom.intervals[0].hi + 1, dom.intervals[1].lo);
    }
    if (dom.x_length >= 2.0) {
      EXPECT_GT(static_cast<double>(dom.cardinality_a), dom.x_length - 2.0);
      EXPECT_LT(static_cast<double>(dom.cardinality_a), dom.x_length + 2.0);
    }
  }
}

TEST(RootsModPrime, Examples) {
  EXPECT_EQ(roots_mod_prime(validate(1, 0, 1), 5).roots, (std::vector<u64>{2, 3}));
  EXPECT_TRUE(roots_mod_prime(validate(1, 0, 1), 3).roots.empty());
  EXPECT_EQ(roots_mod_prime(validate(1, 0, 1), 2).roots, (std::vector<u64>{1}));
  EXPECT_EQ(roots_mod_prime(validate(1, 1, 41), 41).roots, (std::vector<u64>{0, 40}));
  EXPECT_THROW(roots_mod_prime(validate(1, 0, 1), 15), Error);
}

TEST(RootsModPrime, LeadingCoefficientDivisible) {
  // 3x^2 + 2x + 1 mod 3 is 2x + 1: root 1
  EXPECT_EQ(roots_mod_prime(validate(3, 2, 1), 3).roots, (std::vector<u64>{1}));
  // 3x^2 + 3x + 1 mod 3 is the constant 1: no roots
  EXPECT_TRUE(roots_mod_prime(validate(3, 3, 1), 3).roots.empty());
}

TEST(RootsModPrime, MatchesEnumerationBelow1e4) {
  oracle::PolyGenerator gen(21, 1000);
  const auto primes = primes_up_to(10000);
  for (int t = 0; t < 6; ++t) {
    auto f = gen.next();
    for (u32 p : primes) {
      auto rs = roots_mod_prime(f, p);
      ASSERT_EQ(rs.roots, oracle::brute_force_roots(f, p)) << "p=" << p;
      ASSERT_LE(rs.size(), 2u);
    }
  }
}

TEST(Rho, Examples) {
  EXPECT_EQ(rho(validate(1, 1, 41), 1), 1u);
  EXPECT_EQ(rho(validate(1, 0, 1), 15), 0u);
  EXPECT_EQ(rho(validate(1, 1, 41), 3), 0u);
  EXPECT_EQ(rho(validate(1, 0, 1), 25), 2u);
  EXPECT_EQ(rho(validate(1, 0, 1), 65), 4u);
}

TEST(Rho, PrimePowersIncludingSingularRoots) {
  // x^2 + x + 7 has delta = -27: the root mod 3 is singular
  auto f = validate(1, 1, 7);
  for (int k = 1; k <= 6; ++k) {
    u64 m = 1;
    for (int i = 0; i < k; ++i) m *= 3;
    EXPECT_EQ(roots_mod_prime_power(f, 3, k).roots, oracle::brute_force_roots(f, m)) << "3^" << k;
  }
  // delta = 8 * 4 ... 2-adic singular behaviour
  auto g = validate(1, 0, -8);
  for (int k = 1; k <= 9; ++k) {
    EXPECT_EQ(roots_mod_prime_power(g, 2, k).roots, oracle::brute_force_roots(g, 1ULL << k)) << "2^" << k;
  }
}

TEST(Rho, CrtPathMatchesEnumeration) {
  oracle::PolyGenerator gen(31);
  for (int t = 0; t < 40; ++t) {
    auto f = gen.next();
    for (u64 d = 1; d <= 600; ++d) {
      ASSERT_EQ(rho(f, d), rho_by_enumeration(f, d)) << "d=" << d;
    }
  }
}

TEST(Rho, RootsModGeneralModulus) {
  auto f = validate(1, 1, 1);  // delta = -3
  for (u64 d : {7ULL, 21ULL, 49ULL, 91ULL, 273ULL}) {
    EXPECT_EQ(roots_mod(f, d).roots, oracle::brute_force_roots(f, d)) << d;
  }
}

TEST(Rho, MultiplicativeOnCoprimePairs) {
  oracle::PolyGenerator gen(41);
  for (int t = 0; t < 500; ++t) {
    auto f = gen.next();
    const u64 d1 = gen.uniform(1, 300), d2 = gen.uniform(1, 300);
    if (gcd(d1, d2) != 1) continue;
    EXPECT_EQ(rho(f, d1 * d2), rho(f, d1) * rho(f, d2));
    EXPECT_EQ(rho(f, d1 * d2), rho_by_enumeration(f, d1 * d2));
  }
}

TEST(Rho, DominatedByLambdaOnSquarefree) {
  oracle::PolyGenerator gen(51);
  for (int t = 0; t < 20; ++t) {
    auto f = gen.next();
    for (u64 d = 1; d <= 3000; ++d) {
      if (!is_squarefree(d)) continue;
      ASSERT_LE(rho(f, d), lambda(f.delta(), d)) << "d=" << d;
    }
  }
}

}  // namespace
}  // namespace quadprimes
