#include <gtest/gtest.h>

#include "gcay/bounds.hpp"

using namespace gcay;
using namespace gcay::bounds;

namespace {

bool trial_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

double ratio_as_double(const BoundReport& r) {
  return double(u64(r.ratio_num)) / double(u64(r.ratio_den));
}

}  // namespace

TEST(MooreBound, KnownValuesAndDomain) {
  EXPECT_EQ(moore_bound(57, 2), u128(3250));
  EXPECT_EQ(moore_bound(3, 2), u128(10));   // Petersen graph order
  EXPECT_EQ(moore_bound(7, 2), u128(50));   // Hoffman-Singleton order
  EXPECT_EQ(moore_bound(5, 1), u128(6));
  EXPECT_EQ(to_string_u128(moore_bound(10'000'000'000ull, 2)), "100000000000000000001");
  EXPECT_THROW(moore_bound(0, 2), DomainError);
  EXPECT_THROW(moore_bound(5, 0), DomainError);
}

TEST(FolkloreAndHalfBounds, KnownValuesAndDomain) {
  EXPECT_EQ(folklore_bound(10), u128(36));
  EXPECT_EQ(folklore_bound(1), u128(2));
  EXPECT_EQ(half_bound(4), u128(8));
  EXPECT_EQ(half_bound(57), u128(1624));
  EXPECT_THROW(folklore_bound(0), DomainError);
  EXPECT_THROW(half_bound(3), DomainError);
  for (u64 d = 4; d < 4000; d += 37) {
    EXPECT_LE(folklore_bound(d), moore_bound(d, 2));
    EXPECT_LE(half_bound(d), moore_bound(d, 2));
  }
}

TEST(LargestClassPrime, AgainstTrialDivision) {
  EXPECT_EQ(largest_class_prime_upto(10), 1u);
  EXPECT_EQ(largest_class_prime_upto(11), 11u);
  EXPECT_EQ(largest_class_prime_upto(30), 11u);
  EXPECT_EQ(largest_class_prime_upto(31), 31u);
  EXPECT_EQ(largest_class_prime_upto(100), 71u);
  for (u64 n : {500ull, 2026ull, 21220ull, 21221ull}) {
    u64 p = largest_class_prime_upto(n);
    EXPECT_TRUE(p == 1 || (p % 10 == 1 && trial_prime(p)));
    EXPECT_LE(p, n);
    for (u64 c = p == 1 ? 11 : p + 10; c <= n; c += 10) EXPECT_FALSE(trial_prime(c)) << c;
  }
  EXPECT_EQ(largest_class_prime_upto(21221), 21221u);
}

TEST(ConstructionBound, DegreeSixteenBaseCase) {
  BoundReport r = construction_bound(16);
  EXPECT_EQ(r.n, 1u);
  EXPECT_EQ(r.r, 0u);
  EXPECT_EQ(r.p, 1u);
  EXPECT_EQ(r.d_prime, 16u);
  EXPECT_EQ(r.order, u128(200));
  EXPECT_EQ(r.ratio_num, u128(25));
  EXPECT_EQ(r.ratio_den, u128(32));
  EXPECT_EQ(r.ratio_decimal(6), "0.781250");
  EXPECT_FALSE(r.guaranteed);
}

TEST(ConstructionBound, DegreeOneEightSixIsTheElevenGraph) {
  BoundReport r = construction_bound(186);
  EXPECT_EQ(r.n, 11u);
  EXPECT_EQ(r.r, 0u);
  EXPECT_EQ(r.p, 11u);
  EXPECT_EQ(r.d_prime, 186u);
  EXPECT_EQ(r.order, u128(24200));
  EXPECT_EQ(r.ratio_num, u128(6050));
  EXPECT_EQ(r.ratio_den, u128(8649));
  EXPECT_EQ(r.ratio_decimal(6), "0.699503");
}

TEST(ConstructionBound, PaddingCostsRatio) {
  BoundReport r = construction_bound(200);
  EXPECT_EQ(r.n, 11u);
  EXPECT_EQ(r.r, 14u);
  EXPECT_EQ(r.p, 11u);
  EXPECT_EQ(r.order, u128(24200));
  EXPECT_EQ(r.ratio_decimal(6), "0.605000");
  EXPECT_LT(ratio_as_double(r), ratio_as_double(construction_bound(186)));
}

TEST(ConstructionBound, GuaranteeThresholdFlips) {
  BoundReport below = construction_bound(guarantee_threshold - 1);
  BoundReport at = construction_bound(guarantee_threshold);
  EXPECT_FALSE(below.guaranteed);
  EXPECT_TRUE(at.guaranteed);
  EXPECT_EQ(at.n, 21221u);
  EXPECT_EQ(at.r, 0u);
  EXPECT_EQ(at.p, 21221u);
  EXPECT_EQ(at.d_prime, 360756u);
  EXPECT_EQ(at.order, u128(200) * 21221 * 21221);
  // 200 p^2 / d^2 > 0.684 exactly, in integers
  EXPECT_GT(at.ratio_num * 1000, at.ratio_den * 684);
}

TEST(ConstructionBound, GuaranteedRangeStaysAboveTheConstant) {
  for (u64 d = guarantee_threshold; d <= guarantee_threshold + 10000; d += 1000) {
    BoundReport r = construction_bound(d);
    EXPECT_GT(r.ratio_num * 1000, r.ratio_den * 684) << "d=" << d;
  }
}

TEST(ConstructionBound, OrderMonotoneAndBelowMoore) {
  u128 prev = 0;
  for (u64 d = 16; d <= 600; ++d) {
    BoundReport r = construction_bound(d);
    EXPECT_GE(r.order, prev) << "d=" << d;
    EXPECT_LE(r.order, moore_bound(d, 2)) << "d=" << d;
    EXPECT_EQ(r.d_prime, 17 * r.p - 1);
    EXPECT_LE(r.d_prime, d);
    prev = r.order;
  }
}

TEST(ConstructionBound, DomainGuards) {
  EXPECT_THROW(construction_bound(15), DegreeTooSmall);
  EXPECT_NO_THROW(construction_bound(16));
  EXPECT_THROW(construction_bound(1'000'000'000'000'001ull), DomainError);
}

TEST(RatioDecimal, RoundHalfUpWithCarry) {
  using bounds::detail::ratio_decimal;
  EXPECT_EQ(ratio_decimal(25, 32, 6), "0.781250");
  EXPECT_EQ(ratio_decimal(1, 3, 6), "0.333333");
  EXPECT_EQ(ratio_decimal(2, 3, 6), "0.666667");
  EXPECT_EQ(ratio_decimal(1999, 2000, 3), "1.000");
  EXPECT_EQ(ratio_decimal(199999, 100000, 4), "2.0000");
  EXPECT_EQ(ratio_decimal(1, 1, 0), "1");
  EXPECT_EQ(ratio_decimal(605, 1000, 6), "0.605000");
  EXPECT_EQ(ratio_decimal(1, 2, 0), "0");
}

TEST(AsymptoticConstant, PinnedWindowAndMonotonicity) {
  double c = asymptotic_constant();
  EXPECT_GE(c, 0.684317);
  EXPECT_LE(c, 0.684320);
  EXPECT_GT(c, 0.684);
  double c0 = asymptotic_constant(0.0);
  EXPECT_GT(c0, 0.6919);
  EXPECT_LT(c0, 0.6921);
  EXPECT_GT(c0, asymptotic_constant(0.001));
  EXPECT_GT(asymptotic_constant(0.001), c);
  EXPECT_GT(c, asymptotic_constant(0.01));
}

TEST(RatioLimits, PinnedValuesForTheConstructionConstant) {
  RatioLimits rl = ratio_limits(200.0 / 289.0);
  EXPECT_NEAR(rl.lower, 0.663781, 1e-6);
  EXPECT_NEAR(rl.upper, 0.797918, 1e-6);
  RatioLimits unit = ratio_limits(1.0);
  EXPECT_DOUBLE_EQ(unit.lower, 1.0);
  EXPECT_DOUBLE_EQ(unit.upper, 1.0);
  RatioLimits quarter = ratio_limits(0.25);
  EXPECT_DOUBLE_EQ(quarter.lower, 0.0);
  EXPECT_DOUBLE_EQ(quarter.upper, 0.0);
}

TEST(RatioLimits, DomainAndOrdering) {
  EXPECT_THROW(ratio_limits(0.0), DomainError);
  EXPECT_THROW(ratio_limits(-0.5), DomainError);
  EXPECT_THROW(ratio_limits(1.5), DomainError);
  // the two limits order as lower <= upper exactly when c >= 1/4,
  // since (2s - 1)(s - 1) <= 0 requires s = sqrt(c) in [1/2, 1]
  for (double c = 0.25; c <= 1.0; c += 0.05) {
    RatioLimits rl = ratio_limits(c);
    EXPECT_LE(rl.lower, rl.upper + 1e-12) << "c=" << c;
  }
  EXPECT_GT(ratio_limits(0.1).lower, ratio_limits(0.1).upper);
}
