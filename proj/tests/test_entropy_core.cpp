#include <gtest/gtest.h>

#include <cmath>

#include "renyi_qubit/entropy_core.hpp"

using namespace renyi_qubit;

namespace {

double H(double p, double lam) { return renyi_entropy(ProbabilityPair(p), EntropicIndex(lam)); }

}  // namespace

TEST(EntropicIndex, RejectsNegativeAndNonFinite) {
  EXPECT_THROW(EntropicIndex(-1e-300), DomainError);
  EXPECT_THROW(EntropicIndex(std::nan("")), DomainError);
  EXPECT_THROW((void)EntropicIndex(INFINITY), DomainError);
  EXPECT_NO_THROW(EntropicIndex(0.0));
  EXPECT_TRUE(EntropicIndex(1.0).is_shannon());
  EXPECT_TRUE(EntropicIndex(0.0).is_support());
}

TEST(ProbabilityPair, Validation) {
  EXPECT_THROW(ProbabilityPair(-0.1), DomainError);
  EXPECT_THROW(ProbabilityPair(1.5), DomainError);
  EXPECT_THROW(ProbabilityPair::from_weights(0.0, 0.0), DomainError);
  EXPECT_THROW(ProbabilityPair::from_weights(-1.0, 2.0), DomainError);
  const auto p = ProbabilityPair::from_weights(3.0, 1.0);
  EXPECT_DOUBLE_EQ(p.first(), 0.75);
  EXPECT_DOUBLE_EQ(p.second(), 0.25);
  EXPECT_THROW(Angle(std::nan("")), DomainError);
}

TEST(ProbabilityPair, FromAngleKeepsSmallWeightPrecise) {
  const auto p = ProbabilityPair::from_angle(1e-10);
  EXPECT_NEAR(p.second() / 1e-20, 1.0, 1e-12);
  EXPECT_EQ(p.first(), 1.0);
}

TEST(RenyiEntropy, ExactCases) {
  EXPECT_NEAR(H(0.5, 1.0), kLog2, 1e-15);
  for (double lam : {0.0, 0.3, 1.0, 2.0, 7.5}) {
    EXPECT_EQ(H(1.0, lam), 0.0);
    EXPECT_EQ(H(0.0, lam), 0.0);
    EXPECT_NEAR(H(0.5, lam), kLog2, 1e-15);
  }
  EXPECT_EQ(H(0.2, 0.0), kLog2);
  EXPECT_NEAR(H(0.9, 2.0), -std::log(0.82), 1e-15);
}

// Values from tests/oracle/freeze_values.py (40-digit mpmath).
TEST(RenyiEntropy, FrozenHighPrecision) {
  EXPECT_NEAR(H(0.9, 2.0), 0.19845093872383825475, 1e-15);
  EXPECT_NEAR(H(0.3, 0.5), 0.65050850509825601348, 1e-15);
  EXPECT_NEAR(H(0.3, 1.0), 0.61086430205489346303, 1e-15);
  EXPECT_NEAR(H(0.3, 7.0), 0.415678754734049043, 1e-15);
  EXPECT_NEAR(H(1e-12, 0.5) / 1.9999980000016666647e-6, 1.0, 1e-10);  // second weight is fl(1 - 1e-12)
  EXPECT_NEAR(H(1e-12, 1.0) / 2.8631021115928048208e-11, 1.0, 1e-4);  // 1 - 1e-12 is inexact in binary
  EXPECT_NEAR(H(1e-12, 3.0) / 1.50000000000075e-12, 1.0, 1e-4);
  EXPECT_NEAR(H(0.5 - 1e-9, 1.000001), 0.69314718055994530742, 1e-15);
  EXPECT_NEAR(H(0.3, 50.0), 0.36395402442727793766, 1e-15);
  EXPECT_NEAR(H(0.3, 400.0), 0.35756886610399235981, 1e-15);
  EXPECT_NEAR(H(0.5, 2.5), 0.69314718055994530942, 1e-15);
  EXPECT_NEAR(H(1e-9, 60.0) / 1.016949153050847458e-9, 1.0, 1e-7);
}

TEST(RenyiEntropy, ContinuousAcrossShannonPoint) {
  for (double p : {0.01, 0.2, 0.45}) {
    EXPECT_NEAR(H(p, 1.0 - 1e-9), H(p, 1.0), 1e-8);
    EXPECT_NEAR(H(p, 1.0 + 1e-9), H(p, 1.0), 1e-8);
  }
}

TEST(RenyiEntropy, MonotoneInIndexAndInRange) {
  for (int i = 1; i <= 99; ++i) {
    const double p = 0.01 * i;
    double prev = H(p, 0.0);
    for (int k = 0; k <= 32; ++k) {
      const double h = H(p, 0.25 * k);
      EXPECT_GE(h, 0.0);
      EXPECT_LE(h, kLog2);
      EXPECT_LE(h, prev + 1e-15) << "p=" << p << " lambda=" << 0.25 * k;
      prev = h;
    }
  }
}

TEST(MinEntropy, Values) {
  EXPECT_NEAR(min_entropy(ProbabilityPair(0.5)), kLog2, 1e-15);
  EXPECT_EQ(min_entropy(ProbabilityPair(1.0)), 0.0);
  EXPECT_NEAR(min_entropy(ProbabilityPair(0.8)), -std::log(0.8), 1e-15);
  EXPECT_NEAR(min_entropy(ProbabilityPair(0.3)), H(0.3, 400.0), 2e-3);
}

TEST(BigD, Values) {
  for (double lam : {0.0, 0.5, 1.0, 3.0}) EXPECT_EQ(big_d(EntropicIndex(lam), Angle(0.0)), 1.0);
  EXPECT_NEAR(big_d(EntropicIndex(2.0), Angle(kQuarterPi)), 0.5, 1e-15);
  EXPECT_NEAR(big_d(EntropicIndex(0.5), Angle(kPi / 6)), 1.3660254037844386468, 1e-15);
  // Support count at lambda = 0.
  EXPECT_EQ(big_d(EntropicIndex(0.0), Angle(0.3)), 2.0);
}

TEST(BigDPrime, FrozenAndLimits) {
  EXPECT_THROW(big_d_prime(EntropicIndex(0.0), Angle(0.3)), DomainError);
  for (double t : {0.0, 0.2, 1.0}) EXPECT_NEAR(big_d_prime(EntropicIndex(1.0), Angle(t)), 0.0, 1e-15);
  EXPECT_NEAR(big_d_prime(EntropicIndex(2.0), Angle(kQuarterPi)), 0.0, 1e-15);
  EXPECT_NEAR(big_d_prime(EntropicIndex(2.0), Angle(kPi / 8)), -1.0, 1e-14);
  EXPECT_NEAR(big_d_prime(EntropicIndex(0.7), Angle(0.3)), 0.41509760532667457508, 1e-14);
  EXPECT_EQ(big_d_prime(EntropicIndex(0.8), Angle(0.0)), 0.0);
  EXPECT_EQ(big_d_prime(EntropicIndex(0.5), Angle(0.0)), 1.0);
  // kHalfPi is not exactly pi/2, so its cos is about 6e-17 rather than 0.
  EXPECT_NEAR(big_d_prime(EntropicIndex(0.5), Angle(kHalfPi)), -1.0, 1e-15);
  EXPECT_EQ(big_d_prime(EntropicIndex(0.3), Angle(0.0)), INFINITY);
  EXPECT_LT(big_d_prime(EntropicIndex(0.3), Angle(kHalfPi)), -1e6);
}

TEST(BigDPrime, MatchesCentralDifferences) {
  const double h = 1e-6;
  for (double lam = 0.6; lam <= 4.0 + 1e-12; lam += 0.2) {
    const EntropicIndex l(lam);
    for (double t = 0.05; t <= kHalfPi - 0.05; t += 0.05) {
      const double fd = (big_d(l, Angle(t + h)) - big_d(l, Angle(t - h))) / (2 * h);
      EXPECT_NEAR(big_d_prime(l, Angle(t)), fd, 1e-8) << "lambda=" << lam << " theta=" << t;
    }
  }
}

TEST(CurvatureK, FrozenValues) {
  EXPECT_NEAR(curvature_k(EntropicIndex(2.0), Angle(kQuarterPi)), -2.0, 1e-13);
  EXPECT_NEAR(curvature_k(EntropicIndex(0.5), Angle(kPi / 8)), -4.0, 1e-13);
  EXPECT_NEAR(curvature_k(EntropicIndex(0.25), Angle(kPi / 6)), -3.2729772593217165401, 1e-13);
  EXPECT_THROW(curvature_k(EntropicIndex(1.0), Angle(0.3)), DomainError);
  EXPECT_THROW(curvature_k(EntropicIndex(0.0), Angle(0.3)), DomainError);
  EXPECT_THROW(curvature_k(EntropicIndex(2.0), Angle(0.0)), DomainError);
}

// K equals D^2 times the second derivative of log D / (1 - lambda).
TEST(CurvatureK, MatchesSecondDifferenceOfEntropy) {
  const double h = 1e-4;
  for (double lam : {0.25, 0.5, 0.8, 2.0, 3.5}) {
    const EntropicIndex l(lam);
    const auto g = [&](double t) { return std::log(big_d(l, Angle(t))) / (1.0 - lam); };
    for (double t : {0.2, 0.5, kQuarterPi, 1.1}) {
      const double d = big_d(l, Angle(t));
      const double fd = (g(t + h) - 2 * g(t) + g(t - h)) / (h * h);
      EXPECT_NEAR(curvature_k(l, Angle(t)), d * d * fd, 1e-6) << "lambda=" << lam << " theta=" << t;
    }
  }
}

TEST(CurvatureK, NegativeForSmallIndices) {
  for (int i = 1; i <= 50; ++i) {
    const EntropicIndex l(0.01 * i);
    for (int j = 1; j < 200; ++j) {
      EXPECT_LT(curvature_k(l, Angle(kHalfPi * j / 200)), 0.0);
    }
  }
}

TEST(Objective, Values) {
  const EntropicIndex one(1.0);
  const EntropicIndex two(2.0);
  EXPECT_EQ(objective(EntropicIndex(0.3), EntropicIndex(4.0), Angle(0.0), Angle(0.0)), 0.0);
  EXPECT_NEAR(objective(one, one, Angle(kQuarterPi), Angle(0.0)), kLog2, 1e-15);
  EXPECT_NEAR(objective(two, two, Angle(kQuarterPi), Angle(kPi / 8)), 0.57536414490356185488, 1e-14);
  EXPECT_THROW(objective(one, one, Angle(1.0), Angle(0.0)), DomainError);
  EXPECT_THROW(objective(one, one, Angle(0.5), Angle(0.6)), DomainError);
  EXPECT_THROW(objective(one, one, Angle(0.5), Angle(-0.1)), DomainError);
}

TEST(Objective, IsSumOfEntropies) {
  for (double a : {0.0, 0.4, 1.0, 2.7}) {
    for (double b : {0.0, 0.6, 1.0, 5.0}) {
      const double g = 0.6;
      const double t = 0.25;
      const double expect = renyi_entropy(ProbabilityPair::from_angle(t), EntropicIndex(a)) +
                            renyi_entropy(ProbabilityPair::from_angle(g - t), EntropicIndex(b));
      EXPECT_EQ(objective(EntropicIndex(a), EntropicIndex(b), Angle(g), Angle(t)), expect);
    }
  }
}

TEST(DeltaGap, ValuesAndErrors) {
  const EntropicIndex two(2.0);
  for (double g : {0.0, 0.3, kQuarterPi}) EXPECT_NEAR(delta_gap(two, Angle(0.0), Angle(g)), 0.0, 1e-15);
  for (double t : {0.0, 0.3, kQuarterPi}) EXPECT_NEAR(delta_gap(two, Angle(t), Angle(0.0)), 0.0, 1e-15);
  EXPECT_NEAR(delta_gap(two, Angle(kPi / 8), Angle(kPi / 8)), 0.5, 1e-15);
  EXPECT_THROW(delta_gap(EntropicIndex(1.0), Angle(0.1), Angle(0.1)), DomainError);
  EXPECT_THROW(delta_gap(EntropicIndex(0.0), Angle(0.1), Angle(0.1)), DomainError);
  EXPECT_THROW(delta_gap(two, Angle(1.0), Angle(0.1)), DomainError);
}

TEST(DeltaGap, NonnegativeOnSquare) {
  for (double beta : {0.3, 0.7, 2.0, 5.0}) {
    for (int i = 0; i <= 60; ++i) {
      for (int j = 0; j <= 60; ++j) {
        const double v = delta_gap(EntropicIndex(beta), Angle(kQuarterPi * i / 60), Angle(kQuarterPi * j / 60));
        EXPECT_GE(v, -1e-15) << "beta=" << beta << " i=" << i << " j=" << j;
      }
    }
  }
}
