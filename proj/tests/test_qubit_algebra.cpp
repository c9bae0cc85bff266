#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "renyi_qubit/oracle.hpp"
#include "renyi_qubit/qubit_algebra.hpp"

using namespace renyi_qubit;

namespace {

double max_abs(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST(QubitState, Validation) {
  EXPECT_THROW(QubitState::from_amplitudes(1.0, 1.0), DomainError);
  EXPECT_THROW(QubitState::normalized(0.0, 0.0), DomainError);
  const QubitState s = QubitState::normalized(3.0, Complex(0.0, 4.0));
  EXPECT_NEAR(std::norm(s.a1()) + std::norm(s.a2()), 1.0, 1e-15);
}

TEST(Unitary2, Validation) {
  Matrix2c m;
  m << 1.0, 1.0, 0.0, 1.0;
  EXPECT_THROW(Unitary2::from_matrix(m), DomainError);
  m << 1.0, 0.0, 0.0, std::nan("");
  EXPECT_THROW(Unitary2::from_matrix(m), DomainError);
}

TEST(OverlapOf, Examples) {
  EXPECT_EQ(overlap_of(Unitary2::identity()).c(), 1.0);
  EXPECT_TRUE(overlap_of(Unitary2::rotation(kQuarterPi)).complementary());
  EXPECT_NEAR(overlap_of(Unitary2::rotation(kPi / 6)).c(), std::sqrt(3.0) / 2, 1e-15);
  EXPECT_NEAR(overlap_of(Unitary2::rotation(kPi / 3)).c(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Factorize, CanonicalAndDiagonal) {
  const auto f = factorize(Unitary2::rotation(0.4));
  EXPECT_NEAR(f.gamma_t, 0.4, 1e-15);
  for (double x : {f.u[0], f.u[1], f.v[0], f.v[1]}) EXPECT_NEAR(x, 0.0, 1e-15);

  const auto d = factorize(Unitary2::phases(0.7, 0.0));
  EXPECT_EQ(d.gamma_t, 0.0);
  EXPECT_EQ(d.v[0], 0.0);
  EXPECT_LT(max_abs(d.reconstruct() - Unitary2::phases(0.7, 0.0).matrix()), 1e-15);

  Matrix2c anti;
  anti << 0.0, Complex(0.0, 1.0), Complex(0.6, 0.8), 0.0;
  const auto a = factorize(Unitary2::from_matrix(anti));
  EXPECT_NEAR(a.gamma_t, kHalfPi, 1e-15);
  EXPECT_LT(max_abs(a.reconstruct() - anti), 1e-15);
}

TEST(Factorize, RoundTripOnHaarSamples) {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const Unitary2 t = random_unitary(rng);
    const auto f = factorize(t);
    EXPECT_EQ(f.v[0], 0.0);
    EXPECT_GE(f.gamma_t, 0.0);
    EXPECT_LE(f.gamma_t, kHalfPi);
    EXPECT_LT(max_abs(f.reconstruct() - t.matrix()), 1e-10);
  }
}

TEST(MinimizerStates, Identity) {
  const Unitary2 t = Unitary2::identity();
  const BoundResult b = tight_bound(EntropicIndex(1), EntropicIndex(1), overlap_of(t));
  const MinimizerFamily fam = minimizer_states(t, b);
  ASSERT_EQ(fam.states.size(), 2u);
  EXPECT_NEAR(std::abs(fam.states[0].psi.a1()), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(fam.states[1].psi.a2()), 1.0, 1e-15);
  for (const auto& m : fam.states) EXPECT_EQ(entropy_sum_of_state(m.psi, t, EntropicIndex(1), EntropicIndex(1)), 0.0);
}

TEST(MinimizerStates, ComplementaryHalfHalf) {
  const Unitary2 t = Unitary2::rotation(kQuarterPi);
  const EntropicIndex h(0.5);
  const BoundResult b = tight_bound(h, h, overlap_of(t));
  const MinimizerFamily fam = minimizer_states(t, b);
  ASSERT_EQ(fam.states.size(), 4u);
  for (const auto& m : fam.states) EXPECT_NEAR(entropy_sum_of_state(m.psi, t, h, h), kLog2, 1e-12);
}

TEST(MinimizerStates, NegativeEpsilonBranch) {
  const Unitary2 t = Unitary2::rotation(3 * kPi / 8);
  const EntropicIndex a(3.0);
  const Overlap ov = overlap_of(t);
  EXPECT_NEAR(ov.gamma(), kPi / 8, 1e-15);
  const BoundResult b = tight_bound(a, a, ov);
  EXPECT_NEAR(b.value, diagonal_bound(a, Overlap::from_c(std::cos(kPi / 8))).value, 1e-12);
  const MinimizerFamily fam = minimizer_states(t, b);
  EXPECT_EQ(fam.epsilon_t, -1);
  for (const auto& m : fam.states) {
    EXPECT_NEAR(entropy_sum_of_state(m.psi, t, a, a), b.value, 1e-12);
    EXPECT_NEAR(landau_pollak_residual(m.psi, t), 0.0, 1e-12);
  }
}

TEST(MinimizerStates, QuarterPiSignChoiceIsImmaterial) {
  // At gamma_t = pi/4 both signs of epsilon give states attaining the bound.
  const Unitary2 t = Unitary2::phases(0.3, -1.1) * Unitary2::rotation(kQuarterPi) * Unitary2::phases(0.0, 0.9);
  for (double a : {0.8, 2.0}) {
    for (double b : {0.4, 3.0}) {
      const BoundResult r = tight_bound(EntropicIndex(a), EntropicIndex(b), overlap_of(t));
      const MinimizerFamily fam = minimizer_states(t, r);
      EXPECT_EQ(fam.epsilon_t, 1);
      for (const Angle& th : r.theta_opt) {
        for (int e : {1, -1}) {
          for (int n = 0; n < 2; ++n) {
            const double ang = e * th.value + n * kHalfPi;
            const QubitState psi = QubitState::normalized(std::cos(ang), std::polar(std::sin(ang), -fam.v[1]));
            EXPECT_NEAR(entropy_sum_of_state(psi, t, EntropicIndex(a), EntropicIndex(b)), r.value, 1e-12);
          }
        }
      }
    }
  }
}

TEST(MinimizerStates, RejectsMismatchedBound) {
  const BoundResult b = tight_bound(EntropicIndex(1), EntropicIndex(2), Overlap::from_c(0.9));
  EXPECT_THROW(minimizer_states(Unitary2::rotation(0.2), b), DomainError);
}

TEST(MinimizerStates, AttainmentAndLandauPollakOnHaarSamples) {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> idx(0.0, 5.0);
  for (int k = 0; k < 400; ++k) {
    const Unitary2 t = random_unitary(rng);
    const EntropicIndex a(idx(rng));
    const EntropicIndex b(k % 7 == 0 ? a.value() : idx(rng));
    const BoundResult r = tight_bound(a, b, overlap_of(t));
    const MinimizerFamily fam = minimizer_states(t, r);
    ASSERT_EQ(fam.states.size(), 2 * r.theta_opt.size());
    for (const auto& m : fam.states) {
      EXPECT_NEAR(std::norm(m.psi.a1()) + std::norm(m.psi.a2()), 1.0, 1e-14);
      EXPECT_NEAR(entropy_sum_of_state(m.psi, t, a, b), r.value, 1e-9);
      EXPECT_NEAR(landau_pollak_residual(m.psi, t), 0.0, 1e-9);
    }
  }
}

TEST(LandauPollak, ResidualNonnegative) {
  const QubitState up = QubitState::from_amplitudes(1.0, 0.0);
  EXPECT_EQ(landau_pollak_residual(up, Unitary2::identity()), 0.0);
  std::mt19937_64 rng(3);
  const Unitary2 t = Unitary2::rotation(kQuarterPi);
  for (int k = 0; k < 10000; ++k) EXPECT_GE(landau_pollak_residual(random_state(rng), t), -1e-12);
}

TEST(EntropySum, ExamplesAndInvariances) {
  const QubitState up = QubitState::from_amplitudes(1.0, 0.0);
  const QubitState plus = QubitState::normalized(1.0, 1.0);
  for (double a : {0.0, 1.0, 4.0}) EXPECT_EQ(entropy_sum_of_state(up, Unitary2::identity(), EntropicIndex(a), EntropicIndex(a)), 0.0);
  EXPECT_NEAR(entropy_sum_of_state(plus, Unitary2::identity(), EntropicIndex(1), EntropicIndex(1)), 2 * kLog2, 1e-15);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> idx(0.0, 5.0);
  std::uniform_real_distribution<double> ph(0.0, 2 * kPi);
  for (int k = 0; k < 500; ++k) {
    const Unitary2 t = random_unitary(rng);
    const QubitState psi = random_state(rng);
    const EntropicIndex a(idx(rng));
    const EntropicIndex b(idx(rng));
    const double base = entropy_sum_of_state(psi, t, a, b);
    // equal up to the rounding of the complex product
    EXPECT_NEAR(entropy_sum_of_state(psi.with_global_phase(ph(rng)), t, a, b), base, 1e-14);
    // Swapping the rows of T (gamma_t -> pi/2 - gamma_t) changes neither the
    // distribution nor the bound.
    const Unitary2 swapped = t.rows_swapped();
    EXPECT_NEAR(factorize(swapped).gamma_t, kHalfPi - factorize(t).gamma_t, 1e-12);
    EXPECT_EQ(entropy_sum_of_state(psi, swapped, a, b), base);
    EXPECT_NEAR(tight_bound(a, b, overlap_of(swapped)).value, tight_bound(a, b, overlap_of(t)).value, 1e-12);
  }
}

TEST(EntropySum, NeverBelowBound) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> idx(0.0, 5.0);
  for (int k = 0; k < 200; ++k) {
    const Unitary2 t = random_unitary(rng);
    const EntropicIndex a(idx(rng));
    const EntropicIndex b(idx(rng));
    const double bound = tight_bound(a, b, overlap_of(t)).value;
    for (int s = 0; s < 200; ++s) EXPECT_GE(entropy_sum_of_state(random_state(rng), t, a, b), bound - 1e-9);
  }
}

TEST(RandomState, UniformOnSphere) {
  std::mt19937_64 rng(99);
  double mean_z = 0.0;
  double mean_z2 = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    const QubitState s = random_state(rng);
    const double z = std::norm(s.a1()) - std::norm(s.a2());
    mean_z += z / n;
    mean_z2 += z * z / n;
  }
  EXPECT_NEAR(mean_z, 0.0, 0.01);
  EXPECT_NEAR(mean_z2, 1.0 / 3.0, 0.01);
}

TEST(RandomUnitary, HaarMoments) {
  // |T11|^2 is uniform on [0, 1] for Haar U(2).
  std::mt19937_64 rng(5);
  double m1 = 0.0;
  double m2 = 0.0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) {
    const double x = std::norm(random_unitary(rng).matrix()(0, 0));
    m1 += x / n;
    m2 += x * x / n;
  }
  EXPECT_NEAR(m1, 0.5, 0.01);
  EXPECT_NEAR(m2, 1.0 / 3.0, 0.01);
}

TEST(RandomUnitary, SeededAndReproducible) {
  std::mt19937_64 r1(17);
  std::mt19937_64 r2(17);
  for (int k = 0; k < 10; ++k) EXPECT_EQ(random_unitary(r1).matrix(), random_unitary(r2).matrix());
}
