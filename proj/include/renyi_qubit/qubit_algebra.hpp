#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <random>
#include <vector>

#include "renyi_qubit/bound_engine.hpp"
#include "renyi_qubit/entropy_core.hpp"

namespace renyi_qubit {

using Complex = std::complex<double>;
using Vector2c = Eigen::Vector2cd;
using Matrix2c = Eigen::Matrix2cd;

/// Pure qubit state written in the eigenbasis of the first observable.
class QubitState {
 public:
  /// Amplitudes must have unit norm within `tol`.
  static QubitState from_amplitudes(Complex a1, Complex a2, double tol = 1e-12);
  /// Rescales (a1, a2) to unit norm.
  static QubitState normalized(Complex a1, Complex a2);

  Complex a1() const { return amp_(0); }
  Complex a2() const { return amp_(1); }
  const Vector2c& amplitudes() const noexcept { return amp_; }

  /// Same state multiplied by exp(i phi).
  QubitState with_global_phase(double phi) const;

 private:
  explicit QubitState(Vector2c amp) : amp_(std::move(amp)) {}
  Vector2c amp_;
};

/// Basis change T with T_lk = <b_l|a_k>.
class Unitary2 {
 public:
  /// Rejects matrices with max |(T^dagger T - I)_ij| > tol.
  static Unitary2 from_matrix(const Matrix2c& m, double tol = 1e-12);
  static Unitary2 identity();
  /// V(g) = [[cos g, sin g], [-sin g, cos g]].
  static Unitary2 rotation(double gamma_t);
  /// Phi(x) = diag(exp(i x1), exp(i x2)).
  static Unitary2 phases(double x1, double x2);

  const Matrix2c& matrix() const noexcept { return m_; }
  Vector2c apply(const QubitState& psi) const { return m_ * psi.amplitudes(); }
  Unitary2 operator*(const Unitary2& rhs) const { return Unitary2(m_ * rhs.m_); }
  /// Rows exchanged (J T).
  Unitary2 rows_swapped() const;

 private:
  explicit Unitary2(Matrix2c m) : m_(std::move(m)) {}
  Matrix2c m_;
};

/// T = Phi(u) V(gamma_t) Phi(v) with the gauge v[0] = 0.
struct UnitaryFactorization {
  std::array<double, 2> u{};
  double gamma_t = 0.0;  // [0, pi/2]
  std::array<double, 2> v{};

  Matrix2c reconstruct() const;
};

struct MinimizerState {
  Angle theta;  // the theta_opt this state was built from
  int n = 0;    // pi/2 shift, 0 or 1
  QubitState psi;
};

/// Representatives (global phase 0) of every state attaining a bound.
struct MinimizerFamily {
  std::vector<Angle> theta_opts;
  int epsilon_t = 1;
  std::array<double, 2> v{};
  std::vector<MinimizerState> states;
};

/// Outcome distribution |amplitudes|^2. Weights below the rounding floor of a
/// unit-norm 2x2 product (about (8 eps)^2) are set to zero, so states that are
/// eigenstates up to rounding get an exactly deterministic distribution.
ProbabilityPair outcome_distribution(const Vector2c& amplitudes);

/// c = max |T_lk|; gamma is recovered as atan2(min, max) of the entry moduli
/// so it stays accurate near c = 1.
Overlap overlap_of(const Unitary2& t);

UnitaryFactorization factorize(const Unitary2& t);

/// States exp(i phi) Phi(-v) [cos(e theta + n pi/2), sin(e theta + n pi/2)] at
/// phi = 0 for every theta in bound.theta_opt and n in {0, 1}, where
/// e = sign(pi/4 - gamma_t) and e = +1 at gamma_t = pi/4.
MinimizerFamily minimizer_states(const Unitary2& t, const BoundResult& bound);

/// arccos sqrt(max_k |psi_k|^2) + arccos sqrt(max_l |(T psi)_l|^2) - arccos c.
/// Nonnegative for every state; zero exactly on the Landau-Pollak boundary.
double landau_pollak_residual(const QubitState& psi, const Unitary2& t);

/// H_alpha(|psi|^2) + H_beta(|T psi|^2).
double entropy_sum_of_state(const QubitState& psi, const Unitary2& t, EntropicIndex alpha, EntropicIndex beta);

/// Uniform on the pure-state manifold: cos of the colatitude and the relative
/// phase are both uniform.
QubitState random_state(std::mt19937_64& rng);

/// Haar-distributed element of U(2).
Unitary2 random_unitary(std::mt19937_64& rng);

}  // namespace renyi_qubit
