#include "renyi_qubit/qubit_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace renyi_qubit {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kProbabilityFloor = (8.0 * kEps) * (8.0 * kEps);
constexpr double kOverlapMatchTol = 1e-9;

double arccos_sqrt_max(const ProbabilityPair& p) {
  // arccos sqrt(pmax) == atan2(sqrt(pmin), sqrt(pmax)), without the loss of
  // precision arccos suffers next to 1.
  return std::atan2(std::sqrt(p.min()), std::sqrt(p.max()));
}

}  // namespace

QubitState QubitState::from_amplitudes(Complex a1, Complex a2, double tol) {
  const double norm2 = std::norm(a1) + std::norm(a2);
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tol) {
    throw DomainError("qubit state must have unit norm, got |psi|^2 = " + std::to_string(norm2));
  }
  return QubitState(Vector2c(a1, a2));
}

QubitState QubitState::normalized(Complex a1, Complex a2) {
  const double norm = std::sqrt(std::norm(a1) + std::norm(a2));
  if (!(norm > 0.0) || !std::isfinite(norm)) throw DomainError("cannot normalize a zero or non-finite vector");
  return QubitState(Vector2c(a1 / norm, a2 / norm));
}

QubitState QubitState::with_global_phase(double phi) const { return QubitState(std::polar(1.0, phi) * amp_); }

Unitary2 Unitary2::from_matrix(const Matrix2c& m, double tol) {
  if (!m.allFinite()) throw DomainError("unitary has non-finite entries");
  const Matrix2c gram = m.adjoint() * m - Matrix2c::Identity();
  const double err = gram.cwiseAbs().maxCoeff();
  if (err > tol) throw DomainError("matrix is not unitary (max |T^dagger T - I| = " + std::to_string(err) + ")");
  return Unitary2(m);
}

Unitary2 Unitary2::identity() { return Unitary2(Matrix2c::Identity()); }

Unitary2 Unitary2::rotation(double gamma_t) {
  const double c = std::cos(gamma_t);
  const double s = std::sin(gamma_t);
  Matrix2c m;
  m << c, s, -s, c;
  return Unitary2(m);
}

Unitary2 Unitary2::phases(double x1, double x2) {
  Matrix2c m = Matrix2c::Zero();
  m(0, 0) = std::polar(1.0, x1);
  m(1, 1) = std::polar(1.0, x2);
  return Unitary2(m);
}

Unitary2 Unitary2::rows_swapped() const { return Unitary2(m_.colwise().reverse()); }

Matrix2c UnitaryFactorization::reconstruct() const {
  return (Unitary2::phases(u[0], u[1]) * Unitary2::rotation(gamma_t) * Unitary2::phases(v[0], v[1])).matrix();
}

ProbabilityPair outcome_distribution(const Vector2c& amplitudes) {
  double w1 = std::norm(amplitudes(0));
  double w2 = std::norm(amplitudes(1));
  if (w1 < kProbabilityFloor) w1 = 0.0;
  if (w2 < kProbabilityFloor) w2 = 0.0;
  return ProbabilityPair::from_weights(w1, w2);
}

Overlap overlap_of(const Unitary2& t) {
  const Matrix2c& m = t.matrix();
  const double diag = 0.5 * (std::abs(m(0, 0)) + std::abs(m(1, 1)));
  const double off = 0.5 * (std::abs(m(0, 1)) + std::abs(m(1, 0)));
  return Overlap::from_gamma(std::atan2(std::min(diag, off), std::max(diag, off)));
}

UnitaryFactorization factorize(const Unitary2& t) {
  const Matrix2c& m = t.matrix();
  UnitaryFactorization f;
  const double cos_t = 0.5 * (std::abs(m(0, 0)) + std::abs(m(1, 1)));
  const double sin_t = 0.5 * (std::abs(m(0, 1)) + std::abs(m(1, 0)));
  f.gamma_t = std::atan2(sin_t, cos_t);
  f.v[0] = 0.0;
  // Entries: T11 = e^{i u1} cos, T12 = e^{i(u1+v2)} sin, T21 = -e^{i u2} sin,
  // T22 = e^{i(u2+v2)} cos. Phases are read from the larger entries; a phase
  // that multiplies a vanishing entry is unconstrained and set to 0.
  if (cos_t >= sin_t) {
    f.u[0] = std::arg(m(0, 0));
    f.v[1] = std::abs(m(0, 1)) > 0.0 ? std::arg(m(0, 1)) - f.u[0] : 0.0;
    f.u[1] = std::arg(m(1, 1)) - f.v[1];
  } else {
    f.u[1] = std::arg(-m(1, 0));
    f.u[0] = std::abs(m(0, 0)) > 0.0 ? std::arg(m(0, 0)) : 0.0;
    f.v[1] = std::arg(m(0, 1)) - f.u[0];
  }
  return f;
}

MinimizerFamily minimizer_states(const Unitary2& t, const BoundResult& bound) {
  const Overlap ov = overlap_of(t);
  if (std::abs(ov.c() - bound.overlap.c()) > kOverlapMatchTol) {
    throw DomainError("bound was computed for c = " + std::to_string(bound.overlap.c()) +
                      " but the unitary has c = " + std::to_string(ov.c()));
  }
  const UnitaryFactorization f = factorize(t);

  MinimizerFamily family;
  family.theta_opts = bound.theta_opt;
  family.epsilon_t = f.gamma_t <= kQuarterPi ? 1 : -1;
  family.v = f.v;
  const Complex phase1 = std::polar(1.0, -f.v[0]);
  const Complex phase2 = std::polar(1.0, -f.v[1]);
  for (const Angle& theta : bound.theta_opt) {
    for (int n = 0; n < 2; ++n) {
      const double angle = family.epsilon_t * theta.value + n * kHalfPi;
      const QubitState psi = QubitState::normalized(phase1 * std::cos(angle), phase2 * std::sin(angle));
      family.states.push_back(MinimizerState{theta, n, psi});
    }
  }
  return family;
}

double landau_pollak_residual(const QubitState& psi, const Unitary2& t) {
  const double a_side = arccos_sqrt_max(outcome_distribution(psi.amplitudes()));
  const double b_side = arccos_sqrt_max(outcome_distribution(t.apply(psi)));
  return a_side + b_side - overlap_of(t).gamma();
}

double entropy_sum_of_state(const QubitState& psi, const Unitary2& t, EntropicIndex alpha, EntropicIndex beta) {
  return renyi_entropy(outcome_distribution(psi.amplitudes()), alpha) +
         renyi_entropy(outcome_distribution(t.apply(psi)), beta);
}

QubitState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  const double colatitude = std::acos(unit(rng));
  const double phi = phase(rng);
  return QubitState::normalized(std::cos(0.5 * colatitude), std::polar(std::sin(0.5 * colatitude), phi));
}

Unitary2 random_unitary(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> phase(0.0, 2.0 * kPi);
  Complex a;
  Complex b;
  double norm = 0.0;
  do {
    a = Complex(gauss(rng), gauss(rng));
    b = Complex(gauss(rng), gauss(rng));
    norm = std::sqrt(std::norm(a) + std::norm(b));
  } while (norm < 1e-12);
  a /= norm;
  b /= norm;
  const Complex g = std::polar(1.0, phase(rng));
  Matrix2c m;
  m << g * a, g * b, -g * std::conj(b), g * std::conj(a);
  return Unitary2::from_matrix(m, 1e-12);
}

}  // namespace renyi_qubit
