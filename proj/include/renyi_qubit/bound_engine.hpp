#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "renyi_qubit/entropy_core.hpp"

namespace renyi_qubit {

/// Overlap c = max |<b_l|a_k>| between two qubit eigenbases, together with the
/// reduced mixing angle gamma = arccos c in [0, pi/4].
class Overlap {
 public:
  /// c must lie in [1/sqrt(2), 1]. Values within 1e-8 of an endpoint are
  /// snapped onto it so that truncated decimal inputs such as 0.70710678 are
  /// treated as complementary observables.
  static Overlap from_c(double c);
  /// gamma in [0, pi/4].
  static Overlap from_gamma(double gamma);
  /// Rotation angle of the canonical factor V(gamma_T), gamma_T in [0, pi/2];
  /// the reduced angle is min(gamma_T, pi/2 - gamma_T).
  static Overlap from_gamma_t(double gamma_t);

  double c() const noexcept { return c_; }
  double gamma() const noexcept { return gamma_; }
  bool commuting() const noexcept { return gamma_ == 0.0; }
  bool complementary() const noexcept { return gamma_ == kQuarterPi; }

 private:
  Overlap(double c, double gamma) : c_(c), gamma_(gamma) {}
  double c_;
  double gamma_;
};

enum class Regime {
  TrivialC1,
  ClosedFormSquare,
  DiagonalFirst,
  DiagonalInterior,
  DiagonalHalfGamma,
  NumericGeneral,
};

std::string_view to_string(Regime r) noexcept;

struct BoundResult {
  double value = 0.0;              // nats
  std::vector<Angle> theta_opt;    // every global minimizer in [0, gamma], ascending
  Regime regime = Regime::NumericGeneral;
  EntropicIndex alpha{0.0};
  EntropicIndex beta{0.0};
  Overlap overlap = Overlap::from_c(1.0);
};

/// Tight lower bound on H_alpha(A) + H_beta(B) over all pure qubit states:
/// the minimum of objective(alpha, beta, gamma, theta) over theta in [0, gamma].
///
/// Dispatch order: commuting observables, the closed form on [0, 1/2]^2, the
/// diagonal alpha = beta, and otherwise a multi-start golden-section search.
BoundResult tight_bound(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov);

/// Closed form for (alpha, beta) in [0, 1/2]^2 with lambda = max(alpha, beta):
/// H_lambda(c^2, 1 - c^2), minimized at theta = 0 (alpha < beta), gamma
/// (alpha > beta) or both.
BoundResult closed_form_square(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov);

/// Bound on the line beta = alpha, with the three regimes:
///   first     theta_opt = {0, gamma},             value H_alpha(c^2, 1 - c^2)
///   interior  theta_opt = {t*, gamma - t*},       value found numerically
///   half      theta_opt = {gamma / 2},            value 2 H_alpha((1 + c)/2, (1 - c)/2)
/// The first regime covers alpha <= 1/2 (alpha <= alpha_dagger when c = 1/sqrt 2);
/// the half-angle regime starts at alpha_star(c).
BoundResult diagonal_bound(EntropicIndex alpha, const Overlap& ov);

/// Index where the complementary-observable diagonal bound leaves log 2: the
/// root of 2 H_alpha((2 + sqrt 2)/4, (2 - sqrt 2)/4) = log 2 on (1, 2).
double alpha_dagger();

/// Smallest alpha for which the diagonal minimizer over [0, gamma/2] sits at
/// gamma/2. Defined for c in [1/sqrt 2, 1); equals alpha_dagger() at 1/sqrt 2.
/// `xtol` is the bisection width in alpha.
double alpha_star(const Overlap& ov, double xtol = 1e-10);

/// Diagonal bound at lambda = max(alpha, beta); valid for every pair but tight
/// only on the diagonal.
double suboptimal_bound(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov);

struct ReferenceBound {
  double value = 0.0;
  /// Whether the bound is known to hold at the requested (alpha, beta, c).
  bool applicable = false;
};

/// Earlier qubit bounds: deutsch, maassen_uffink_shannon,
/// maassen_uffink_conjugate, rastegin_half and collision.
std::map<std::string, ReferenceBound> reference_bounds(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov);

enum class SweepVariable { Alpha, Beta, Overlap };

struct SweepSpec {
  SweepVariable variable = SweepVariable::Overlap;
  std::vector<double> grid;  // strictly monotone
  double alpha = 1.0;
  double beta = 1.0;
  double c = kInvSqrt2;
  /// Keep beta equal to alpha while sweeping alpha (the diagonal).
  bool diagonal = false;
  unsigned threads = 1;
};

struct SweepRow {
  double swept = 0.0;
  BoundResult bound;
};

/// Evaluates tight_bound along the grid. Rows come back in grid order no
/// matter how many threads evaluate them.
std::vector<SweepRow> bound_sweep(const SweepSpec& spec);

}  // namespace renyi_qubit
