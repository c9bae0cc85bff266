#include "renyi_qubit/bound_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi_qubit/numerics.hpp"
#include "renyi_qubit/parallel.hpp"

namespace renyi_qubit {

namespace {

constexpr double kOverlapSnap = 1e-8;
constexpr double kGammaSlack = 1e-12;
constexpr int kSeeds = 129;
constexpr double kThetaTol = 1e-12;
constexpr double kMinimizerValueTol = 1e-9;
constexpr double kMinimizerDedupTol = 1e-8;

std::vector<Angle> angles(std::initializer_list<double> xs) {
  std::vector<Angle> out;
  for (double x : xs) {
    if (out.empty() || std::abs(x - out.back().value) > kMinimizerDedupTol) out.emplace_back(x);
  }
  return out;
}

BoundResult make_result(double value, std::vector<Angle> thetas, Regime regime, EntropicIndex alpha,
                        EntropicIndex beta, const Overlap& ov) {
  BoundResult r;
  r.value = value;
  r.theta_opt = std::move(thetas);
  r.regime = regime;
  r.alpha = alpha;
  r.beta = beta;
  r.overlap = ov;
  return r;
}

BoundResult trivial_result(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov) {
  return make_result(0.0, angles({0.0}), Regime::TrivialC1, alpha, beta, ov);
}

// Outcome of minimizing the diagonal objective F(theta) = H(theta) + H(gamma - theta)
// over [0, gamma/2].
struct HalfIntervalMinimum {
  double theta;  // selected minimizer in [0, gamma/2]
  double value;
  bool at_half_gamma;
};

HalfIntervalMinimum minimize_half_interval(EntropicIndex alpha, double gamma) {
  const auto f = [&](double t) { return objective_unchecked(alpha, alpha, gamma, t); };
  const double half = 0.5 * gamma;
  const double f_half = f(half);
  const auto minima = numerics::multistart_minima(f, 0.0, half, kSeeds, kThetaTol);
  numerics::Minimum best{half, f_half};
  for (const auto& m : minima) {
    if (m.fx < best.fx) best = m;
  }
  // gamma/2 is a stationary point of F; points that beat it only by rounding
  // noise do not count as a distinct minimizer.
  const double noise = 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(f_half));
  if (f_half <= best.fx + noise) return {half, f_half, true};
  return {best.x, best.fx, false};
}

}  // namespace

Overlap Overlap::from_c(double c) {
  if (!std::isfinite(c) || c < kInvSqrt2 - kOverlapSnap || c > 1.0 + kOverlapSnap) {
    throw DomainError("overlap c must lie in [1/sqrt(2), 1], got " + std::to_string(c));
  }
  if (std::abs(c - kInvSqrt2) <= kOverlapSnap) return Overlap(kInvSqrt2, kQuarterPi);
  if (c >= 1.0) return Overlap(1.0, 0.0);
  return Overlap(c, std::acos(c));
}

Overlap Overlap::from_gamma(double gamma) {
  if (!std::isfinite(gamma) || gamma < -kGammaSlack || gamma > kQuarterPi + kGammaSlack) {
    throw DomainError("gamma must lie in [0, pi/4], got " + std::to_string(gamma));
  }
  if (std::abs(gamma - kQuarterPi) <= kGammaSlack) return Overlap(kInvSqrt2, kQuarterPi);
  if (gamma <= 0.0) return Overlap(1.0, 0.0);
  return Overlap(std::cos(gamma), gamma);
}

Overlap Overlap::from_gamma_t(double gamma_t) {
  if (!std::isfinite(gamma_t) || gamma_t < -kGammaSlack || gamma_t > kHalfPi + kGammaSlack) {
    throw DomainError("gamma_T must lie in [0, pi/2], got " + std::to_string(gamma_t));
  }
  return from_gamma(std::clamp(std::min(gamma_t, kHalfPi - gamma_t), 0.0, kQuarterPi));
}

std::string_view to_string(Regime r) noexcept {
  switch (r) {
    case Regime::TrivialC1: return "TrivialC1";
    case Regime::ClosedFormSquare: return "ClosedFormSquare";
    case Regime::DiagonalFirst: return "DiagonalFirst";
    case Regime::DiagonalInterior: return "DiagonalInterior";
    case Regime::DiagonalHalfGamma: return "DiagonalHalfGamma";
    case Regime::NumericGeneral: return "NumericGeneral";
  }
  return "Unknown";
}

BoundResult closed_form_square(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov) {
  if (alpha.value() > 0.5 || beta.value() > 0.5) {
    throw DomainError("closed_form_square requires (alpha, beta) in [0, 1/2]^2");
  }
  if (ov.commuting()) return trivial_result(alpha, beta, ov);
  const EntropicIndex lambda = std::max(alpha, beta);
  const double gamma = ov.gamma();
  const double value = renyi_entropy(ProbabilityPair::from_angle(gamma), lambda);
  std::vector<Angle> thetas;
  if (alpha < beta) {
    thetas = angles({0.0});
  } else if (alpha > beta) {
    thetas = angles({gamma});
  } else {
    thetas = angles({0.0, gamma});
  }
  return make_result(value, std::move(thetas), Regime::ClosedFormSquare, alpha, beta, ov);
}

double alpha_dagger() {
  static const double root = [] {
    const ProbabilityPair p = ProbabilityPair::from_angle(kPi / 8.0);
    const auto excess = [&](double a) { return 2.0 * renyi_entropy(p, EntropicIndex(a)) - kLog2; };
    return numerics::brent_root(excess, 1.0, 2.0, 1e-15);
  }();
  return root;
}

double alpha_star(const Overlap& ov, double xtol) {
  if (!(xtol > 0.0)) throw DomainError("alpha_star tolerance must be positive");
  if (ov.commuting()) throw DomainError("alpha_star is undefined for c = 1");
  if (ov.complementary()) return alpha_dagger();
  const double gamma = ov.gamma();
  const auto reached = [gamma](double a) { return minimize_half_interval(EntropicIndex(a), gamma).at_half_gamma; };
  // For c > 1/sqrt 2 the minimizer sits at theta = 0 up to alpha = 1/2, and the
  // alpha = 2 collision bound is always attained at gamma/2.
  return numerics::bisect_predicate(reached, 0.5, 2.0, xtol);
}

BoundResult diagonal_bound(EntropicIndex alpha, const Overlap& ov) {
  if (ov.commuting()) return trivial_result(alpha, alpha, ov);
  const double gamma = ov.gamma();
  const auto first = [&] {
    const double value = renyi_entropy(ProbabilityPair::from_angle(gamma), alpha);
    return make_result(value, angles({0.0, gamma}), Regime::DiagonalFirst, alpha, alpha, ov);
  };
  const auto half = [&] {
    const double value = 2.0 * renyi_entropy(ProbabilityPair::from_angle(0.5 * gamma), alpha);
    return make_result(value, angles({0.5 * gamma}), Regime::DiagonalHalfGamma, alpha, alpha, ov);
  };

  if (ov.complementary()) return alpha.value() <= alpha_dagger() ? first() : half();
  if (alpha.value() <= 0.5) return first();

  const HalfIntervalMinimum m = minimize_half_interval(alpha, gamma);
  if (m.at_half_gamma) return half();
  return make_result(m.value, angles({m.theta, gamma - m.theta}), Regime::DiagonalInterior, alpha, alpha, ov);
}

BoundResult tight_bound(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov) {
  if (ov.commuting()) return trivial_result(alpha, beta, ov);
  if (alpha.value() <= 0.5 && beta.value() <= 0.5) return closed_form_square(alpha, beta, ov);
  if (alpha == beta) return diagonal_bound(alpha, ov);

  const double gamma = ov.gamma();
  const auto f = [&](double t) { return objective_unchecked(alpha, beta, gamma, t); };
  const auto minima = numerics::global_minima(numerics::multistart_minima(f, 0.0, gamma, kSeeds, kThetaTol),
                                              kMinimizerValueTol, kMinimizerDedupTol);
  double value = minima.front().fx;
  std::vector<Angle> thetas;
  for (const auto& m : minima) {
    value = std::min(value, m.fx);
    thetas.emplace_back(m.x);
  }
  return make_result(value, std::move(thetas), Regime::NumericGeneral, alpha, beta, ov);
}

double suboptimal_bound(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov) {
  return diagonal_bound(std::max(alpha, beta), ov).value;
}

std::map<std::string, ReferenceBound> reference_bounds(EntropicIndex alpha, EntropicIndex beta, const Overlap& ov) {
  const double c = ov.c();
  const double s = std::sin(ov.gamma());
  const double a = alpha.value();
  const double b = beta.value();
  const double hi = std::max(a, b);
  // On or below the conjugacy curve 1/alpha + 1/beta = 2.
  const bool below_conjugacy = a <= 0.5 || b <= 0.5 || b <= a / (2.0 * a - 1.0);

  std::map<std::string, ReferenceBound> out;
  out["deutsch"] = {-2.0 * std::log((1.0 + c) / 2.0), true};
  out["maassen_uffink_shannon"] = {-2.0 * std::log(c), below_conjugacy};
  out["maassen_uffink_conjugate"] = {2.0 * std::log(2.0 * std::sqrt(2.0) / (1.0 + std::sqrt(2.0))),
                                     ov.complementary()};
  out["rastegin_half"] = {std::log1p(2.0 * c * s), hi <= 0.5};
  out["collision"] = {-2.0 * std::log((1.0 + c * c) / 2.0), hi <= 2.0};
  return out;
}

std::vector<SweepRow> bound_sweep(const SweepSpec& spec) {
  const auto& g = spec.grid;
  if (g.empty()) throw DomainError("sweep grid is empty");
  if (g.size() > 1) {
    const bool up = g[1] > g[0];
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (up ? !(g[i] > g[i - 1]) : !(g[i] < g[i - 1])) throw DomainError("sweep grid must be strictly monotone");
    }
  }
  // Validate every grid point before computing anything.
  std::vector<EntropicIndex> alphas;
  std::vector<EntropicIndex> betas;
  std::vector<Overlap> overlaps;
  for (double x : g) {
    const double a = spec.variable == SweepVariable::Alpha ? x : spec.alpha;
    double b = spec.variable == SweepVariable::Beta ? x : spec.beta;
    if (spec.diagonal && spec.variable == SweepVariable::Alpha) b = a;
    alphas.emplace_back(a);
    betas.emplace_back(b);
    overlaps.push_back(Overlap::from_c(spec.variable == SweepVariable::Overlap ? x : spec.c));
  }

  std::vector<SweepRow> rows(g.size());
  parallel_for(g.size(), spec.threads, [&](std::size_t i) {
    rows[i] = SweepRow{g[i], tight_bound(alphas[i], betas[i], overlaps[i])};
  });
  return rows;
}

}  // namespace renyi_qubit
