#include "renyi_qubit/entropy_core.hpp"

#include <algorithm>

namespace renyi_qubit {

namespace {

constexpr double kAngleSlack = 1e-12;

// w^lambda with the 0^lambda := 0 convention (also at lambda = 0).
double weight_power(double w, double lambda) {
  return w > 0.0 ? std::pow(w, lambda) : 0.0;
}

double big_d_raw(double lambda, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return weight_power(c * c, lambda) + weight_power(s * s, lambda);
}

// sum_k w_k^lambda - 1, written as sum_k w_k expm1((lambda - 1) log w_k) so that
// it stays accurate when lambda is close to 1 and the sum is close to 1.
double power_sum_minus_one(const ProbabilityPair& p, double lambda) {
  double acc = 0.0;
  for (double w : {p.first(), p.second()}) {
    if (w > 0.0) acc += w * std::expm1((lambda - 1.0) * std::log(w));
  }
  return acc;
}

// log sum_k w_k^lambda as lambda log pmax + log1p((pmin/pmax)^lambda). The
// expm1 form above loses everything once the power sum is far below 1, which
// happens for large lambda.
double log_power_sum_by_max(const ProbabilityPair& p, double lambda) {
  const double lo = p.min();
  const double hi = p.max();
  return lambda * std::log1p(-lo) + std::log1p(std::pow(lo / hi, lambda));
}

double clamp_entropy(double h) { return std::clamp(h, 0.0, kLog2); }

}  // namespace

ProbabilityPair::ProbabilityPair(double p) : p_(p), q_(1.0 - p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability must lie in [0, 1], got " + std::to_string(p));
  }
}

ProbabilityPair ProbabilityPair::from_angle(double theta) {
  if (!std::isfinite(theta)) throw DomainError("angle must be finite");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return ProbabilityPair(c * c, s * s);
}

ProbabilityPair ProbabilityPair::from_weights(double w1, double w2) {
  if (!(w1 >= 0.0 && w2 >= 0.0) || !std::isfinite(w1) || !std::isfinite(w2) || w1 + w2 <= 0.0) {
    throw DomainError("weights must be finite, nonnegative and not both zero");
  }
  const double total = w1 + w2;
  return ProbabilityPair(w1 / total, w2 / total);
}

double renyi_entropy(const ProbabilityPair& p, EntropicIndex lam) {
  const double lambda = lam.value();
  if (lam.is_support()) {
    const int support = (p.first() > 0.0 ? 1 : 0) + (p.second() > 0.0 ? 1 : 0);
    return support > 1 ? kLog2 : 0.0;
  }
  if (lam.is_shannon()) {
    double h = 0.0;
    for (double w : {p.first(), p.second()}) {
      if (w > 0.0) h -= w * std::log(w);
    }
    return clamp_entropy(h);
  }
  const double log_sum =
      lambda < 2.0 ? std::log1p(power_sum_minus_one(p, lambda)) : log_power_sum_by_max(p, lambda);
  return clamp_entropy(log_sum / (1.0 - lambda));
}

double min_entropy(const ProbabilityPair& p) { return clamp_entropy(-std::log(p.max())); }

double big_d(EntropicIndex lam, Angle theta) { return big_d_raw(lam.value(), theta.value); }

double big_d_prime(EntropicIndex lam, Angle theta) {
  const double lambda = lam.value();
  if (lam.is_support()) throw DomainError("big_d_prime requires lambda > 0");
  const double c = std::cos(theta.value);
  const double s = std::sin(theta.value);
  const double c2 = c * c;
  const double s2 = s * s;
  if (s2 == 0.0 || c2 == 0.0) {
    // One-sided limit of lambda sin(2 theta) w^(lambda - 1) as the weight w -> 0.
    double limit = 0.0;
    if (lambda < 0.5) {
      limit = std::numeric_limits<double>::infinity();
    } else if (lambda == 0.5) {
      limit = 1.0;
    }
    return s2 == 0.0 ? limit : -limit;
  }
  return lambda * std::sin(2.0 * theta.value) * (std::pow(s2, lambda - 1.0) - std::pow(c2, lambda - 1.0));
}

double curvature_k(EntropicIndex lam, Angle theta) {
  const double lambda = lam.value();
  if (lam.is_support() || lam.is_shannon()) {
    throw DomainError("curvature_k requires lambda > 0 and lambda != 1");
  }
  if (!(theta.value > 0.0 && theta.value < kHalfPi)) {
    throw DomainError("curvature_k requires theta in (0, pi/2)");
  }
  const double c = std::cos(theta.value);
  const double s = std::sin(theta.value);
  const double sin2 = std::sin(2.0 * theta.value);
  const double bracket = (2.0 * lambda - 1.0) * std::pow(sin2 * sin2 / 4.0, lambda - 1.0) -
                         std::pow(c * c, 2.0 * lambda - 1.0) - std::pow(s * s, 2.0 * lambda - 1.0);
  return 2.0 * lambda / (1.0 - lambda) * bracket;
}

double objective_unchecked(EntropicIndex alpha, EntropicIndex beta, double gamma, double theta) noexcept {
  return renyi_entropy(ProbabilityPair::from_angle(theta), alpha) +
         renyi_entropy(ProbabilityPair::from_angle(gamma - theta), beta);
}

double objective(EntropicIndex alpha, EntropicIndex beta, Angle gamma, Angle theta) {
  if (gamma.value < -kAngleSlack || gamma.value > kQuarterPi + kAngleSlack) {
    throw DomainError("objective requires gamma in [0, pi/4]");
  }
  if (theta.value < -kAngleSlack || theta.value > gamma.value + kAngleSlack) {
    throw DomainError("objective requires theta in [0, gamma]");
  }
  return objective_unchecked(alpha, beta, gamma.value, theta.value);
}

double delta_gap(EntropicIndex beta, Angle theta, Angle gamma) {
  if (beta.is_support() || beta.is_shannon()) {
    throw DomainError("delta_gap requires beta > 0 and beta != 1");
  }
  for (double a : {theta.value, gamma.value}) {
    if (a < -kAngleSlack || a > kQuarterPi + kAngleSlack) {
      throw DomainError("delta_gap requires (theta, gamma) in [0, pi/4]^2");
    }
  }
  const double b = beta.value();
  return (big_d_raw(b, gamma.value - theta.value) - big_d_raw(b, gamma.value + theta.value)) / (b - 1.0);
}

}  // namespace renyi_qubit
