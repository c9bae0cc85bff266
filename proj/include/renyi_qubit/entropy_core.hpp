#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace renyi_qubit {

/// Thrown whenever an argument lies outside the domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Order of a Rényi entropy. Nonnegative and finite; the min-entropy limit is
/// available through min_entropy() rather than as an index value.
class EntropicIndex {
 public:
  explicit EntropicIndex(double lambda) : lambda_(lambda) {
    if (!std::isfinite(lambda) || lambda < 0.0) {
      throw DomainError("entropic index must be finite and >= 0, got " + std::to_string(lambda));
    }
  }

  double value() const noexcept { return lambda_; }
  bool is_shannon() const noexcept { return lambda_ == 1.0; }
  bool is_support() const noexcept { return lambda_ == 0.0; }

  friend bool operator==(EntropicIndex a, EntropicIndex b) noexcept { return a.lambda_ == b.lambda_; }
  friend auto operator<=>(EntropicIndex a, EntropicIndex b) noexcept { return a.lambda_ <=> b.lambda_; }

 private:
  double lambda_;
};

/// Angle in radians. Only finiteness is enforced here; reduced domains such as
/// [0, pi/4] or [0, gamma] are checked by the operations that need them.
struct Angle {
  double value = 0.0;

  Angle() = default;
  explicit Angle(double radians) : value(radians) {
    if (!std::isfinite(radians)) throw DomainError("angle must be finite");
  }
};

/// Two-outcome distribution (p, 1 - p).
///
/// Both weights are stored. Building the pair from an angle or from amplitudes
/// keeps the small weight at full relative precision, which matters for small
/// entropic indices where H(p) ~ p^lambda near a deterministic distribution.
class ProbabilityPair {
 public:
  explicit ProbabilityPair(double p);

  /// (cos^2 theta, sin^2 theta).
  static ProbabilityPair from_angle(double theta);
  /// (w1, w2) / (w1 + w2) for nonnegative weights, e.g. squared amplitude moduli.
  static ProbabilityPair from_weights(double w1, double w2);

  double first() const noexcept { return p_; }
  double second() const noexcept { return q_; }
  double max() const noexcept { return p_ >= q_ ? p_ : q_; }
  double min() const noexcept { return p_ >= q_ ? q_ : p_; }

 private:
  ProbabilityPair(double p, double q) : p_(p), q_(q) {}
  double p_;
  double q_;
};

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kQuarterPi = kPi / 4.0;
inline constexpr double kHalfPi = kPi / 2.0;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kLog2 = 0.69314718055994530942;

/// Rényi entropy in nats. lambda = 1 is the Shannon limit (0 log 0 := 0) and
/// lambda = 0 is log of the support size. The result always lies in [0, log 2].
double renyi_entropy(const ProbabilityPair& p, EntropicIndex lam);

/// -log max(p, 1 - p).
double min_entropy(const ProbabilityPair& p);

/// (cos^2 theta)^lambda + (sin^2 theta)^lambda.
///
/// Zero weights contribute nothing, including at lambda = 0, so big_d(0, theta)
/// counts the nonzero entries of (cos^2 theta, sin^2 theta).
double big_d(EntropicIndex lam, Angle theta);

/// d/dtheta of big_d: lambda sin(2 theta) [(sin^2)^(lambda-1) - (cos^2)^(lambda-1)].
///
/// Where a weight vanishes the one-sided limit is returned: 0 for lambda > 1/2,
/// +-1 for lambda = 1/2 and +-infinity for lambda < 1/2 (positive where sin
/// theta = 0, negative where cos theta = 0). Throws for lambda = 0.
double big_d_prime(EntropicIndex lam, Angle theta);

/// (D'' D - D'^2) / (1 - lambda) for theta in (0, pi/2), lambda > 0, lambda != 1.
double curvature_k(EntropicIndex lam, Angle theta);

/// Entropy sum H_alpha(cos^2 theta) + H_beta(cos^2(gamma - theta)) for
/// gamma in [0, pi/4] and theta in [0, gamma].
double objective(EntropicIndex alpha, EntropicIndex beta, Angle gamma, Angle theta);

/// Same sum without the theta range check; theta may lie anywhere, e.g. in
/// (gamma, pi/4] when probing that the minimum never sits there.
double objective_unchecked(EntropicIndex alpha, EntropicIndex beta, double gamma, double theta) noexcept;

/// [D_beta(gamma - theta) - D_beta(gamma + theta)] / (beta - 1) on [0, pi/4]^2.
double delta_gap(EntropicIndex beta, Angle theta, Angle gamma);

}  // namespace renyi_qubit
