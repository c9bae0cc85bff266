#pragma once

#include <cstdint>
#include <vector>

#include "renyi_qubit/entropy_core.hpp"
#include "renyi_qubit/qubit_algebra.hpp"

namespace renyi_qubit {

/// Brute-force search settings.
///
/// The oracle scans the whole pure-state manifold in two charts, one around
/// each eigenbasis: chi = (cos t, e^{i p} sin t) with t in [0, pi/2] and p in
/// [0, 2 pi), read either as psi itself or as T psi. theta_grid and
/// phase_grid count grid points along t and p.
struct OracleConfig {
  int theta_grid = 2048;
  int phase_grid = 512;
  int refine_iters = 60;
  std::uint64_t seed = 0;  // reserved for randomized restarts; the scan itself is deterministic
  unsigned threads = 1;

  void validate() const;
};

struct OracleResult {
  double minimum = 0.0;
  /// Refined minimizers whose value lies within 1e-6 of the minimum.
  std::vector<QubitState> minimizers;
};

/// Minimum of H_alpha(|psi|^2) + H_beta(|T psi|^2) over all pure states, found
/// without the symmetry reductions, the phase result or any closed form.
OracleResult brute_force_min(EntropicIndex alpha, EntropicIndex beta, const Unitary2& t, const OracleConfig& cfg = {});

/// min over phi2 in [0, pi/2] of H_beta(|V(gamma) Phi(-phi2, phi2) s(theta)|^2)
/// minus its value at phi2 = 0. Nonnegative (up to rounding) when phi2 = 0 is
/// the optimal relative phase. Uses cfg.phase_grid + 1 points including both ends.
double verify_phase_optimality(EntropicIndex beta, Angle gamma, Angle theta, const OracleConfig& cfg = {});

/// Position (in [0, pi/2], on the grid of verify_phase_optimality) of the
/// lowest-entropy relative phase.
double best_phase(EntropicIndex beta, Angle gamma, Angle theta, const OracleConfig& cfg = {});

/// Fubini-Study distance arccos |<psi|chi>|, blind to global phase.
double state_distance(const QubitState& psi, const QubitState& chi);

}  // namespace renyi_qubit
