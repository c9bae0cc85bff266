#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "renyi_qubit/bound_engine.hpp"
#include "renyi_qubit/oracle.hpp"
#include "renyi_qubit/qubit_algebra.hpp"

namespace renyi_qubit {

struct VerifyConfig {
  int samples = 200;
  std::uint64_t seed = 42;
  double max_index = 5.0;
  int states_per_triple = 500;
  OracleConfig oracle;

  double oracle_tol = 1e-6;
  double bound_tol = 1e-9;
  double landau_pollak_tol = 1e-9;
};

struct TripleReport {
  double alpha = 0.0;
  double beta = 0.0;
  double c = 0.0;
  double gamma_t = 0.0;
  double bound = 0.0;
  Regime regime = Regime::NumericGeneral;
  double oracle_min = 0.0;
  double oracle_gap = 0.0;             // |oracle - bound|
  double worst_universality = 0.0;     // min over sampled states of (sum - bound)
  double worst_attainment = 0.0;       // max over family of |sum - bound|
  double worst_landau_pollak = 0.0;    // max over family of |residual|
  int family_size = 0;
  bool oracle_ok = false;
  bool universality_ok = false;
  bool attainment_ok = false;
  bool landau_pollak_ok = false;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<TripleReport> triples;
  bool oracle_ok = true;
  bool universality_ok = true;
  bool attainment_ok = true;
  bool landau_pollak_ok = true;

  bool passed() const noexcept { return oracle_ok && universality_ok && attainment_ok && landau_pollak_ok; }
};

using FamilyBuilder = std::function<MinimizerFamily(const Unitary2&, const BoundResult&)>;

/// Draws `samples` seeded triples (alpha, beta uniform in [0, max_index], T
/// Haar) and checks each one against the oracle, against random states, and
/// through its minimizer family. The family builder is injectable so that a
/// deliberately broken construction can be shown to fail.
VerifyReport run_verification(const VerifyConfig& cfg, const FamilyBuilder& build_family = minimizer_states);

}  // namespace renyi_qubit
