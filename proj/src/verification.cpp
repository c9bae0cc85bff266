#include "renyi_qubit/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace renyi_qubit {

VerifyReport run_verification(const VerifyConfig& cfg, const FamilyBuilder& build_family) {
  if (cfg.samples < 1) throw DomainError("verification needs at least one sample");
  cfg.oracle.validate();

  VerifyReport report;
  report.config = cfg;
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> index(0.0, cfg.max_index);

  for (int k = 0; k < cfg.samples; ++k) {
    const EntropicIndex alpha(index(rng));
    const EntropicIndex beta(index(rng));
    const Unitary2 t = random_unitary(rng);
    const Overlap ov = overlap_of(t);
    const BoundResult bound = tight_bound(alpha, beta, ov);

    TripleReport tr;
    tr.alpha = alpha.value();
    tr.beta = beta.value();
    tr.c = ov.c();
    tr.gamma_t = factorize(t).gamma_t;
    tr.bound = bound.value;
    tr.regime = bound.regime;

    const OracleResult oracle = brute_force_min(alpha, beta, t, cfg.oracle);
    tr.oracle_min = oracle.minimum;
    tr.oracle_gap = std::abs(oracle.minimum - bound.value);
    tr.oracle_ok = tr.oracle_gap < cfg.oracle_tol;

    tr.worst_universality = std::numeric_limits<double>::infinity();
    for (int s = 0; s < cfg.states_per_triple; ++s) {
      const QubitState psi = random_state(rng);
      tr.worst_universality = std::min(tr.worst_universality, entropy_sum_of_state(psi, t, alpha, beta) - bound.value);
    }
    tr.universality_ok = tr.worst_universality >= -cfg.bound_tol;

    const MinimizerFamily family = build_family(t, bound);
    tr.family_size = static_cast<int>(family.states.size());
    for (const auto& m : family.states) {
      tr.worst_attainment =
          std::max(tr.worst_attainment, std::abs(entropy_sum_of_state(m.psi, t, alpha, beta) - bound.value));
      tr.worst_landau_pollak = std::max(tr.worst_landau_pollak, std::abs(landau_pollak_residual(m.psi, t)));
    }
    tr.attainment_ok = tr.family_size > 0 && tr.worst_attainment <= cfg.bound_tol;
    tr.landau_pollak_ok = tr.family_size > 0 && tr.worst_landau_pollak <= cfg.landau_pollak_tol;

    report.oracle_ok = report.oracle_ok && tr.oracle_ok;
    report.universality_ok = report.universality_ok && tr.universality_ok;
    report.attainment_ok = report.attainment_ok && tr.attainment_ok;
    report.landau_pollak_ok = report.landau_pollak_ok && tr.landau_pollak_ok;
    report.triples.push_back(tr);
  }
  return report;
}

}  // namespace renyi_qubit
