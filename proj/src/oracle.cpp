#include "renyi_qubit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "renyi_qubit/numerics.hpp"
#include "renyi_qubit/parallel.hpp"

namespace renyi_qubit {

namespace {

constexpr double kTwoPi = 2.0 * kPi;
constexpr int kCandidates = 16;
constexpr double kNearMinimum = 1e-6;
constexpr double kSameState = 1e-4;

enum class Chart { AroundA, AroundB };

// cos t with the pole t = pi/2 (as rounded to double) mapped to exactly 0, so
// the eigenstate there gets a deterministic distribution.
double cos_at(double t) { return t == kHalfPi ? 0.0 : std::cos(t); }

// Entropy sum over one chart. In the A chart chi is psi; in the B chart chi is
// T psi, so the deterministic distributions of both observables sit at t = 0
// and t = pi/2 of some chart and are evaluated exactly there.
class ChartObjective {
 public:
  ChartObjective(EntropicIndex alpha, EntropicIndex beta, const Unitary2& t, Chart chart)
      : alpha_(alpha), beta_(beta), chart_(chart) {
    const Matrix2c& m = t.matrix();
    map_ = chart == Chart::AroundA ? m : Matrix2c(m.adjoint());
  }

  double operator()(double t, double p) const {
    const double ct = cos_at(t);
    const double st = std::sin(t);
    const Complex x2 = std::polar(st, p);
    const Complex y1 = map_(0, 0) * ct + map_(0, 1) * x2;
    const Complex y2 = map_(1, 0) * ct + map_(1, 1) * x2;
    const ProbabilityPair own = t == kHalfPi ? ProbabilityPair(0.0) : ProbabilityPair::from_angle(t);
    const ProbabilityPair other = ProbabilityPair::from_weights(std::norm(y1), std::norm(y2));
    return chart_ == Chart::AroundA ? renyi_entropy(own, alpha_) + renyi_entropy(other, beta_)
                                    : renyi_entropy(other, alpha_) + renyi_entropy(own, beta_);
  }

  QubitState state(double t, double p) const {
    const Vector2c chi(Complex(cos_at(t), 0.0), std::polar(std::sin(t), p));
    if (chart_ == Chart::AroundA) return QubitState::normalized(chi(0), chi(1));
    const Vector2c psi = map_ * chi;
    return QubitState::normalized(psi(0), psi(1));
  }

 private:
  EntropicIndex alpha_;
  EntropicIndex beta_;
  Chart chart_;
  Matrix2c map_;
};

struct Point {
  double t;
  double p;
  double value;
};

Point refine(const ChartObjective& f, Point start, double step_t, double step_p, int rounds) {
  Point cur = start;
  double wt = step_t;
  double wp = step_p;
  for (int r = 0; r < rounds && (wt > 1e-14 || wp > 1e-14); ++r) {
    const double lo = std::max(0.0, cur.t - wt);
    const double hi = std::min(kHalfPi, cur.t + wt);
    const auto mt = numerics::golden_section([&](double t) { return f(t, cur.p); }, lo, hi, wt * 1e-4);
    const double moved_t = std::abs(mt.x - cur.t);
    if (mt.fx < cur.value) cur = {mt.x, cur.p, mt.fx};

    const auto mp = numerics::golden_section([&](double p) { return f(cur.t, p); }, cur.p - wp, cur.p + wp, wp * 1e-4);
    const double moved_p = std::abs(mp.x - cur.p);
    if (mp.fx < cur.value) cur = {cur.t, mp.x, mp.fx};

    wt = std::min(kQuarterPi, std::max(4.0 * moved_t, 0.5 * wt));
    wp = std::min(kPi, std::max(4.0 * moved_p, 0.5 * wp));
  }
  return cur;
}

struct Candidate {
  Point point;
  Chart chart;
};

}  // namespace

void OracleConfig::validate() const {
  if (theta_grid < 64 || phase_grid < 64) throw DomainError("oracle grids need at least 64 points");
  if (refine_iters < 1) throw DomainError("oracle refine_iters must be positive");
}

OracleResult brute_force_min(EntropicIndex alpha, EntropicIndex beta, const Unitary2& t, const OracleConfig& cfg) {
  cfg.validate();
  const int nt = cfg.theta_grid;
  const int np = cfg.phase_grid;
  const double step_t = kHalfPi / (nt - 1);
  const double step_p = kTwoPi / np;

  std::vector<Candidate> candidates;
  for (Chart chart : {Chart::AroundA, Chart::AroundB}) {
    const ChartObjective f(alpha, beta, t, chart);
    std::vector<double> grid(static_cast<std::size_t>(nt) * np);
    parallel_for(static_cast<std::size_t>(nt), cfg.threads, [&](std::size_t i) {
      const double ti = i + 1 == static_cast<std::size_t>(nt) ? kHalfPi : step_t * static_cast<double>(i);
      for (int j = 0; j < np; ++j) grid[i * np + j] = f(ti, step_p * j);
    });
    const auto at = [&](int i, int j) { return grid[static_cast<std::size_t>(i) * np + ((j % np) + np) % np]; };

    // Both poles are a single state each (the phase is global there).
    candidates.push_back({{0.0, 0.0, at(0, 0)}, chart});
    candidates.push_back({{kHalfPi, 0.0, at(nt - 1, 0)}, chart});

    std::vector<Candidate> local;
    for (int i = 1; i + 1 < nt; ++i) {
      for (int j = 0; j < np; ++j) {
        const double v = at(i, j);
        bool is_min = true;
        for (int di = -1; di <= 1 && is_min; ++di) {
          for (int dj = -1; dj <= 1; ++dj) {
            if ((di != 0 || dj != 0) && at(i + di, j + dj) < v) {
              is_min = false;
              break;
            }
          }
        }
        if (is_min) {
          const double ti = step_t * i;
          local.push_back({{ti, step_p * j, v}, chart});
        }
      }
    }
    std::stable_sort(local.begin(), local.end(),
                     [](const Candidate& l, const Candidate& r) { return l.point.value < r.point.value; });
    if (local.size() > static_cast<std::size_t>(kCandidates)) local.resize(kCandidates);
    for (auto& c : local) {
      c.point = refine(f, c.point, step_t, step_p, cfg.refine_iters);
      candidates.push_back(c);
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (const auto& c : candidates) best = std::min(best, c.point.value);

  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& l, const Candidate& r) { return l.point.value < r.point.value; });
  OracleResult result;
  result.minimum = best;
  for (const auto& c : candidates) {
    if (c.point.value > best + kNearMinimum) break;
    const QubitState psi = ChartObjective(alpha, beta, t, c.chart).state(c.point.t, c.point.p);
    const bool seen = std::any_of(result.minimizers.begin(), result.minimizers.end(),
                                  [&](const QubitState& q) { return state_distance(q, psi) < kSameState; });
    if (!seen) result.minimizers.push_back(psi);
  }
  return result;
}

namespace {

std::vector<double> phase_scan(EntropicIndex beta, Angle gamma, Angle theta, const OracleConfig& cfg) {
  if (!(gamma.value > 0.0 && gamma.value <= kQuarterPi + 1e-12)) {
    throw DomainError("verify_phase_optimality requires gamma in (0, pi/4]");
  }
  if (theta.value < 0.0 || theta.value > gamma.value + 1e-12) {
    throw DomainError("verify_phase_optimality requires theta in [0, gamma]");
  }
  cfg.validate();
  const double cg = std::cos(gamma.value);
  const double sg = std::sin(gamma.value);
  const double ct = std::cos(theta.value);
  const double st = std::sin(theta.value);
  std::vector<double> values(static_cast<std::size_t>(cfg.phase_grid) + 1);
  for (int j = 0; j <= cfg.phase_grid; ++j) {
    const double phi = j == cfg.phase_grid ? kHalfPi : kHalfPi * j / cfg.phase_grid;
    const Complex x1 = std::polar(ct, -phi);
    const Complex x2 = std::polar(st, phi);
    const Complex b1 = cg * x1 + sg * x2;
    const Complex b2 = -sg * x1 + cg * x2;
    values[j] = renyi_entropy(ProbabilityPair::from_weights(std::norm(b1), std::norm(b2)), beta);
  }
  return values;
}

}  // namespace

double verify_phase_optimality(EntropicIndex beta, Angle gamma, Angle theta, const OracleConfig& cfg) {
  const auto values = phase_scan(beta, gamma, theta, cfg);
  return *std::min_element(values.begin(), values.end()) - values.front();
}

double best_phase(EntropicIndex beta, Angle gamma, Angle theta, const OracleConfig& cfg) {
  const auto values = phase_scan(beta, gamma, theta, cfg);
  const double lowest = *std::min_element(values.begin(), values.end());
  const double ties = 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(lowest));
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] <= lowest + ties) return j + 1 == values.size() ? kHalfPi : kHalfPi * j / cfg.phase_grid;
  }
  return 0.0;
}

double state_distance(const QubitState& psi, const QubitState& chi) {
  const double overlap = std::abs(std::conj(psi.a1()) * chi.a1() + std::conj(psi.a2()) * chi.a2());
  const double cross = std::abs(psi.a1() * chi.a2() - psi.a2() * chi.a1());
  return std::atan2(cross, overlap);
}

}  // namespace renyi_qubit
