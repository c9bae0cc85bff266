#pragma once

// One-dimensional search primitives shared by the bound engine and the oracle.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace renyi_qubit::numerics {

struct Minimum {
  double x;
  double fx;
};

/// Golden-section search for a minimum of f on [lo, hi]. The endpoints are
/// evaluated too, so a minimum sitting on the boundary is returned exactly.
template <class F>
Minimum golden_section(F&& f, double lo, double hi, double xtol = 1e-12, int max_iter = 200) {
  constexpr double kInvPhi = 0.61803398874989484820;
  Minimum best{lo, f(lo)};
  if (const double fh = f(hi); fh < best.fx) best = {hi, fh};
  if (!(hi > lo)) return best;

  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < max_iter && (b - a) > xtol; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  if (f1 < best.fx) best = {x1, f1};
  if (f2 < best.fx) best = {x2, f2};
  return best;
}

/// Brent's method for a root of f bracketed by [a, b].
template <class F>
double brent_root(F&& f, double a, double b, double xtol = 1e-14, int max_iter = 200) {
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) throw std::invalid_argument("brent_root: root not bracketed");

  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      // Inverse quadratic interpolation, or secant when only two points differ.
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

/// Smallest x in [lo, hi] where a monotone predicate switches from false to
/// true, located to within xtol. pred(hi) must hold and pred(lo) must not.
template <class P>
double bisect_predicate(P&& pred, double lo, double hi, double xtol = 1e-10) {
  if (pred(lo) || !pred(hi)) throw std::invalid_argument("bisect_predicate: transition not bracketed");
  while (hi - lo > xtol) {
    const double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Samples f at `seeds` evenly spaced points of [lo, hi] (endpoints included)
/// and refines every sampled local minimum by golden-section search over its
/// two neighbouring cells. Returns the refined minima in ascending x.
template <class F>
std::vector<Minimum> multistart_minima(F&& f, double lo, double hi, int seeds = 129, double xtol = 1e-12) {
  if (!(hi > lo)) return {Minimum{lo, f(lo)}};
  const int n = std::max(seeds, 3);
  const double step = (hi - lo) / (n - 1);
  std::vector<double> xs(n);
  std::vector<double> fs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = i + 1 == n ? hi : lo + step * i;
    fs[i] = f(xs[i]);
  }
  std::vector<Minimum> out;
  for (int i = 0; i < n; ++i) {
    const bool left_ok = i == 0 || fs[i] <= fs[i - 1];
    const bool right_ok = i + 1 == n || fs[i] <= fs[i + 1];
    if (!(left_ok && right_ok)) continue;
    const double a = xs[std::max(i - 1, 0)];
    const double b = xs[std::min(i + 1, n - 1)];
    Minimum m = golden_section(f, a, b, xtol);
    if (fs[i] < m.fx) m = {xs[i], fs[i]};
    out.push_back(m);
  }
  return out;
}

/// Keeps the minima within `value_tol` of the lowest one and merges entries
/// closer than `x_tol`, keeping the lower of each merged pair.
inline std::vector<Minimum> global_minima(std::vector<Minimum> minima, double value_tol = 1e-9,
                                          double x_tol = 1e-8) {
  if (minima.empty()) return minima;
  double best = minima.front().fx;
  for (const auto& m : minima) best = std::min(best, m.fx);
  std::vector<Minimum> kept;
  for (const auto& m : minima) {
    if (m.fx <= best + value_tol) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), [](const Minimum& l, const Minimum& r) { return l.x < r.x; });
  std::vector<Minimum> out;
  for (const auto& m : kept) {
    if (!out.empty() && m.x - out.back().x <= x_tol) {
      if (m.fx < out.back().fx) out.back() = m;
    } else {
      out.push_back(m);
    }
  }
  return out;
}

}  // namespace renyi_qubit::numerics
