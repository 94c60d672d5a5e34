#pragma once

// Scalar functions behind the certified zero-free radius C(Delta, g):
// x_Delta(b), f^d_Delta(b), K^g_Delta(a,b), the root b^g_Delta(a), the
// profile z^g_Delta(a) and its maximum, plus the large-Delta comparator K_g.

#include "chromabound/graph.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

namespace chromabound {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Validated (Delta, g) pair: Delta >= 1, g >= 3 or infinite.
struct BoundQuery {
  unsigned delta;
  ExtendedGirth girth;

  BoundQuery(unsigned delta, ExtendedGirth girth);
};

struct BoundResult {
  double a_star;
  /// b^g_Delta(a_star); rho_Delta (possibly +inf) when the root sits at the
  /// supremum of its interval.
  double b_star;
  double z_max;
  double C;
  double C_over_delta;
};

/// Grid-then-golden-section settings for the maximizations over a in [0,1].
struct MaximizeOptions {
  std::size_t grid = 2049;
  double tolerance = 1e-12;
};

/// ((Delta-1)/(Delta-2))^Delta for Delta >= 3, +inf for Delta in {1,2}.
double rho_delta(unsigned delta);
/// (Delta-2)^(Delta-2) / (Delta-1)^(Delta-1) for Delta >= 3; 1 for Delta = 2;
/// +inf for Delta = 1.
double big_r_delta(unsigned delta);

/// (b^(2/Delta) - b^(1/Delta)) / b on [1, rho_Delta]; increasing from 0 to
/// R_Delta. The closed endpoint b = rho_Delta is accepted and yields R_Delta.
double x_delta(unsigned delta, double b);

/// f^d_Delta(b) for Delta >= 2 and b in [1, rho_Delta); d = nullopt means
/// d = infinity and gives 0.
double f_d_delta(unsigned delta, Distance d, double b);

/// K^g_Delta(a,b) for Delta >= 2. For infinite g the path term vanishes.
double k_delta_g(unsigned delta, ExtendedGirth g, double a, double b);

/// b^g_Delta(a). Finite g: the unique root of K^g_Delta(a,.) = a in
/// (1, rho_Delta), by bisection (exactly 1 at a = 0). Infinite g: the same
/// root when a < a_Delta, otherwise the supremum rho_Delta.
double solve_b(unsigned delta, ExtendedGirth g, double a);

/// Threshold a_Delta: the root in (0,1) of (1 + (1-y) R_Delta)^Delta - 1 = y.
double a_delta(unsigned delta);

/// z^g_Delta(a) with the piecewise extensions for Delta = 1 and g = inf.
double z_delta_g(unsigned delta, ExtendedGirth g, double a);

/// Maximizes z^g_Delta over [0,1] and returns C = 1 / max.
/// For Delta = 1 the supremum 1 is approached but not attained (z(1) = 0);
/// the result reports a_star = 1, z_max = 1, C = 1. For infinite g the
/// maximizer is a_Delta exactly, with b_star = rho_Delta.
BoundResult c_delta_g(const BoundQuery &query, const MaximizeOptions &options = {});
inline BoundResult c_delta_g(unsigned delta, ExtendedGirth g, const MaximizeOptions &options = {}) {
  return c_delta_g(BoundQuery(delta, g), options);
}

/// exp((1-a) ln b / b) - 1 + b (ln b)^(g-1) / (2 (1 - ln b)) on b in [1, e).
double k_inf_g(unsigned g, double a, double b);

/// Root of k_inf_g(g, a, .) = a in [1, e).
double solve_b_inf(unsigned g, double a);

struct JprResult {
  double a_star;
  double b_star;
  double k_g;
};

/// K_g = [max_a (1-a) ln b / b]^(-1) with b = solve_b_inf(g, a).
JprResult jpr_optimum(unsigned g, const MaximizeOptions &options = {});
inline double k_g_jpr(unsigned g, const MaximizeOptions &options = {}) {
  return jpr_optimum(g, options).k_g;
}

struct ScalarMaximum {
  double argument;
  double value;
};

/// Maximizes fn on [lo, hi]: evaluates a uniform grid of `options.grid`
/// points, then refines the best grid cell pair by golden-section search.
/// Unimodality is not assumed globally, only inside the bracketing cells.
template <class Fn>
ScalarMaximum grid_golden_maximize(Fn &&fn, double lo, double hi, const MaximizeOptions &options) {
  const std::size_t n = options.grid < 3 ? 3 : options.grid;
  const double step = (hi - lo) / static_cast<double>(n - 1);
  std::size_t best = 0;
  double best_value = -kInfinity;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = i + 1 == n ? hi : lo + step * static_cast<double>(i);
    const double v = fn(a);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  double left = best == 0 ? lo : lo + step * static_cast<double>(best - 1);
  double right = best + 1 >= n ? hi : lo + step * static_cast<double>(best + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = right - inv_phi * (right - left);
  double d = left + inv_phi * (right - left);
  double fc = fn(c);
  double fd = fn(d);
  for (int iter = 0; iter < 200 && right - left > options.tolerance; ++iter) {
    if (fc >= fd) {
      right = d;
      d = c;
      fd = fc;
      c = right - inv_phi * (right - left);
      fc = fn(c);
    } else {
      left = c;
      c = d;
      fc = fd;
      d = left + inv_phi * (right - left);
      fd = fn(d);
    }
  }
  const double mid = 0.5 * (left + right);
  const double fmid = fn(mid);
  const double grid_arg = best + 1 == n ? hi : lo + step * static_cast<double>(best);
  if (fmid >= best_value)
    return {mid, fmid};
  return {grid_arg, best_value};
}

} // namespace chromabound
