#include "chromabound/bound.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chromabound {
namespace {

void require_delta_at_least(unsigned delta, unsigned min, const char *what) {
  if (delta < min)
    throw std::domain_error(std::string(what) + ": Delta must be >= " + std::to_string(min));
}

void require_unit(double a, const char *what) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::domain_error(std::string(what) + ": a must lie in [0,1], got " + std::to_string(a));
}

// Largest b used as the open upper end of [1, rho).
double upper_bracket(unsigned delta) { return rho_delta(delta) * (1.0 - 1e-9); }

void require_b_open(unsigned delta, double b, const char *what) {
  if (!(b >= 1.0 && b < rho_delta(delta)))
    throw std::domain_error(std::string(what) + ": b must lie in [1, rho_Delta), got " + std::to_string(b));
}

// Bisection on an increasing function with fn(lo) <= 0 < fn(hi); runs until
// the bracket stops shrinking in double precision.
template <class Fn>
double bisect_increasing(Fn &&fn, double lo, double hi) {
  for (int iter = 0; iter < 400; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi)
      break;
    if (fn(mid) > 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

double root_of_k(unsigned delta, ExtendedGirth g, double a) {
  auto excess = [&](double b) { return k_delta_g(delta, g, a, b) - a; };
  double hi;
  if (delta >= 3) {
    hi = upper_bracket(delta);
  } else {
    // rho_2 is infinite: grow the bracket until K exceeds a.
    hi = 2.0;
    while (excess(hi) <= 0.0) {
      hi *= 2.0;
      if (!std::isfinite(hi) || hi > 1e300)
        throw std::runtime_error("solve_b: could not bracket the root for Delta = 2");
    }
  }
  if (excess(hi) <= 0.0)
    throw std::runtime_error("solve_b: K does not exceed a below rho_Delta");
  return bisect_increasing(excess, 1.0, hi);
}

} // namespace

BoundQuery::BoundQuery(unsigned delta_, ExtendedGirth girth_) : delta(delta_), girth(girth_) {
  if (delta == 0)
    throw std::domain_error("Delta must be >= 1");
}

double rho_delta(unsigned delta) {
  require_delta_at_least(delta, 1, "rho_delta");
  if (delta <= 2)
    return kInfinity;
  const double d = delta;
  return std::exp(d * std::log1p(1.0 / (d - 2.0)));
}

double big_r_delta(unsigned delta) {
  require_delta_at_least(delta, 1, "big_r_delta");
  if (delta == 1)
    return kInfinity;
  if (delta == 2)
    return 1.0;
  const double d = delta;
  // (1/(D-1)) * ((D-2)/(D-1))^(D-2), with log1p to stay accurate for huge D.
  return std::exp(-std::log(d - 1.0) + (d - 2.0) * std::log1p(-1.0 / (d - 1.0)));
}

double x_delta(unsigned delta, double b) {
  require_delta_at_least(delta, 1, "x_delta");
  const double rho = rho_delta(delta);
  if (!(b >= 1.0 && b <= rho))
    throw std::domain_error("x_delta: b must lie in [1, rho_Delta], got " + std::to_string(b));
  if (delta == 1)
    return b - 1.0;
  if (std::isinf(b))
    return big_r_delta(delta);
  const double lb = std::log(b) / delta;
  // b^(1/D) (b^(1/D) - 1) / b
  return std::exp(lb) * std::expm1(lb) / b;
}

double f_d_delta(unsigned delta, Distance d, double b) {
  require_delta_at_least(delta, 2, "f_d_delta");
  require_b_open(delta, b, "f_d_delta");
  if (!d)
    return 0.0;
  if (*d == 0)
    throw std::domain_error("f_d_delta: d must be >= 1");
  const double dm1 = delta - 1.0;
  const double t = dm1 * -std::expm1(-std::log(b) / delta);
  if (t <= 0.0)
    return 0.0;
  if (t >= 1.0)
    throw std::domain_error("f_d_delta: (Delta-1)(1 - b^(-1/Delta)) >= 1");
  // t^d in log space so that large d underflows cleanly to 0.
  return std::exp(static_cast<double>(*d) * std::log(t)) / (dm1 * (1.0 - t));
}

double k_delta_g(unsigned delta, ExtendedGirth g, double a, double b) {
  require_delta_at_least(delta, 2, "k_delta_g");
  require_unit(a, "k_delta_g");
  require_b_open(delta, b, "k_delta_g");
  const double x = x_delta(delta, b);
  const double d = delta;
  const double vertex_term = std::expm1(d * std::log1p((1.0 - a) * x));
  if (g.is_infinite())
    return vertex_term;
  const double f = f_d_delta(delta, Distance(g.value() - 2), b);
  if (f == 0.0)
    return vertex_term;
  const double bx = b * x;
  const double pairs = d * (d - 1.0) / 2.0;
  return vertex_term + f * pairs * bx * std::exp((d - 1.0) * std::log1p(bx));
}

double a_delta(unsigned delta) {
  require_delta_at_least(delta, 2, "a_delta");
  const double r = big_r_delta(delta);
  const double d = delta;
  // Decreasing in y: positive at 0, equal to -1 at 1.
  auto h = [&](double y) { return std::expm1(d * std::log1p((1.0 - y) * r)) - y; };
  return bisect_increasing([&](double y) { return -h(y); }, 0.0, 1.0);
}

double solve_b(unsigned delta, ExtendedGirth g, double a) {
  require_delta_at_least(delta, 2, "solve_b");
  require_unit(a, "solve_b");
  if (a == 0.0)
    return 1.0;
  if (g.is_infinite() && a >= a_delta(delta))
    return rho_delta(delta);
  return root_of_k(delta, g, a);
}

double z_delta_g(unsigned delta, ExtendedGirth g, double a) {
  require_delta_at_least(delta, 1, "z_delta_g");
  require_unit(a, "z_delta_g");
  if (delta == 1)
    return a < 1.0 ? a : 0.0;
  if (a == 0.0 || a == 1.0)
    return 0.0;
  if (g.is_infinite()) {
    if (a < a_delta(delta))
      return std::expm1(std::log1p(a) / delta);
    return (1.0 - a) * big_r_delta(delta);
  }
  return (1.0 - a) * x_delta(delta, root_of_k(delta, g, a));
}

BoundResult c_delta_g(const BoundQuery &query, const MaximizeOptions &options) {
  const unsigned delta = query.delta;
  if (delta == 1)
    return {1.0, rho_delta(1), 1.0, 1.0, 1.0};
  if (query.girth.is_infinite()) {
    // z rises as (1+a)^(1/D) - 1 up to a_D and then falls as (1-a) R_D, so the
    // maximum sits at a_D and the root is at its supremum rho_D.
    const double a = a_delta(delta);
    const double z = (1.0 - a) * big_r_delta(delta);
    return {a, rho_delta(delta), z, 1.0 / z, 1.0 / z / delta};
  }
  const ScalarMaximum best =
      grid_golden_maximize([&](double a) { return z_delta_g(delta, query.girth, a); }, 0.0, 1.0, options);
  BoundResult result{};
  result.a_star = best.argument;
  result.b_star = solve_b(delta, query.girth, best.argument);
  result.z_max = best.value;
  result.C = 1.0 / best.value;
  result.C_over_delta = result.C / delta;
  return result;
}

double k_inf_g(unsigned g, double a, double b) {
  if (g < 3)
    throw std::domain_error("k_inf_g: g must be >= 3");
  require_unit(a, "k_inf_g");
  if (!(b >= 1.0 && b < std::numbers::e))
    throw std::domain_error("k_inf_g: b must lie in [1, e), got " + std::to_string(b));
  const double lb = std::log(b);
  const double vertex_term = std::expm1((1.0 - a) * lb / b);
  if (lb <= 0.0)
    return vertex_term;
  if (lb >= 1.0)
    return kInfinity;
  const double path_term = b * std::exp((g - 1.0) * std::log(lb)) / (2.0 * (1.0 - lb));
  return vertex_term + path_term;
}

double solve_b_inf(unsigned g, double a) {
  require_unit(a, "solve_b_inf");
  if (a == 0.0)
    return 1.0;
  double hi = std::numbers::e;
  while (std::log(hi) >= 1.0)
    hi = std::nextafter(hi, 0.0);
  hi *= 1.0 - 1e-15;
  auto excess = [&](double b) { return k_inf_g(g, a, b) - a; };
  if (excess(hi) <= 0.0)
    throw std::runtime_error("solve_b_inf: K does not exceed a below e");
  return bisect_increasing(excess, 1.0, hi);
}

JprResult jpr_optimum(unsigned g, const MaximizeOptions &options) {
  if (g < 3)
    throw std::domain_error("jpr_optimum: g must be >= 3");
  auto profile = [&](double a) {
    if (a <= 0.0 || a >= 1.0)
      return 0.0;
    const double b = solve_b_inf(g, a);
    return (1.0 - a) * std::log(b) / b;
  };
  const ScalarMaximum best = grid_golden_maximize(profile, 0.0, 1.0, options);
  return {best.argument, solve_b_inf(g, best.argument), 1.0 / best.value};
}

} // namespace chromabound
