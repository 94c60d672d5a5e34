#include "chromabound/roots.hpp"

#include "chromabound/bcf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace chromabound {
namespace {

using Complex = std::complex<double>;

struct Evaluation {
  Complex value;
  Complex derivative;
};

Evaluation horner(const std::vector<double> &coeffs, Complex z) {
  Complex p = 0.0;
  Complex dp = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

double residual(const std::vector<double> &coeffs, Complex z) {
  const double lead = std::abs(coeffs.back());
  const double deg = static_cast<double>(coeffs.size() - 1);
  return std::abs(horner(coeffs, z).value) / (1.0 + lead * std::pow(std::abs(z), deg));
}

// Upper bound on root moduli (Fujiwara).
double root_radius(const std::vector<double> &coeffs) {
  const std::size_t n = coeffs.size() - 1;
  const double lead = coeffs.back();
  double bound = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double c = std::abs(coeffs[n - k] / lead);
    if (k == n)
      c /= 2.0;
    bound = std::max(bound, std::pow(c, 1.0 / static_cast<double>(k)));
  }
  return 2.0 * bound;
}

} // namespace

RootSet find_roots(const IntPolynomial &p, const RootOptions &options) {
  if (p.degree() < 1)
    throw std::invalid_argument("find_roots needs a polynomial of degree >= 1");
  RootSet out;
  const std::size_t zeros = p.zero_root_multiplicity();
  for (std::size_t i = 0; i < zeros; ++i) {
    out.roots.emplace_back(0.0, 0.0);
    out.residuals.push_back(0.0);
  }
  // Remaining factor, scaled so the largest coefficient has magnitude 1.
  const auto &big = p.coefficients();
  BigInt largest = 0;
  for (std::size_t i = zeros; i < big.size(); ++i)
    largest = std::max(largest, big[i] < 0 ? BigInt(-big[i]) : big[i]);
  std::vector<double> coeffs;
  for (std::size_t i = zeros; i < big.size(); ++i)
    coeffs.push_back(Rational(big[i], largest).convert_to<double>());
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) {
    out.converged = true;
    return out;
  }

  std::mt19937_64 rng(options.seed);
  const double rotation = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
  const double radius = root_radius(coeffs);
  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k)
    z[k] = std::polar(radius, rotation + 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));

  bool converged = false;
  int sweep = 0;
  for (; sweep < options.max_sweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      const Evaluation ev = horner(coeffs, z[k]);
      if (ev.value == 0.0)
        continue;
      const Complex newton = ev.value / ev.derivative;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k)
          repulsion += 1.0 / (z[k] - z[j]);
      const Complex step = newton / (1.0 - newton * repulsion);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag()))
        continue;
      z[k] -= step;
      if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[k])))
        converged = false;
    }
  }
  for (Complex &root : z) {
    for (int i = 0; i < options.polish_steps; ++i) {
      const Evaluation ev = horner(coeffs, root);
      if (ev.derivative == 0.0)
        break;
      const Complex next = root - ev.value / ev.derivative;
      if (residual(coeffs, next) <= residual(coeffs, root))
        root = next;
      else
        break;
    }
  }
  out.sweeps = sweep;
  bool residuals_ok = true;
  for (const Complex &root : z) {
    out.roots.push_back(root);
    out.residuals.push_back(residual(coeffs, root));
    residuals_ok = residuals_ok && out.residuals.back() < kRootResidualTolerance;
  }
  // Aberth stalls on clustered (repeated) roots without harming the residual,
  // so convergence is judged on residuals.
  out.converged = residuals_ok;
  return out;
}

ZeroFreeReport verify_zero_free(const Graph &g, const std::string &graph_id, const Limits &limits,
                                const MaximizeOptions &maximize, const RootOptions &options) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("verify_zero_free needs a graph with at least one edge");
  ZeroFreeReport report;
  report.graph_id = graph_id;
  report.delta = max_degree(g);
  report.girth = girth(g);
  report.chromatic = chromatic_dc(g, limits);
  report.C = c_delta_g(static_cast<unsigned>(report.delta), report.girth, maximize).C;
  report.roots = find_roots(report.chromatic, options);
  for (const auto &r : report.roots.roots)
    report.max_abs_root = std::max(report.max_abs_root, std::abs(r));
  report.margin = report.C - report.max_abs_root;
  report.pass = report.margin > 0.0;
  return report;
}

} // namespace chromabound
