#pragma once

#include "chromabound/bound.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/limits.hpp"
#include "chromabound/polynomial.hpp"

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace chromabound {

struct RootOptions {
  int max_sweeps = 500;
  int polish_steps = 3;
  /// Rotation seed for the initial circle.
  std::uint64_t seed = 0;
};

struct RootSet {
  std::vector<std::complex<double>> roots;
  /// |p(r)| / (1 + |lead| |r|^deg) per root, on the coefficients scaled to a
  /// largest magnitude of 1.
  std::vector<double> residuals;
  bool converged = false;
  int sweeps = 0;
};

inline constexpr double kRootResidualTolerance = 1e-8;

/// All complex roots with multiplicity. Exact zero roots (trailing zero
/// coefficients) are split off first; the rest are found by simultaneous
/// Aberth-Ehrlich iteration from a rotated circle, then Newton-polished.
/// Throws std::invalid_argument for constant polynomials.
RootSet find_roots(const IntPolynomial &p, const RootOptions &options = {});

struct ZeroFreeReport {
  std::string graph_id;
  std::size_t delta = 0;
  ExtendedGirth girth = ExtendedGirth::infinite();
  double C = 0.0;
  IntPolynomial chromatic;
  RootSet roots;
  double max_abs_root = 0.0;
  /// C - max_abs_root.
  double margin = 0.0;
  bool pass = false;
};

/// Chromatic roots of g against the radius C(Delta, g). Requires at least one
/// edge. pass iff every root satisfies |q| < C; roots.converged reports
/// whether every residual met kRootResidualTolerance.
ZeroFreeReport verify_zero_free(const Graph &g, const std::string &graph_id,
                                const Limits &limits = default_limits(),
                                const MaximizeOptions &maximize = {}, const RootOptions &options = {});

} // namespace chromabound
