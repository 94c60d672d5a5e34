#pragma once

// Cross-module invariant suites behind `chromabound selfcheck`.

#include "chromabound/bound.hpp"
#include "chromabound/corpus.hpp"
#include "chromabound/limits.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chromabound {

enum class CheckLevel { quick, full };

CheckLevel parse_check_level(const std::string &text);

struct CheckResult {
  std::string name;
  bool pass = true;
  /// Number of individual comparisons made.
  std::size_t cases = 0;
  /// First failure, empty on success.
  std::string detail;
};

/// Signature of f^d_Delta(b); swapped out by the mutation smoke test.
using PathFactor = std::function<double(unsigned, Distance, double)>;

struct SelfcheckConfig {
  CheckLevel level = CheckLevel::quick;
  Limits limits = default_limits();
  MaximizeOptions maximize{};
  std::uint64_t seed = 1;
  PathFactor path_factor = f_d_delta;
};

/// Evenly spaced b values in (1, b_max], b_max = rho_Delta (1 - 1e-9) for
/// Delta >= 3 and `delta2_max` for Delta = 2.
std::vector<double> b_grid(unsigned delta, std::size_t points, double delta2_max = 64.0);

CheckResult check_penrose(const std::vector<NamedGraph> &graphs, std::size_t max_subset, const Limits &limits);
CheckResult check_whitney_vs_dc(const std::vector<NamedGraph> &graphs, std::uint64_t seed, const Limits &limits);
CheckResult check_order_invariance(const std::vector<NamedGraph> &graphs, std::uint64_t seed, const Limits &limits);
CheckResult check_polymer_identity(const std::vector<NamedGraph> &graphs, std::size_t max_vertices,
                                   const Limits &limits);
CheckResult check_vertex_recursion(const std::vector<NamedGraph> &graphs, const Limits &limits);
CheckResult check_normalization(const std::vector<NamedGraph> &graphs, std::size_t samples, std::uint64_t seed,
                                const Limits &limits);
CheckResult check_ratio_bound(const std::vector<NamedGraph> &graphs, const std::vector<double> &a_values,
                              std::size_t circle_points, const Limits &limits);
CheckResult check_subtree_bound_v(const std::vector<NamedGraph> &graphs, std::size_t b_points,
                                  const Limits &limits);
/// Number of shortest paths from `from` to every vertex (0 if unreachable).
std::vector<std::uint64_t> geodesic_counts(const Graph &g, Vertex from);

/// Pair bound T_{G,v,w}(x_Delta(b)) <= b f^d_Delta(b). With `geodesic_limited`
/// only pairs joined by at most (Delta-1)^(d-1) shortest paths are swept.
CheckResult check_subtree_bound_vw(const std::vector<NamedGraph> &graphs, std::size_t b_points,
                                   const PathFactor &path_factor, bool geodesic_limited, const Limits &limits);
CheckResult check_inversion_identity(unsigned max_delta, std::size_t b_points);
CheckResult check_lagrange(unsigned max_n);
CheckResult check_delta2_closed_forms();
CheckResult check_tree_series(std::size_t x_points);
CheckResult check_z_monotonicity(unsigned max_delta, const std::vector<ExtendedGirth> &girths,
                                 const std::vector<double> &a_values);
CheckResult check_c_monotone_in_delta(unsigned max_delta, const std::vector<unsigned> &girths,
                                      const MaximizeOptions &maximize);
CheckResult check_k_increasing(std::size_t pairs, std::uint64_t seed);
CheckResult check_solution_residual(unsigned max_delta, const MaximizeOptions &maximize);
CheckResult check_domination(unsigned max_delta, std::size_t grid);

std::vector<CheckResult> run_selfcheck(const SelfcheckConfig &config);

} // namespace chromabound
