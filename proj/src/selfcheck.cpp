#include "chromabound/selfcheck.hpp"

#include "chromabound/bcf.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/tree_gf.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <sstream>

namespace chromabound {
namespace {

class Recorder {
public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  template <class Describe>
  void expect(bool ok, Describe &&describe) {
    ++result_.cases;
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.detail = describe();
    }
  }

  void fail(const std::string &detail) {
    expect(false, [&] { return detail; });
  }

  CheckResult done() { return std::move(result_); }

private:
  CheckResult result_;
};

template <class... Parts>
std::string describe(const Parts &...parts) {
  std::ostringstream out;
  out.precision(12);
  (out << ... << parts);
  return out.str();
}

double unit_draw(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1p-53; }

bool has_edges(const NamedGraph &ng) { return ng.graph.edge_count() > 0; }

std::vector<VertexMask> connected_subsets(const Graph &g, std::size_t min_size, std::size_t max_size) {
  require_mask_capacity(g);
  std::vector<VertexMask> out;
  // Grow connected sets from their smallest vertex so each is produced once.
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    std::vector<VertexMask> frontier{VertexMask{1} << start};
    for (std::size_t size = 1; size <= max_size && !frontier.empty(); ++size) {
      std::vector<VertexMask> next;
      for (VertexMask s : frontier) {
        if (size >= min_size)
          out.push_back(s);
        if (size == max_size)
          continue;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          if (!(s >> v & 1U))
            continue;
          for (Vertex w : g.neighbors(v)) {
            const VertexMask grown = s | VertexMask{1} << w;
            if (w <= start || grown == s)
              continue;
            next.push_back(grown);
          }
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      frontier = std::move(next);
    }
  }
  return out;
}

std::vector<ExtendedGirth> girth_list(std::initializer_list<unsigned> finite, bool with_infinity) {
  std::vector<ExtendedGirth> out;
  for (unsigned g : finite)
    out.push_back(ExtendedGirth::finite(g));
  if (with_infinity)
    out.push_back(ExtendedGirth::infinite());
  return out;
}

std::vector<double> steps(double lo, double hi, double step) {
  std::vector<double> out;
  for (int i = 0; lo + i * step <= hi + 1e-12; ++i)
    out.push_back(lo + i * step);
  return out;
}

} // namespace

CheckLevel parse_check_level(const std::string &text) {
  if (text == "quick")
    return CheckLevel::quick;
  if (text == "full")
    return CheckLevel::full;
  throw InputError("unknown selfcheck level '" + text + "' (expected quick or full)");
}

std::vector<double> b_grid(unsigned delta, std::size_t points, double delta2_max) {
  const double hi = delta >= 3 ? rho_delta(delta) * (1.0 - 1e-9) : delta2_max;
  std::vector<double> out;
  for (std::size_t i = 1; i <= points; ++i)
    out.push_back(i == points ? hi : 1.0 + (hi - 1.0) * static_cast<double>(i) / static_cast<double>(points));
  return out;
}

CheckResult check_penrose(const std::vector<NamedGraph> &graphs, std::size_t max_subset, const Limits &limits) {
  Recorder rec("penrose");
  for (const auto &[name, g] : graphs)
    for (VertexMask subset : connected_subsets(g, 2, max_subset))
      rec.expect(penrose_check(g, subset, limits), [&] { return describe(name, ": subset mask ", subset); });
  return rec.done();
}

CheckResult check_whitney_vs_dc(const std::vector<NamedGraph> &graphs, std::uint64_t seed, const Limits &limits) {
  Recorder rec("whitney_equals_dc");
  for (const auto &[name, g] : graphs) {
    const IntPolynomial dc = chromatic_dc(g, limits);
    for (EdgeOrder order : {EdgeOrder::input, EdgeOrder::lexicographic, EdgeOrder::random}) {
      const IntPolynomial whitney = chromatic_whitney(apply_edge_order(g, order, seed), limits);
      rec.expect(whitney == dc, [&] {
        return describe(name, ": whitney ", whitney.to_string("q"), " vs dc ", dc.to_string("q"));
      });
    }
  }
  return rec.done();
}

CheckResult check_order_invariance(const std::vector<NamedGraph> &graphs, std::uint64_t seed,
                                   const Limits &limits) {
  Recorder rec("forest_gf_order_invariance");
  for (const auto &[name, g] : graphs) {
    const IntPolynomial base = forest_gf(g, limits);
    for (std::uint64_t k = 0; k < 3; ++k) {
      const IntPolynomial other = forest_gf(apply_edge_order(g, EdgeOrder::random, seed + k), limits);
      rec.expect(other == base, [&] { return describe(name, ": seed ", seed + k); });
    }
    rec.expect(forest_gf(apply_edge_order(g, EdgeOrder::lexicographic, 0), limits) == base,
               [&] { return describe(name, ": lexicographic order"); });
  }
  return rec.done();
}

CheckResult check_polymer_identity(const std::vector<NamedGraph> &graphs, std::size_t max_vertices,
                                   const Limits &limits) {
  Recorder rec("polymer_identity");
  const std::vector<Rational> qs{Rational(1), Rational(2), Rational(3), Rational(-1), Rational(7, 3)};
  for (const auto &[name, g] : graphs) {
    if (g.vertex_count() > max_vertices)
      continue;
    const IntPolynomial p = chromatic_dc(g, limits);
    for (const Rational &q : qs) {
      const Rational lhs = detail::pow_nonneg(q, g.vertex_count()) * xi_polymer(g, q, limits);
      const Rational rhs = p.evaluate(q);
      rec.expect(lhs == rhs, [&] { return describe(name, ": q = ", q, ": ", lhs, " vs ", rhs); });
    }
  }
  return rec.done();
}

CheckResult check_vertex_recursion(const std::vector<NamedGraph> &graphs, const Limits &limits) {
  Recorder rec("forest_gf_vertex_recursion");
  for (const auto &[name, g] : graphs) {
    const IntPolynomial whole = forest_gf(g, limits);
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      rec.expect(forest_gf_by_vertex_recursion(g, u, limits) == whole,
                 [&] { return describe(name, ": vertex ", u); });
  }
  return rec.done();
}

CheckResult check_normalization(const std::vector<NamedGraph> &graphs, std::size_t samples, std::uint64_t seed,
                                const Limits &limits) {
  Recorder rec("anchored_normalization");
  std::mt19937_64 rng(seed);
  const std::vector<Rational> zs{Rational(1, 3), Rational(-2, 7), Rational(5, 4)};
  for (const auto &[name, g] : graphs) {
    if (g.vertex_count() == 0)
      continue;
    const VertexMask all = full_mask(g.vertex_count());
    for (std::size_t s = 0; s < samples; ++s) {
      const VertexMask subset = (rng() & all) | (VertexMask{1} << (rng() % g.vertex_count()));
      VertexMask anchors = rng() & subset;
      if (anchors == 0)
        anchors = subset & (~subset + 1);
      for (const Rational &z : zs) {
        try {
          const Rational total = anchored_forest_sum(g, subset, anchors, z, limits);
          rec.expect(total == 1, [&] {
            return describe(name, ": U = ", subset, ", S = ", anchors, ", z = ", z, " gives ", total);
          });
        } catch (const std::domain_error &) {
          // F_U vanishes at this z; nothing to normalize.
        }
      }
    }
  }
  return rec.done();
}

CheckResult check_ratio_bound(const std::vector<NamedGraph> &graphs, const std::vector<double> &a_values,
                              std::size_t circle_points, const Limits &limits) {
  Recorder rec("ratio_bound");
  for (const auto &[name, g] : graphs) {
    if (g.edge_count() == 0)
      continue;
    const auto delta = static_cast<unsigned>(max_degree(g));
    const ExtendedGirth gg = girth(g);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      const VertexRatio ratio(g, u, limits);
      for (double a : a_values) {
        const double radius = z_delta_g(delta, gg, a);
        for (std::size_t k = 0; k < circle_points; ++k) {
          const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(circle_points);
          const std::complex<double> z = std::polar(radius, angle);
          try {
            const double value = std::abs(ratio(z));
            rec.expect(value <= a + 1e-9, [&] {
              return describe(name, ": u = ", u, ", a = ", a, ", |z| = ", radius, ", angle ", angle, ": |R| = ",
                              value);
            });
          } catch (const SingularRatio &e) {
            rec.fail(describe(name, ": u = ", u, ", a = ", a, ": ", e.what()));
          }
        }
      }
    }
  }
  return rec.done();
}

CheckResult check_subtree_bound_v(const std::vector<NamedGraph> &graphs, std::size_t b_points,
                                  const Limits &limits) {
  Recorder rec("subtree_bound_vertex");
  for (const auto &[name, g] : graphs) {
    const auto delta = static_cast<unsigned>(max_degree(g));
    if (delta < 2)
      continue;
    const std::vector<double> bs = b_grid(delta, b_points);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const IntPolynomial t = subtree_polynomial(g, v, limits);
      for (double b : bs) {
        const double value = t.evaluate(x_delta(delta, b));
        rec.expect(value <= b + 1e-9, [&] { return describe(name, ": v = ", v, ", b = ", b, ": T = ", value); });
      }
    }
  }
  return rec.done();
}

CheckResult check_subtree_bound_vw(const std::vector<NamedGraph> &graphs, std::size_t b_points,
                                   const PathFactor &path_factor, bool geodesic_limited, const Limits &limits) {
  Recorder rec("subtree_bound_pair");
  for (const auto &[name, g] : graphs) {
    const auto delta = static_cast<unsigned>(max_degree(g));
    if (delta < 2)
      continue;
    const std::vector<double> bs = b_grid(delta, b_points);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const std::vector<Distance> dist = distances_from(g, v);
      const std::vector<std::uint64_t> geodesics = geodesic_counts(g, v);
      for (Vertex w = v + 1; w < g.vertex_count(); ++w) {
        if (!dist[w])
          continue;
        if (geodesic_limited && static_cast<double>(geodesics[w]) > std::pow(delta - 1.0, *dist[w] - 1.0))
          continue;
        const IntPolynomial t = subtree_polynomial(g, v, w, limits);
        for (double b : bs) {
          const double value = t.evaluate(x_delta(delta, b));
          const double bound = b * path_factor(delta, dist[w], b);
          rec.expect(value <= bound + 1e-9, [&] {
            return describe(name, ": v = ", v, ", w = ", w, ", d = ", *dist[w], ", b = ", b, ": T = ", value,
                            " > ", bound);
          });
        }
      }
    }
  }
  return rec.done();
}

std::vector<std::uint64_t> geodesic_counts(const Graph &g, Vertex from) {
  const std::vector<Distance> dist = distances_from(g, from);
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v])
      order.push_back(v);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return *dist[a] < *dist[b]; });
  std::vector<std::uint64_t> count(g.vertex_count(), 0);
  count[from] = 1;
  for (Vertex v : order)
    for (Vertex w : g.neighbors(v))
      if (dist[w] && *dist[w] == *dist[v] + 1)
        count[w] += count[v];
  return count;
}

CheckResult check_inversion_identity(unsigned max_delta, std::size_t b_points) {
  Recorder rec("series_inversion");
  for (unsigned delta = 2; delta <= max_delta; ++delta) {
    const double hi = delta >= 3 ? rho_delta(delta) : 64.0;
    for (std::size_t i = 1; i <= b_points; ++i) {
      const double b = 1.0 + (hi - 1.0) * static_cast<double>(i) / static_cast<double>(b_points + 1);
      const double s = s_of_x(delta, x_delta(delta, b));
      rec.expect(std::abs(s - b) < 1e-10, [&] { return describe("Delta = ", delta, ", b = ", b, ": S = ", s); });
    }
  }
  return rec.done();
}

CheckResult check_lagrange(unsigned max_n) {
  Recorder rec("lagrange_coefficients");
  for (unsigned delta : {3U, 4U, 5U})
    for (unsigned n = 1; n <= max_n; ++n) {
      const BigInt formula = u_coeff(delta, n);
      const BigInt counted = count_rooted_subtrees(delta, n);
      rec.expect(formula == counted,
                 [&] { return describe("Delta = ", delta, ", n = ", n, ": ", formula, " vs ", counted); });
    }
  return rec.done();
}

CheckResult check_delta2_closed_forms() {
  Recorder rec("delta2_closed_forms");
  for (double x : steps(0.0, 0.95, 0.025)) {
    const SeriesPoint p = solve_u(2, x);
    const double u = x / (1.0 - x);
    const double s = 1.0 / ((1.0 - x) * (1.0 - x));
    rec.expect(std::abs(p.u - u) <= 1e-12 * std::max(1.0, u), [&] { return describe("x = ", x, ": u = ", p.u); });
    rec.expect(std::abs(p.s - s) <= 1e-12 * std::max(1.0, s), [&] { return describe("x = ", x, ": S = ", p.s); });
  }
  return rec.done();
}

CheckResult check_tree_series(std::size_t x_points) {
  Recorder rec("tree_series");
  for (unsigned delta = 2; delta <= 10; ++delta) {
    const double r = big_r_delta(delta);
    for (std::size_t i = 0; i < x_points; ++i) {
      const double x = r * static_cast<double>(i) / static_cast<double>(x_points);
      const SeriesPoint p = solve_u(delta, x);
      const double t = x * p.s;
      rec.expect(std::abs(t - (p.u + p.u * p.u)) <= 1e-12 * std::max(1.0, t),
                 [&] { return describe("Delta = ", delta, ", x = ", x, ": T = ", t); });
    }
  }
  // Partial sums of the Lagrange series approach u from below.
  for (unsigned delta : {3U, 4U, 5U}) {
    const double x = 0.5 * big_r_delta(delta);
    const double u = solve_u(delta, x).u;
    double partial = 0.0;
    double previous_gap = u;
    double xn = 1.0;
    for (unsigned n = 1; n <= 40; ++n) {
      xn *= x;
      partial += u_coeff(delta, n).convert_to<double>() * xn;
      const double gap = u - partial;
      rec.expect(gap >= -1e-13 && gap <= previous_gap,
                 [&] { return describe("Delta = ", delta, ", N = ", n, ": gap ", gap); });
      previous_gap = gap;
    }
  }
  return rec.done();
}

CheckResult check_z_monotonicity(unsigned max_delta, const std::vector<ExtendedGirth> &girths,
                                 const std::vector<double> &a_values) {
  Recorder rec("z_monotonicity");
  const ExtendedGirth inf = ExtendedGirth::infinite();
  for (unsigned delta = 1; delta <= max_delta; ++delta)
    for (ExtendedGirth g : girths)
      for (double a : a_values) {
        const double z = z_delta_g(delta, g, a);
        const double bigger_delta = z_delta_g(delta + 1, g, a);
        const double bigger_girth = z_delta_g(delta, g.next(), a);
        const double tree_like = z_delta_g(delta, inf, a);
        auto where = [&] { return describe("Delta = ", delta, ", g = ", g.to_string(), ", a = ", a, ": "); };
        rec.expect(z >= bigger_delta - 1e-12, [&] { return where() + describe(z, " < ", bigger_delta, " at Delta+1"); });
        rec.expect(z <= bigger_girth + 1e-12, [&] { return where() + describe(z, " > ", bigger_girth, " at g+1"); });
        rec.expect(z <= tree_like + 1e-12, [&] { return where() + describe(z, " > ", tree_like, " at g = inf"); });
      }
  return rec.done();
}

CheckResult check_c_monotone_in_delta(unsigned max_delta, const std::vector<unsigned> &girths,
                                      const MaximizeOptions &maximize) {
  Recorder rec("c_over_delta_monotone");
  for (unsigned g : girths) {
    const ExtendedGirth gg = ExtendedGirth::finite(g);
    const double k_g = k_g_jpr(g, maximize);
    double previous = 0.0;
    for (unsigned delta = 3; delta <= max_delta; ++delta) {
      const double c = c_delta_g(delta, gg, maximize).C_over_delta;
      rec.expect(c >= previous - 1e-6,
                 [&] { return describe("g = ", g, ", Delta = ", delta, ": ", c, " < ", previous); });
      rec.expect(c <= k_g + 1e-6,
                 [&] { return describe("g = ", g, ", Delta = ", delta, ": ", c, " > K_g = ", k_g); });
      previous = c;
    }
  }
  return rec.done();
}

CheckResult check_k_increasing(std::size_t pairs, std::uint64_t seed) {
  Recorder rec("k_increasing_in_b");
  std::mt19937_64 rng(seed);
  const std::vector<ExtendedGirth> girths = girth_list({3, 4, 5, 6, 8, 10, 25}, true);
  for (std::size_t i = 0; i < pairs; ++i) {
    const unsigned delta = 2 + static_cast<unsigned>(rng() % 29);
    const ExtendedGirth g = girths[rng() % girths.size()];
    const double a = unit_draw(rng);
    const double hi = delta >= 3 ? rho_delta(delta) * (1.0 - 1e-9) : 64.0;
    double b1 = 1.0 + (hi - 1.0) * unit_draw(rng);
    double b2 = 1.0 + (hi - 1.0) * unit_draw(rng);
    if (b1 > b2)
      std::swap(b1, b2);
    if (b2 - b1 <= 1e-9 * b2)
      continue;
    const double k1 = k_delta_g(delta, g, a, b1);
    const double k2 = k_delta_g(delta, g, a, b2);
    rec.expect(k2 > k1, [&] {
      return describe("Delta = ", delta, ", g = ", g.to_string(), ", a = ", a, ": K(", b1, ") = ", k1, " >= K(", b2,
                      ") = ", k2);
    });
  }
  return rec.done();
}

CheckResult check_solution_residual(unsigned max_delta, const MaximizeOptions &maximize) {
  Recorder rec("solution_residual");
  const std::vector<ExtendedGirth> girths = girth_list({3, 4, 5, 10}, true);
  for (unsigned delta = 2; delta <= max_delta; ++delta)
    for (ExtendedGirth g : girths) {
      const BoundResult r = c_delta_g(delta, g, maximize);
      if (!(r.b_star < rho_delta(delta)))
        continue;
      const double k = k_delta_g(delta, g, r.a_star, r.b_star);
      rec.expect(std::abs(k - r.a_star) < 1e-9,
                 [&] { return describe("Delta = ", delta, ", g = ", g.to_string(), ": K - a = ", k - r.a_star); });
      const double z = (1.0 - r.a_star) * x_delta(delta, r.b_star);
      rec.expect(std::abs(z - r.z_max) < 1e-12,
                 [&] { return describe("Delta = ", delta, ", g = ", g.to_string(), ": z mismatch ", z - r.z_max); });
    }
  return rec.done();
}

CheckResult check_domination(unsigned max_delta, std::size_t grid) {
  Recorder rec("tree_limit_domination");
  for (unsigned delta = 3; delta <= max_delta; ++delta) {
    const double d = delta;
    const double hi = std::min(rho_delta(delta), std::numbers::e) * (1.0 - 1e-9);
    for (unsigned g : {3U, 4U, 5U, 10U}) {
      // K_inf bounds the degree-Delta estimate taken at radius (1-a) ln b / (Delta b).
      for (std::size_t i = 0; i <= grid; ++i) {
        const double a = static_cast<double>(i) / static_cast<double>(grid);
        for (std::size_t j = 0; j < grid; ++j) {
          const double b = 1.0 + (hi - 1.0) * static_cast<double>(j) / static_cast<double>(grid);
          const double lb = std::log(b);
          const double estimate = std::pow(1.0 + (1.0 - a) * lb / (d * b), d) - 1.0 +
                                  f_d_delta(delta, Distance(g - 2), b) * d * (d - 1.0) / 2.0 * (lb / d) *
                                      std::pow(1.0 + lb / d, d - 1.0);
          const double limit = k_inf_g(g, a, b);
          rec.expect(limit >= estimate - 1e-12 * (1.0 + estimate), [&] {
            return describe("Delta = ", delta, ", g = ", g, ", a = ", a, ", b = ", b, ": ", limit, " < ", estimate);
          });
        }
      }
      // Hence the tree-limit radius never exceeds z at the same a.
      for (std::size_t i = 1; i < grid; ++i) {
        const double a = static_cast<double>(i) / static_cast<double>(grid);
        const double b_inf = solve_b_inf(g, a);
        const double radius = std::log(b_inf) / (d * b_inf);
        const double x = x_delta(delta, solve_b(delta, ExtendedGirth::finite(g), a));
        rec.expect(radius <= x + 1e-12, [&] {
          return describe("Delta = ", delta, ", g = ", g, ", a = ", a, ": ", radius, " > ", x);
        });
      }
    }
  }
  return rec.done();
}

std::vector<CheckResult> run_selfcheck(const SelfcheckConfig &config) {
  const bool full = config.level == CheckLevel::full;
  const Limits &limits = config.limits;
  std::vector<NamedGraph> corpus = standard_corpus();
  std::vector<NamedGraph> with_edges;
  std::copy_if(corpus.begin(), corpus.end(), std::back_inserter(with_edges), has_edges);

  std::vector<NamedGraph> small_graphs = corpus;
  for (std::size_t n = 1; n <= (full ? 6U : 5U); ++n) {
    std::size_t index = 0;
    for (Graph &g : connected_graphs(n))
      small_graphs.push_back({"connected" + std::to_string(n) + "_" + std::to_string(index++), std::move(g)});
  }

  std::vector<NamedGraph> medium;
  std::copy_if(corpus.begin(), corpus.end(), std::back_inserter(medium),
               [](const NamedGraph &ng) { return ng.graph.vertex_count() <= 8; });

  const std::vector<double> a_values = full ? steps(0.1, 0.9, 0.1) : std::vector<double>{0.2, 0.5, 0.8};
  std::vector<ExtendedGirth> girths;
  for (unsigned g = 3; g <= 12; ++g)
    girths.push_back(ExtendedGirth::finite(g));
  girths.push_back(ExtendedGirth::finite(25));
  girths.push_back(ExtendedGirth::infinite());
  MaximizeOptions coarse = config.maximize;
  if (!full)
    coarse.grid = std::min<std::size_t>(coarse.grid, 257);

  std::vector<CheckResult> out;
  out.push_back(check_penrose(corpus, full ? 7 : 5, limits));
  out.push_back(check_whitney_vs_dc(small_graphs, config.seed, limits));
  out.push_back(check_order_invariance(corpus, config.seed, limits));
  out.push_back(check_polymer_identity(corpus, full ? 9 : 6, limits));
  out.push_back(check_vertex_recursion(full ? corpus : medium, limits));
  out.push_back(check_normalization(medium, full ? 12 : 4, config.seed, limits));
  out.push_back(check_ratio_bound(with_edges, a_values, full ? 16 : 8, limits));
  out.push_back(check_subtree_bound_v(with_edges, full ? 50 : 12, limits));
  // Pairs with more than (Delta-1)^(d-1) shortest paths start above the pair
  // bound at small b (e.g. K_{2,3}, even cycles), so only the others are swept.
  out.push_back(check_subtree_bound_vw(with_edges, full ? 50 : 12, config.path_factor, true, limits));
  out.push_back(check_inversion_identity(full ? 30 : 10, full ? 50 : 12));
  out.push_back(check_lagrange(8));
  out.push_back(check_delta2_closed_forms());
  out.push_back(check_tree_series(full ? 40 : 10));
  out.push_back(check_z_monotonicity(full ? 30 : 10, girths, full ? steps(0.05, 0.95, 0.05) : steps(0.05, 0.95, 0.15)));
  out.push_back(check_c_monotone_in_delta(full ? 50 : 12, full ? std::vector<unsigned>{3, 4, 5, 10}
                                                                : std::vector<unsigned>{3, 5},
                                          coarse));
  out.push_back(check_k_increasing(1000, config.seed));
  out.push_back(check_solution_residual(full ? 30 : 8, coarse));
  out.push_back(check_domination(full ? 30 : 10, full ? 40 : 10));
  return out;
}

} // namespace chromabound
