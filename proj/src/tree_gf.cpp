#include "chromabound/tree_gf.hpp"

#include "chromabound/bound.hpp"
#include "chromabound/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace chromabound {
namespace {

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned i = 2; i <= n; ++i)
    out *= i;
  return out;
}

// Grows rooted subtrees of the implicit (Delta-1)-ary tree. Each frontier
// entry is an unused child slot of a chosen vertex; slots are either taken
// (adding a vertex with Delta-1 fresh slots) or skipped for good.
BigInt count_growths(std::size_t remaining, std::size_t slots_before, std::size_t branching) {
  // With `slots_before` open slots, choose which to take in order; recursion
  // over the first open slot.
  if (remaining == 0)
    return 1;
  if (slots_before == 0)
    return 0;
  // Skip the first slot.
  BigInt total = count_growths(remaining, slots_before - 1, branching);
  // Take it: one vertex used, its children become new slots at the back.
  total += count_growths(remaining - 1, slots_before - 1 + branching, branching);
  return total;
}

void require_subtree_capacity(const Graph &g, const Limits &limits) {
  if (g.edge_count() > limits.max_subtree_edges)
    throw CapExceeded("subtree enumeration: graph has " + std::to_string(g.edge_count()) +
                      " edges, cap is " + std::to_string(limits.max_subtree_edges));
}

} // namespace

BigInt u_coeff(unsigned delta, unsigned n) {
  if (delta < 3)
    throw std::domain_error("u_coeff: Delta must be >= 3");
  if (n < 1)
    throw std::domain_error("u_coeff: n must be >= 1");
  const unsigned top = (delta - 1) * n;
  const unsigned bottom = (delta - 2) * n + 1;
  return factorial(top) / (factorial(n) * factorial(bottom));
}

BigInt count_rooted_subtrees(unsigned delta, unsigned n) {
  if (delta < 3)
    throw std::domain_error("count_rooted_subtrees: Delta must be >= 3");
  if (n < 1 || n > 9)
    throw CapExceeded("count_rooted_subtrees: n must lie in 1..9");
  // The root is always present and opens Delta-1 child slots.
  return count_growths(n - 1, delta - 1, delta - 1);
}

SeriesPoint solve_u(unsigned delta, double x) {
  if (delta < 2)
    throw std::domain_error("solve_u: Delta must be >= 2");
  const double radius = big_r_delta(delta);
  if (!(x >= 0.0 && x < radius))
    throw std::domain_error("solve_u: x must lie in [0, R_Delta), got " + std::to_string(x));
  double u;
  if (delta == 2) {
    u = x / (1.0 - x);
  } else {
    const double d = delta;
    // f(u) = u / (1+u)^(D-1) increases on [0, 1/(D-2)] from 0 to R_D.
    auto f = [&](double v) { return v * std::exp(-(d - 1.0) * std::log1p(v)); };
    double lo = 0.0;
    double hi = 1.0 / (d - 2.0);
    for (int iter = 0; iter < 400; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi)
        break;
      if (f(mid) > x)
        hi = mid;
      else
        lo = mid;
    }
    u = x == 0.0 ? 0.0 : 0.5 * (lo + hi);
  }
  const double d = delta;
  const double log1pu = std::log1p(u);
  return {delta, x, u, std::exp((d - 1.0) * log1pu), std::exp((d - 2.0) * log1pu), std::exp(d * log1pu)};
}

IntPolynomial subtree_polynomial(const Graph &g, Vertex v, const Limits &limits) {
  require_subtree_capacity(g, limits);
  if (v >= g.vertex_count())
    throw std::out_of_range("unknown vertex " + std::to_string(v));
  std::vector<BigInt> counts(g.vertex_count());
  for_each_subtree(g, v, [&](const std::vector<EdgeId> &edges, const std::vector<Vertex> &) {
    counts[edges.size()] += 1;
  });
  return IntPolynomial(std::move(counts));
}

IntPolynomial subtree_polynomial(const Graph &g, Vertex v, Vertex w, const Limits &limits) {
  require_subtree_capacity(g, limits);
  if (v >= g.vertex_count() || w >= g.vertex_count())
    throw std::out_of_range("unknown vertex");
  if (v == w)
    throw std::invalid_argument("t_graph_vw needs two distinct vertices");
  std::vector<BigInt> counts(g.vertex_count());
  for_each_subtree(g, v, [&](const std::vector<EdgeId> &edges, const std::vector<Vertex> &vertices) {
    for (Vertex x : vertices)
      if (x == w) {
        counts[edges.size()] += 1;
        return;
      }
  });
  return IntPolynomial(std::move(counts));
}

double t_graph_v(const Graph &g, Vertex v, double x, const Limits &limits) {
  return subtree_polynomial(g, v, limits).evaluate(x);
}

double t_graph_vw(const Graph &g, Vertex v, Vertex w, double x, const Limits &limits) {
  return subtree_polynomial(g, v, w, limits).evaluate(x);
}

} // namespace chromabound
