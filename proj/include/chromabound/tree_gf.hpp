#pragma once

// Subtree generating functions of the Delta-regular infinite tree and their
// graph counterparts T_{G,v}(x), T_{G,v,w}(x).

#include "chromabound/graph.hpp"
#include "chromabound/limits.hpp"
#include "chromabound/polynomial.hpp"

namespace chromabound {

/// Solution of u = x (1+u)^(Delta-1) on the combinatorial branch, with the
/// derived series values W = (1+u)^(Delta-1), W* = (1+u)^(Delta-2) and
/// S = (1+u)^Delta.
struct SeriesPoint {
  unsigned delta;
  double x;
  double u;
  double w;
  double w_star;
  double s;
};

/// Number of n-vertex subtrees rooted at the root of the infinite rooted tree
/// with Delta-1 children per vertex: [(Delta-1)n]! / (n! [(Delta-2)n+1]!).
BigInt u_coeff(unsigned delta, unsigned n);

/// Independent count of the same subtrees by explicit enumeration. n <= 9.
BigInt count_rooted_subtrees(unsigned delta, unsigned n);

/// Small root of u = x (1+u)^(Delta-1) for 0 <= x < R_Delta: bisection of
/// u / (1+u)^(Delta-1) = x on [0, 1/(Delta-2)]; x/(1-x) for Delta = 2.
SeriesPoint solve_u(unsigned delta, double x);

inline double s_of_x(unsigned delta, double x) { return solve_u(delta, x).s; }
inline double w_of_x(unsigned delta, double x) { return solve_u(delta, x).w; }
inline double w_star_of_x(unsigned delta, double x) { return solve_u(delta, x).w_star; }

/// Counting polynomial of the subtrees of g containing v (the single-vertex
/// tree counts as 1). Throws CapExceeded above limits.max_subtree_edges.
IntPolynomial subtree_polynomial(const Graph &g, Vertex v, const Limits &limits = default_limits());

/// Counting polynomial of the subtrees of g containing both v and w; zero when
/// they are disconnected. Requires v != w.
IntPolynomial subtree_polynomial(const Graph &g, Vertex v, Vertex w, const Limits &limits = default_limits());

/// T_{G,v}(x).
double t_graph_v(const Graph &g, Vertex v, double x, const Limits &limits = default_limits());
/// T_{G,v,w}(x).
double t_graph_vw(const Graph &g, Vertex v, Vertex w, double x, const Limits &limits = default_limits());

} // namespace chromabound
