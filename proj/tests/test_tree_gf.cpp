#include "chromabound/bound.hpp"
#include "chromabound/corpus.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/tree_gf.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace chromabound;

TEST_CASE("u_coeff examples") {
  CHECK(u_coeff(3, 1) == 1);
  CHECK(u_coeff(3, 2) == 2);
  CHECK(u_coeff(3, 3) == 5);
  CHECK(u_coeff(4, 2) == 3);
  CHECK(u_coeff(3, 10) == 16796); // Catalan numbers for binary branching
  CHECK_THROWS(u_coeff(2, 3));
  CHECK_THROWS(u_coeff(3, 0));
}

TEST_CASE("count_rooted_subtrees examples and cap") {
  CHECK(count_rooted_subtrees(3, 1) == 1);
  CHECK(count_rooted_subtrees(3, 2) == 2);
  CHECK(count_rooted_subtrees(4, 2) == 3);
  CHECK_THROWS_AS(count_rooted_subtrees(3, 10), CapExceeded);
}

TEST_CASE("Lagrange coefficients equal subtree counts") {
  for (unsigned d : {3U, 4U, 5U})
    for (unsigned n = 1; n <= 8; ++n)
      CHECK(u_coeff(d, n) == count_rooted_subtrees(d, n));
}

TEST_CASE("solve_u examples") {
  CHECK(solve_u(3, 0.0).u == 0.0);
  CHECK(solve_u(2, 0.5).u == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(solve_u(3, x_delta(3, 2.0)).u == doctest::Approx(std::cbrt(2.0) - 1.0).epsilon(1e-12));
  CHECK_THROWS_AS(solve_u(3, 0.25), std::domain_error);
  CHECK_THROWS_AS(solve_u(2, 1.0), std::domain_error);
  const SeriesPoint p = solve_u(5, 0.05);
  CHECK(std::abs(p.u - p.x * std::pow(1.0 + p.u, 4)) < 1e-13);
}

TEST_CASE("series values at x_Delta(b)") {
  CHECK(std::abs(s_of_x(3, x_delta(3, 2.0)) - 2.0) < 1e-10);
  CHECK(std::abs(w_of_x(3, x_delta(3, 2.0)) - std::pow(2.0, 2.0 / 3.0)) < 1e-10);
  CHECK(std::abs(w_star_of_x(3, x_delta(3, 2.0)) - std::pow(2.0, 1.0 / 3.0)) < 1e-10);
  CHECK(s_of_x(2, 0.5) == doctest::Approx(4.0));
}

TEST_CASE("partial Lagrange sums approach u from below") {
  const double x = 0.5 * big_r_delta(4);
  const double u = solve_u(4, x).u;
  double partial = 0.0;
  double gap = u;
  for (unsigned n = 1; n <= 30; ++n) {
    partial += u_coeff(4, n).convert_to<double>() * std::pow(x, n);
    CHECK(u - partial <= gap);
    CHECK(u - partial >= -1e-13);
    gap = u - partial;
  }
  CHECK(gap < 1e-8);
}

TEST_CASE("graph subtree polynomials") {
  CHECK(subtree_polynomial(Graph(1, {}), 0) == IntPolynomial{1});
  CHECK(t_graph_v(Graph(1, {}), 0, 0.3) == 1.0);
  CHECK(t_graph_v(complete_graph(2), 0, 0.3) == doctest::Approx(1.3));
  CHECK(subtree_polynomial(complete_graph(3), 0) == IntPolynomial{1, 2, 3});
  CHECK(subtree_polynomial(complete_graph(2), 0, 1) == IntPolynomial{0, 1});
  CHECK(subtree_polynomial(path_graph(3), 0, 2) == IntPolynomial{0, 0, 1});
  CHECK(t_graph_vw(Graph(3, {{0, 1}}), 0, 2, 0.4) == 0.0);
  CHECK_THROWS_AS(subtree_polynomial(complete_graph(3), 1, 1), std::invalid_argument);
  Limits tight;
  tight.max_subtree_edges = 5;
  CHECK_THROWS_AS(subtree_polynomial(complete_graph(4), 0, tight), CapExceeded);
}

TEST_CASE("subtree polynomials match brute-force counts") {
  for (const auto &ng : standard_corpus()) {
    const Graph &g = ng.graph;
    if (g.edge_count() > 12 || g.vertex_count() == 0)
      continue;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      const auto counts = oracle::subtree_counts(g, {v});
      const IntPolynomial p = subtree_polynomial(g, v);
      for (std::size_t k = 0; k < counts.size(); ++k)
        CHECK(p.coefficient(k) == counts[k]);
      for (Vertex w = v + 1; w < g.vertex_count(); ++w) {
        const auto pair_counts = oracle::subtree_counts(g, {v, w});
        const IntPolynomial q = subtree_polynomial(g, v, w);
        for (std::size_t k = 0; k < pair_counts.size(); ++k)
          CHECK(q.coefficient(k) == pair_counts[k]);
      }
    }
  }
}

TEST_CASE("vertex subtree bound on the Petersen graph") {
  const Graph g = petersen_graph();
  const IntPolynomial t = subtree_polynomial(g, 0);
  for (double b = 1.05; b < rho_delta(3); b += 0.25)
    CHECK(t.evaluate(x_delta(3, b)) <= b + 1e-9);
}
