#include "chromabound/bcf.hpp"
#include "chromabound/corpus.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace chromabound;

namespace {

VertexMask mask_of(std::initializer_list<Vertex> vs) {
  VertexMask m = 0;
  for (Vertex v : vs)
    m |= VertexMask{1} << v;
  return m;
}

} // namespace

TEST_CASE("chromatic_dc examples") {
  CHECK(chromatic_dc(complete_graph(1)) == IntPolynomial{0, 1});
  CHECK(chromatic_dc(complete_graph(2)) == IntPolynomial{0, -1, 1});
  CHECK(chromatic_dc(complete_graph(3)) == IntPolynomial{0, 2, -3, 1});
  CHECK(chromatic_dc(Graph()) == IntPolynomial{1});
}

TEST_CASE("chromatic_dc matches interpolated coloring counts") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph &g : connected_graphs(n))
      CHECK(chromatic_dc(g) == oracle::interpolated_chromatic(g));
  CHECK(chromatic_dc(Graph(4, {{0, 1}})) == oracle::interpolated_chromatic(Graph(4, {{0, 1}})));
  CHECK(chromatic_dc(cube_graph()) == oracle::interpolated_chromatic(cube_graph()));
}

TEST_CASE("chromatic_dc closed forms") {
  // cycles: (q-1)^n + (-1)^n (q-1)
  const IntPolynomial q_minus_1{-1, 1};
  for (std::size_t n = 3; n <= 10; ++n) {
    IntPolynomial expected = power(q_minus_1, n);
    expected += (n % 2 == 0 ? q_minus_1 : IntPolynomial{1, -1});
    CHECK(chromatic_dc(cycle_graph(n)) == expected);
  }
  // complete graphs: falling factorial
  IntPolynomial falling{1};
  for (std::size_t n = 1; n <= 7; ++n) {
    falling *= IntPolynomial{-static_cast<long long>(n - 1), 1};
    CHECK(chromatic_dc(complete_graph(n)) == falling);
  }
  // trees: q (q-1)^(n-1)
  CHECK(chromatic_dc(star_graph(6)) == IntPolynomial{0, 1} * power(q_minus_1, 6));
}

TEST_CASE("chromatic_dc honours the edge cap") {
  Limits tight;
  tight.max_dc_edges = 5;
  CHECK_THROWS_AS(chromatic_dc(complete_graph(4), tight), CapExceeded);
}

TEST_CASE("css_signed_sum examples") {
  const Graph k3 = complete_graph(3);
  CHECK(css_signed_sum(k3, mask_of({0, 1})) == -1);
  CHECK(css_signed_sum(k3, mask_of({0, 1, 2})) == 2);
  CHECK(css_signed_sum(path_graph(3), mask_of({0, 1, 2})) == 1);
  CHECK_THROWS_AS(css_signed_sum(k3, mask_of({0})), std::invalid_argument);
  CHECK_THROWS_AS(css_signed_sum(path_graph(3), mask_of({0, 2})), std::invalid_argument);
}

TEST_CASE("activity examples") {
  const Graph k3 = complete_graph(3);
  CHECK(activity(k3, mask_of({0, 1}), Rational(2)) == Rational(-1, 2));
  CHECK(activity(k3, mask_of({0, 1, 2}), Rational(2)) == Rational(1, 2));
  CHECK(activity(k3, mask_of({0, 1, 2}), Rational(1)) == Rational(2));
  CHECK_THROWS_AS(activity(k3, mask_of({0, 1}), Rational(0)), std::domain_error);
  const std::complex<double> z = activity(k3, mask_of({0, 1, 2}), std::complex<double>(0.0, 1.0));
  CHECK(z.real() == doctest::Approx(-2.0)); // 2 / i^2
}

TEST_CASE("xi_polymer examples") {
  const Rational q(5, 2);
  CHECK(xi_polymer(complete_graph(1), q) == 1);
  CHECK(xi_polymer(complete_graph(2), q) == 1 - 1 / q);
  CHECK(xi_polymer(complete_graph(3), q) == 1 - 3 / q + 2 / (q * q));
  CHECK_THROWS_AS(xi_polymer(complete_graph(3), Rational(0)), std::domain_error);
  Limits tight;
  tight.max_polymer_vertices = 4;
  CHECK_THROWS_AS(xi_polymer(cycle_graph(5), q, tight), CapExceeded);
}

TEST_CASE("q^n xi equals the chromatic polynomial") {
  for (const auto &ng : standard_corpus()) {
    if (ng.graph.vertex_count() > 8)
      continue;
    const IntPolynomial p = chromatic_dc(ng.graph);
    for (const Rational &q : {Rational(3), Rational(-1), Rational(7, 3)})
      CHECK(detail::pow_nonneg(q, ng.graph.vertex_count()) * xi_polymer(ng.graph, q) == p.evaluate(q));
  }
}

TEST_CASE("is_bcf on the triangle") {
  const Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(is_bcf(k3, std::vector<EdgeId>{}));
  CHECK_FALSE(is_bcf(k3, std::vector<EdgeId>{0, 1}));
  CHECK(is_bcf(k3, std::vector<EdgeId>{0, 2}));
  CHECK(is_bcf(k3, std::vector<EdgeId>{1, 2}));
  CHECK_THROWS_AS(is_bcf(k3, std::vector<EdgeId>{0, 1, 2}), std::invalid_argument);
}

TEST_CASE("enumerate_bcf_forests examples") {
  CHECK(enumerate_bcf_forests(complete_graph(1)).size() == 1);
  const auto k2 = enumerate_bcf_forests(complete_graph(2));
  REQUIRE(k2.size() == 2);
  CHECK(k2[0].edges.empty());
  CHECK(k2[1].edges == std::vector<EdgeId>{0});
  const auto k3 = enumerate_bcf_forests(complete_graph(3));
  CHECK(k3.size() == 6);
  for (const ForestRecord &f : k3) {
    CHECK(f.bcf);
    CHECK(is_bcf(complete_graph(3), f.edges));
  }
  Limits tight;
  tight.max_bcf_edges = 10;
  CHECK_THROWS_AS(enumerate_bcf_forests(petersen_graph(), tight), CapExceeded);
}

TEST_CASE("forest_gf examples and brute-force counts") {
  CHECK(forest_gf(complete_graph(2)) == IntPolynomial{1, 1});
  CHECK(forest_gf(complete_graph(3)) == IntPolynomial{1, 3, 2});
  CHECK(forest_gf(Graph(3, {})) == IntPolynomial{1});
  for (const auto &ng : standard_corpus()) {
    if (ng.graph.edge_count() > 12)
      continue;
    const auto counts = oracle::bcf_forest_counts(ng.graph);
    const IntPolynomial f = forest_gf(ng.graph);
    REQUIRE(f.degree() + 1 == static_cast<long>(counts.size()));
    for (std::size_t k = 0; k < counts.size(); ++k)
      CHECK(f.coefficient(k) == counts[k]);
  }
}

TEST_CASE("chromatic_whitney examples") {
  CHECK(chromatic_whitney(complete_graph(2)) == IntPolynomial{0, -1, 1});
  CHECK(chromatic_whitney(complete_graph(3)) == IntPolynomial{0, 2, -3, 1});
  CHECK(chromatic_whitney(cycle_graph(4)) == IntPolynomial{0, -3, 6, -4, 1});
}

TEST_CASE("whitney expansion equals deletion-contraction under several orders") {
  for (const auto &ng : standard_corpus())
    for (std::uint64_t seed : {1ULL, 2ULL})
      CHECK(chromatic_whitney(apply_edge_order(ng.graph, EdgeOrder::random, seed)) == chromatic_dc(ng.graph));
}

TEST_CASE("forest_gf is independent of the edge order") {
  const Graph g = complete_bipartite(3, 3);
  const IntPolynomial base = forest_gf(g);
  for (std::uint64_t seed = 0; seed < 6; ++seed)
    CHECK(forest_gf(apply_edge_order(g, EdgeOrder::random, seed)) == base);
}

TEST_CASE("ratio_R_u examples") {
  CHECK(ratio_R_u(complete_graph(1), 0, {0.3, 0.1}) == std::complex<double>(0.0));
  const std::complex<double> z(0.2, -0.1);
  for (Vertex u : {0, 1}) {
    const std::complex<double> r = ratio_R_u(complete_graph(2), u, z);
    CHECK(r.real() == doctest::Approx(z.real()));
    CHECK(r.imag() == doctest::Approx(z.imag()));
  }
  CHECK(std::abs(ratio_R_u(complete_graph(3), 1, 0.0)) == 0.0);
  CHECK_THROWS_AS(ratio_R_u(complete_graph(2), 5, z), std::out_of_range);
}

TEST_CASE("ratio_R_u flags a vanishing denominator") {
  // On K3, F_{V-u} = F_{K2} = 1 + z vanishes at z = -1.
  CHECK_THROWS_AS(ratio_R_u(complete_graph(3), 0, {-1.0, 0.0}), SingularRatio);
}

TEST_CASE("penrose identity examples") {
  CHECK(penrose_check(complete_graph(3), mask_of({0, 1})));
  CHECK(penrose_check(complete_graph(3), mask_of({0, 1, 2})));
  CHECK(penrose_check(cycle_graph(4), mask_of({0, 1, 2, 3})));
  CHECK(count_bcf_spanning_trees(complete_graph(4)) == 6); // |coefficient of q| of P_{K4}
  CHECK(count_bcf_spanning_trees(Graph(3, {{0, 1}})) == 0);
}

TEST_CASE("vertex recursion reproduces forest_gf") {
  for (const auto &ng : standard_corpus()) {
    if (ng.graph.vertex_count() == 0 || ng.graph.edge_count() > 12)
      continue;
    const IntPolynomial whole = forest_gf(ng.graph);
    for (Vertex u = 0; u < ng.graph.vertex_count(); ++u)
      CHECK(forest_gf_by_vertex_recursion(ng.graph, u) == whole);
  }
}

TEST_CASE("anchored forest sums normalize to one") {
  std::mt19937_64 rng(9);
  const Graph g = diamond_graph();
  for (int trial = 0; trial < 20; ++trial) {
    const VertexMask subset = (rng() & 0xF) | 1;
    const VertexMask anchors = (rng() & subset) | (subset & (~subset + 1));
    CHECK(anchored_forest_sum(g, subset, anchors, Rational(2, 5)) == 1);
  }
  CHECK_THROWS_AS(anchored_forest_sum(g, 0b0011, 0b0100, Rational(1)), std::invalid_argument);
}
