#pragma once

#include "chromabound/graph.hpp"

#include <string>
#include <vector>

namespace chromabound {

struct NamedGraph {
  std::string name;
  Graph graph;
};

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph star_graph(std::size_t leaves);
Graph petersen_graph();
Graph cube_graph();
/// K4 minus an edge.
Graph diamond_graph();

/// Small named graphs exercised by the self-checks and acceptance suite:
/// K1, K2, paths, a star, C3..C8, the diamond, K4, K_{2,3}, K_{3,3}, the
/// 3-cube and the Petersen graph.
std::vector<NamedGraph> standard_corpus();

/// One representative per isomorphism class of connected graphs on exactly n
/// vertices (n <= 7), edges in lexicographic order.
std::vector<Graph> connected_graphs(std::size_t n);

} // namespace chromabound
