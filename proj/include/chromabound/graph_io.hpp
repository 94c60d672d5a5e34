#pragma once

#include "chromabound/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace chromabound {

/// A graph read from text, together with the original label of each dense
/// vertex id.
struct LoadedGraph {
  Graph graph;
  std::vector<long long> labels;
};

/// Edge-list text: one "u v" pair of non-negative integers per line, '#'
/// comments and blank lines ignored. Labels are remapped to dense ids in increasing
/// label order; edge order is line order. Throws InputError (with the
/// line number) on malformed lines, self-loops and duplicate edges.
LoadedGraph parse_edge_list(std::string_view text);

/// DIMACS .col text ("p edge n m" header, "e u v" 1-based edges, 'c' comments).
LoadedGraph parse_dimacs(std::string_view text);

/// Canonical edge-list text: one "u v" line per edge in edge order.
std::string serialize_edge_list(const Graph &g);

/// Reads a file, choosing the DIMACS reader for the ".col" extension.
LoadedGraph load_graph_file(const std::string &path);

} // namespace chromabound
