#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace chromabound {

using Vertex = std::size_t;
using EdgeId = std::size_t;

/// Vertex subsets used by the exponential enumerations; bit i is vertex i.
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskVertices = 64;

struct Edge {
  Vertex u;
  Vertex v;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  bool touches(Vertex w) const { return u == w || v == w; }
  friend bool operator==(const Edge &, const Edge &) = default;
};

/// Shortest-cycle length of a graph: a natural number >= 3, or infinity for
/// forests.
class ExtendedGirth {
public:
  static ExtendedGirth infinite() { return ExtendedGirth(); }
  static ExtendedGirth finite(unsigned value);

  bool is_finite() const { return value_ != kInfinite; }
  bool is_infinite() const { return value_ == kInfinite; }
  /// Throws std::logic_error when infinite.
  unsigned value() const;

  /// Next girth value; infinity is a fixed point.
  ExtendedGirth next() const;

  std::string to_string() const;
  /// Accepts a decimal integer >= 3 or "inf".
  static ExtendedGirth parse(const std::string &text);

  friend bool operator==(const ExtendedGirth &, const ExtendedGirth &) = default;
  friend auto operator<=>(const ExtendedGirth &, const ExtendedGirth &) = default;

private:
  static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();
  ExtendedGirth() : value_(kInfinite) {}
  explicit ExtendedGirth(unsigned v) : value_(v) {}
  unsigned value_;
};

/// BFS distance; nullopt encodes an unreachable vertex.
using Distance = std::optional<std::size_t>;

/// Simple undirected graph on dense vertex ids 0..n-1. The position of an edge
/// in edges() is its rank in the total edge order (later = larger).
class Graph {
public:
  Graph() = default;
  /// Throws std::invalid_argument on self-loops, duplicate edges or
  /// out-of-range endpoints.
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  /// Edge ids incident to v, increasing.
  std::span<const EdgeId> incident_edges(Vertex v) const { return incidence_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  std::optional<EdgeId> edge_between(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b).has_value(); }

  /// Same graph with edges listed in the given order; `order[i]` is the old id
  /// of the new edge i. Must be a permutation.
  Graph reordered(std::span<const EdgeId> order) const;

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Subgraph induced by a vertex subset. Vertices are renumbered in increasing
/// original order and edges keep their relative order.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original_vertex;
  std::vector<EdgeId> original_edge;
};

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices);
InducedSubgraph induced_subgraph(const Graph &g, VertexMask vertices);

VertexMask full_mask(std::size_t n);
/// Throws CapExceeded when the graph has more than 64 vertices.
void require_mask_capacity(const Graph &g);

std::size_t max_degree(const Graph &g);
ExtendedGirth girth(const Graph &g);
/// Throws std::out_of_range for unknown vertex ids.
Distance distance(const Graph &g, Vertex from, Vertex to);
std::vector<Distance> distances_from(const Graph &g, Vertex from);
std::size_t component_count(const Graph &g);
bool is_connected(const Graph &g);
/// Connectivity of g restricted to the vertex subset (false for empty sets).
bool is_connected_subset(const Graph &g, VertexMask vertices);

/// Throws std::out_of_range for unknown edge ids.
Graph delete_edge(const Graph &g, EdgeId e);
/// Merges the endpoints of e into the smaller one, drops the resulting loop and
/// keeps the first occurrence of each parallel pair. Vertex ids above the
/// removed endpoint shift down by one.
Graph contract_edge(const Graph &g, EdgeId e);

/// Edge orders used to exercise order-invariance.
enum class EdgeOrder { input, lexicographic, random };

EdgeOrder parse_edge_order(const std::string &text);
Graph apply_edge_order(const Graph &g, EdgeOrder order, std::uint64_t seed);

/// Calls visit(edges, vertices) once for every tree subgraph of g that contains
/// `root`, including the single-vertex tree (no edges). `edges` lists edge ids
/// in insertion order; `vertices` is the tree's vertex set.
template <class Visitor>
void for_each_subtree(const Graph &g, Vertex root, Visitor &&visit);

} // namespace chromabound

#include "chromabound/detail/subtree_enum.hpp"
