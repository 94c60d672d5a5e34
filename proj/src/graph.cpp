#include "chromabound/graph.hpp"

#include "chromabound/errors.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

namespace chromabound {

ExtendedGirth ExtendedGirth::finite(unsigned value) {
  if (value < 3 || value == kInfinite)
    throw std::invalid_argument("girth must be >= 3, got " + std::to_string(value));
  return ExtendedGirth(value);
}

unsigned ExtendedGirth::value() const {
  if (is_infinite())
    throw std::logic_error("infinite girth has no finite value");
  return value_;
}

ExtendedGirth ExtendedGirth::next() const {
  if (is_infinite())
    return *this;
  return finite(value_ + 1);
}

std::string ExtendedGirth::to_string() const {
  return is_infinite() ? std::string("inf") : std::to_string(value_);
}

ExtendedGirth ExtendedGirth::parse(const std::string &text) {
  if (text == "inf")
    return infinite();
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception &) {
    throw InputError("invalid girth '" + text + "'");
  }
  if (pos != text.size() || v < 3 || v >= kInfinite)
    throw InputError("invalid girth '" + text + "' (expected integer >= 3 or 'inf')");
  return finite(static_cast<unsigned>(v));
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(vertex_count), incidence_(vertex_count) {
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    if (u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge " + std::to_string(e) + " has an endpoint outside 0.." +
                                  std::to_string(vertex_count));
    if (u == v)
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (std::find(adjacency_[u].begin(), adjacency_[u].end(), v) != adjacency_[u].end())
      throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "}");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
  }
}

std::optional<EdgeId> Graph::edge_between(Vertex a, Vertex b) const {
  for (EdgeId e : incidence_.at(a))
    if (edges_[e].other(a) == b)
      return e;
  return std::nullopt;
}

Graph Graph::reordered(std::span<const EdgeId> order) const {
  if (order.size() != edges_.size())
    throw std::invalid_argument("edge order must list every edge exactly once");
  std::vector<char> seen(edges_.size(), 0);
  std::vector<Edge> out;
  out.reserve(order.size());
  for (EdgeId e : order) {
    if (e >= edges_.size() || seen[e])
      throw std::invalid_argument("edge order is not a permutation");
    seen[e] = 1;
    out.push_back(edges_[e]);
  }
  return Graph(vertex_count(), std::move(out));
}

VertexMask full_mask(std::size_t n) {
  if (n > kMaxMaskVertices)
    throw CapExceeded("vertex subsets are limited to 64 vertices");
  return n == kMaxMaskVertices ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

void require_mask_capacity(const Graph &g) {
  if (g.vertex_count() > kMaxMaskVertices)
    throw CapExceeded("graph has " + std::to_string(g.vertex_count()) +
                      " vertices; subset enumeration supports at most 64");
}

InducedSubgraph induced_subgraph(const Graph &g, std::span<const Vertex> vertices) {
  std::vector<std::size_t> new_id(g.vertex_count(), g.vertex_count());
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    new_id.at(sorted[i]) = i;
  InducedSubgraph out;
  out.original_vertex = sorted;
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    if (new_id[u] < sorted.size() && new_id[v] < sorted.size()) {
      edges.push_back({new_id[u], new_id[v]});
      out.original_edge.push_back(e);
    }
  }
  out.graph = Graph(sorted.size(), std::move(edges));
  return out;
}

InducedSubgraph induced_subgraph(const Graph &g, VertexMask vertices) {
  std::vector<Vertex> list;
  for (Vertex v = 0; v < g.vertex_count() && v < kMaxMaskVertices; ++v)
    if (vertices >> v & 1U)
      list.push_back(v);
  return induced_subgraph(g, list);
}

std::size_t max_degree(const Graph &g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, g.degree(v));
  return best;
}

std::vector<Distance> distances_from(const Graph &g, Vertex from) {
  if (from >= g.vertex_count())
    throw std::out_of_range("unknown vertex " + std::to_string(from));
  std::vector<Distance> dist(g.vertex_count());
  std::queue<Vertex> queue;
  dist[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (!dist[w]) {
        dist[w] = *dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

Distance distance(const Graph &g, Vertex from, Vertex to) {
  if (to >= g.vertex_count())
    throw std::out_of_range("unknown vertex " + std::to_string(to));
  return distances_from(g, from)[to];
}

ExtendedGirth girth(const Graph &g) {
  // BFS from every vertex; a non-tree edge (v,w) closes a cycle of length at
  // most dist(v)+dist(w)+1, and the minimum over all roots is exact.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max());
    std::queue<Vertex> queue;
    dist[root] = 0;
    parent[root] = root;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (2 * dist[v] + 1 >= best)
        break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == std::numeric_limits<std::size_t>::max()) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max())
    return ExtendedGirth::infinite();
  return ExtendedGirth::finite(static_cast<unsigned>(best));
}

std::size_t component_count(const Graph &g) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen[s])
      continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return count;
}

bool is_connected(const Graph &g) { return component_count(g) <= 1; }

bool is_connected_subset(const Graph &g, VertexMask vertices) {
  if (vertices == 0)
    return false;
  const Vertex start = static_cast<Vertex>(std::countr_zero(vertices));
  VertexMask reached = VertexMask{1} << start;
  std::vector<Vertex> stack{start};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      VertexMask bit = VertexMask{1} << w;
      if ((vertices & bit) && !(reached & bit)) {
        reached |= bit;
        stack.push_back(w);
      }
    }
  }
  return reached == vertices;
}

Graph delete_edge(const Graph &g, EdgeId e) {
  if (e >= g.edge_count())
    throw std::out_of_range("unknown edge " + std::to_string(e));
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (EdgeId f = 0; f < g.edge_count(); ++f)
    if (f != e)
      edges.push_back(g.edge(f));
  return Graph(g.vertex_count(), std::move(edges));
}

Graph contract_edge(const Graph &g, EdgeId e) {
  if (e >= g.edge_count())
    throw std::out_of_range("unknown edge " + std::to_string(e));
  const Vertex keep = std::min(g.edge(e).u, g.edge(e).v);
  const Vertex drop = std::max(g.edge(e).u, g.edge(e).v);
  auto relabel = [&](Vertex v) {
    if (v == drop)
      return keep;
    return v > drop ? v - 1 : v;
  };
  const std::size_t n = g.vertex_count() - 1;
  std::vector<std::vector<char>> present(n, std::vector<char>(n, 0));
  std::vector<Edge> edges;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == e)
      continue;
    Vertex a = relabel(g.edge(f).u);
    Vertex b = relabel(g.edge(f).v);
    if (a == b || present[a][b])
      continue;
    present[a][b] = present[b][a] = 1;
    edges.push_back({a, b});
  }
  return Graph(n, std::move(edges));
}

EdgeOrder parse_edge_order(const std::string &text) {
  if (text == "input")
    return EdgeOrder::input;
  if (text == "lex")
    return EdgeOrder::lexicographic;
  if (text == "random")
    return EdgeOrder::random;
  throw InputError("unknown edge order '" + text + "' (expected input, lex or random)");
}

Graph apply_edge_order(const Graph &g, EdgeOrder order, std::uint64_t seed) {
  std::vector<EdgeId> perm(g.edge_count());
  std::iota(perm.begin(), perm.end(), EdgeId{0});
  switch (order) {
  case EdgeOrder::input:
    return g;
  case EdgeOrder::lexicographic: {
    auto key = [&](EdgeId e) {
      auto [u, v] = g.edge(e);
      return std::pair(std::min(u, v), std::max(u, v));
    };
    std::sort(perm.begin(), perm.end(), [&](EdgeId a, EdgeId b) { return key(a) < key(b); });
    break;
  }
  case EdgeOrder::random: {
    // Fisher-Yates with mt19937_64 directly, so the order does not depend on
    // the standard library's shuffle/distribution implementation.
    std::mt19937_64 rng(seed);
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(perm[i - 1], perm[j]);
    }
    break;
  }
  }
  return g.reordered(perm);
}

} // namespace chromabound
