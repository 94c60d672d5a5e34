#include "chromabound/bcf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chromabound {
namespace {

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

void require_edges_within(const Graph &g, std::size_t cap, const char *what) {
  if (g.edge_count() > cap)
    throw CapExceeded(std::string(what) + ": graph has " + std::to_string(g.edge_count()) +
                      " edges, cap is " + std::to_string(cap));
}

// ---- deletion-contraction -------------------------------------------------

using CanonicalKey = std::vector<std::uint32_t>;

// Relabels vertices by iterated degree refinement (ties broken by current id)
// and returns the vertex count followed by the sorted relabelled edge list.
// Not an isomorphism invariant, but equal keys always mean equal graphs.
CanonicalKey canonical_key(const Graph &g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v)
    color[v] = g.degree(v);
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> signature(n);
    for (Vertex v = 0; v < n; ++v) {
      signature[v].first = color[v];
      for (Vertex w : g.neighbors(v))
        signature[v].second.push_back(color[w]);
      std::sort(signature[v].second.begin(), signature[v].second.end());
    }
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> rank;
    for (const auto &s : signature)
      rank.emplace(s, 0);
    std::size_t next = 0;
    for (auto &entry : rank)
      entry.second = next++;
    std::vector<std::size_t> refined(n);
    for (Vertex v = 0; v < n; ++v)
      refined[v] = rank[signature[v]];
    const bool stable = std::set<std::size_t>(refined.begin(), refined.end()).size() ==
                        std::set<std::size_t>(color.begin(), color.end()).size();
    color = std::move(refined);
    if (stable)
      break;
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(),
            [&](Vertex a, Vertex b) { return std::pair(color[a], a) < std::pair(color[b], b); });
  std::vector<std::uint32_t> label(n);
  for (std::size_t i = 0; i < n; ++i)
    label[order[i]] = static_cast<std::uint32_t>(i);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (const Edge &e : g.edges()) {
    auto a = label[e.u], b = label[e.v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  CanonicalKey key{static_cast<std::uint32_t>(n)};
  for (auto [a, b] : edges) {
    key.push_back(a);
    key.push_back(b);
  }
  return key;
}

class DeletionContraction {
public:
  IntPolynomial solve(const Graph &g) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    const std::size_t components = component_count(g);
    if (m + components == n) // forest: q^c (q-1)^m
      return IntPolynomial::monomial(components) * power(IntPolynomial{-1, 1}, m);
    CanonicalKey key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    // Delete/contract an edge at a vertex of maximum degree; contraction there
    // removes the most parallel pairs.
    Vertex hub = 0;
    for (Vertex v = 1; v < n; ++v)
      if (g.degree(v) > g.degree(hub))
        hub = v;
    const EdgeId e = g.incident_edges(hub).front();
    IntPolynomial result = solve(delete_edge(g, e)) - solve(contract_edge(g, e));
    memo_.emplace(std::move(key), result);
    return result;
  }

private:
  std::map<CanonicalKey, IntPolynomial> memo_;
};

// ---- forests ----------------------------------------------------------------

// Largest edge id on the forest path between x and y, or nullopt when they lie
// in different trees. `forest_adj[v]` lists (neighbor, edge id) pairs.
std::optional<EdgeId> path_maximum(const std::vector<std::vector<std::pair<Vertex, EdgeId>>> &forest_adj,
                                   Vertex x, Vertex y) {
  if (x == y)
    return std::nullopt;
  struct Frame {
    Vertex v;
    Vertex parent;
    EdgeId best;
  };
  std::vector<Frame> stack{{x, x, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    for (auto [w, e] : forest_adj[f.v]) {
      if (w == f.parent)
        continue;
      EdgeId best = f.v == x ? e : std::max(f.best, e);
      if (w == y)
        return best;
      stack.push_back({w, f.v, best});
    }
  }
  return std::nullopt;
}

bool contains_broken_circuit(const Graph &g, std::span<const EdgeId> forest,
                             const std::vector<char> &in_forest) {
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> adj(g.vertex_count());
  UnionFind uf(g.vertex_count());
  for (EdgeId e : forest) {
    const Edge &ed = g.edge(e);
    adj[ed.u].emplace_back(ed.v, e);
    adj[ed.v].emplace_back(ed.u, e);
    uf.unite(ed.u, ed.v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in_forest[e])
      continue;
    const Edge &ed = g.edge(e);
    if (uf.find(ed.u) != uf.find(ed.v))
      continue;
    auto top = path_maximum(adj, ed.u, ed.v);
    if (top && e > *top)
      return true;
  }
  return false;
}

std::vector<Vertex> support_of(const Graph &g, std::span<const EdgeId> forest) {
  std::vector<char> mark(g.vertex_count(), 0);
  for (EdgeId e : forest) {
    mark[g.edge(e).u] = 1;
    mark[g.edge(e).v] = 1;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (mark[v])
      out.push_back(v);
  return out;
}

// Depth-first over increasing edge ids. Supersets of a forest holding a cycle
// or a broken circuit inherit it, so those branches are cut.
template <class Visit>
void visit_bcf_forests(const Graph &g, Visit &&visit) {
  std::vector<EdgeId> current;
  std::vector<char> in_forest(g.edge_count(), 0);
  auto recurse = [&](auto &&self, EdgeId start, UnionFind uf) -> void {
    visit(current, in_forest);
    for (EdgeId e = start; e < g.edge_count(); ++e) {
      UnionFind next = uf;
      if (!next.unite(g.edge(e).u, g.edge(e).v))
        continue;
      current.push_back(e);
      in_forest[e] = 1;
      if (!contains_broken_circuit(g, current, in_forest))
        self(self, e + 1, std::move(next));
      in_forest[e] = 0;
      current.pop_back();
    }
  };
  recurse(recurse, 0, UnionFind(g.vertex_count()));
}

} // namespace

namespace detail {

void require_polymer_capacity(const Graph &g, const Limits &limits) {
  if (g.vertex_count() > limits.max_polymer_vertices)
    throw CapExceeded("polymer enumeration: graph has " + std::to_string(g.vertex_count()) +
                      " vertices, cap is " + std::to_string(limits.max_polymer_vertices));
  require_mask_capacity(g);
}

} // namespace detail

IntPolynomial chromatic_dc(const Graph &g, const Limits &limits) {
  require_edges_within(g, limits.max_dc_edges, "deletion-contraction");
  DeletionContraction dc;
  return dc.solve(g);
}

std::int64_t css_signed_sum(const Graph &g, VertexMask subset, const Limits &limits) {
  require_mask_capacity(g);
  if (std::popcount(subset) < 2)
    throw std::invalid_argument("polymer needs at least two vertices");
  if ((subset & ~full_mask(g.vertex_count())) != 0)
    throw std::invalid_argument("polymer contains unknown vertices");
  if (!is_connected_subset(g, subset))
    throw std::invalid_argument("polymer is not connected");
  const InducedSubgraph sub = induced_subgraph(g, subset);
  const Graph &h = sub.graph;
  require_edges_within(h, limits.max_css_edges, "connected spanning subgraph enumeration");
  const std::size_t m = h.edge_count();
  const std::size_t n = h.vertex_count();
  std::int64_t total = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    if (static_cast<std::size_t>(std::popcount(bits)) + 1 < n)
      continue;
    UnionFind uf(n);
    std::size_t merged = 0;
    for (EdgeId e = 0; e < m; ++e)
      if (bits >> e & 1U)
        merged += uf.unite(h.edge(e).u, h.edge(e).v) ? 1 : 0;
    if (merged + 1 == n)
      total += (std::popcount(bits) % 2 == 0) ? 1 : -1;
  }
  return total;
}

bool is_bcf(const Graph &g, std::span<const EdgeId> forest) {
  std::vector<char> in_forest(g.edge_count(), 0);
  UnionFind uf(g.vertex_count());
  for (EdgeId e : forest) {
    if (e >= g.edge_count())
      throw std::invalid_argument("unknown edge " + std::to_string(e));
    if (in_forest[e])
      throw std::invalid_argument("edge " + std::to_string(e) + " listed twice");
    in_forest[e] = 1;
    if (!uf.unite(g.edge(e).u, g.edge(e).v))
      throw std::invalid_argument("edge set contains a cycle");
  }
  return !contains_broken_circuit(g, forest, in_forest);
}

std::vector<ForestRecord> enumerate_bcf_forests(const Graph &g, const Limits &limits) {
  require_edges_within(g, limits.max_bcf_edges, "BCF forest enumeration");
  std::vector<ForestRecord> out;
  visit_bcf_forests(g, [&](const std::vector<EdgeId> &forest, const std::vector<char> &) {
    out.push_back({forest, support_of(g, forest), true});
  });
  return out;
}

IntPolynomial forest_gf(const Graph &g, const Limits &limits) {
  require_edges_within(g, limits.max_bcf_edges, "BCF forest enumeration");
  std::vector<BigInt> counts(g.vertex_count() + 1);
  visit_bcf_forests(g, [&](const std::vector<EdgeId> &forest, const std::vector<char> &) {
    counts[forest.size()] += 1;
  });
  return IntPolynomial(std::move(counts));
}

IntPolynomial chromatic_whitney(const Graph &g, const Limits &limits) {
  const IntPolynomial f = forest_gf(g, limits);
  const std::size_t n = g.vertex_count();
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt c = f.coefficient(k);
    coeffs[n - k] = (k % 2 == 0) ? c : BigInt(-c);
  }
  return IntPolynomial(std::move(coeffs));
}

VertexRatio::VertexRatio(const Graph &g, Vertex u, const Limits &limits) {
  if (u >= g.vertex_count())
    throw std::out_of_range("unknown vertex " + std::to_string(u));
  if (g.vertex_count() == 1)
    return;
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (v != u)
      rest.push_back(v);
  whole_ = forest_gf(g, limits);
  rest_ = forest_gf(induced_subgraph(g, rest).graph, limits);
}

std::complex<double> VertexRatio::operator()(std::complex<double> z) const {
  if (whole_.is_zero())
    return 0.0;
  const std::complex<double> numerator = whole_.evaluate(z);
  const std::complex<double> denominator = rest_.evaluate(z);
  if (std::abs(denominator) < kSingularRatioTolerance * (1.0 + std::abs(numerator)))
    throw SingularRatio("F_{V-u}(z) vanishes numerically at z = (" + std::to_string(z.real()) + ", " +
                        std::to_string(z.imag()) + ")");
  return numerator / denominator - 1.0;
}

std::complex<double> ratio_R_u(const Graph &g, Vertex u, std::complex<double> z, const Limits &limits) {
  return VertexRatio(g, u, limits)(z);
}

BigInt count_bcf_spanning_trees(const Graph &g, const Limits &limits) {
  require_edges_within(g, limits.max_bcf_edges, "BCF forest enumeration");
  if (g.vertex_count() == 0 || !is_connected(g))
    return 0;
  BigInt count = 0;
  visit_bcf_forests(g, [&](const std::vector<EdgeId> &forest, const std::vector<char> &) {
    if (forest.size() + 1 == g.vertex_count())
      count += 1;
  });
  return count;
}

bool penrose_check(const Graph &g, VertexMask subset, const Limits &limits) {
  const std::int64_t lhs = css_signed_sum(g, subset, limits);
  const BigInt trees = count_bcf_spanning_trees(induced_subgraph(g, subset).graph, limits);
  const BigInt rhs = (std::popcount(subset) % 2 == 1) ? trees : BigInt(-trees);
  return BigInt(lhs) == rhs;
}

std::vector<TreeRecord> bcf_trees_containing(const Graph &g, Vertex u, const Limits &limits) {
  require_mask_capacity(g);
  require_edges_within(g, limits.max_subtree_edges, "subtree enumeration");
  std::vector<TreeRecord> out;
  for_each_subtree(g, u, [&](const std::vector<EdgeId> &edges, const std::vector<Vertex> &vertices) {
    if (edges.empty() || !is_bcf(g, edges))
      return;
    TreeRecord t;
    t.edges = edges;
    std::sort(t.edges.begin(), t.edges.end());
    for (Vertex v : vertices)
      t.vertices |= VertexMask{1} << v;
    out.push_back(std::move(t));
  });
  return out;
}

IntPolynomial forest_gf_by_vertex_recursion(const Graph &g, Vertex u, const Limits &limits) {
  require_mask_capacity(g);
  const VertexMask all = full_mask(g.vertex_count());
  const VertexMask without_u = all & ~(VertexMask{1} << u);
  std::map<VertexMask, IntPolynomial> cache;
  auto f_of = [&](VertexMask mask) -> const IntPolynomial & {
    auto it = cache.find(mask);
    if (it == cache.end())
      it = cache.emplace(mask, forest_gf(induced_subgraph(g, mask).graph, limits)).first;
    return it->second;
  };
  IntPolynomial total = f_of(without_u);
  for (const TreeRecord &t : bcf_trees_containing(g, u, limits))
    total += IntPolynomial::monomial(t.edges.size()) * f_of(all & ~t.vertices);
  return total;
}

Rational anchored_forest_sum(const Graph &g, VertexMask subset, VertexMask anchors, const Rational &z,
                             const Limits &limits) {
  require_mask_capacity(g);
  if (anchors == 0 || (anchors & ~subset) != 0)
    throw std::invalid_argument("anchor set must be a non-empty subset of U");
  const InducedSubgraph sub = induced_subgraph(g, subset);
  const Graph &h = sub.graph;
  VertexMask local_anchors = 0;
  for (Vertex i = 0; i < h.vertex_count(); ++i)
    if (anchors >> sub.original_vertex[i] & 1U)
      local_anchors |= VertexMask{1} << i;

  std::map<VertexMask, Rational> f_at_z;
  auto f_of = [&](VertexMask local) -> const Rational & {
    auto it = f_at_z.find(local);
    if (it == f_at_z.end())
      it = f_at_z.emplace(local, forest_gf(induced_subgraph(h, local).graph, limits).evaluate(z)).first;
    return it->second;
  };
  const VertexMask all = full_mask(h.vertex_count());
  const Rational denominator = f_of(all);
  if (denominator == 0)
    throw std::domain_error("F_U(z) = 0");

  Rational total = 0;
  for (const ForestRecord &forest : enumerate_bcf_forests(h, limits)) {
    UnionFind uf(h.vertex_count());
    for (EdgeId e : forest.edges)
      uf.unite(h.edge(e).u, h.edge(e).v);
    VertexMask touched_roots = 0;
    VertexMask support = 0;
    for (Vertex v : forest.support) {
      support |= VertexMask{1} << v;
      if (local_anchors >> v & 1U)
        touched_roots |= VertexMask{1} << uf.find(v);
    }
    bool every_tree_anchored = true;
    for (Vertex v : forest.support)
      if (!(touched_roots >> uf.find(v) & 1U))
        every_tree_anchored = false;
    if (!every_tree_anchored)
      continue;
    Rational term = detail::pow_nonneg(z, forest.size()) * f_of(all & ~(local_anchors | support));
    total += term;
  }
  return total / denominator;
}

} // namespace chromabound
