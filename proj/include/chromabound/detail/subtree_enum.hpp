#pragma once

// Implementation of chromabound::for_each_subtree; included from graph.hpp.

#include <vector>

namespace chromabound::detail {

template <class Visitor>
void grow_subtrees(const Graph &g, std::vector<EdgeId> &edges, std::vector<char> &in_tree,
                   std::vector<Vertex> &vertices, const std::vector<EdgeId> &candidates,
                   Visitor &visit) {
  visit(static_cast<const std::vector<EdgeId> &>(edges),
        static_cast<const std::vector<Vertex> &>(vertices));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const EdgeId e = candidates[i];
    const Edge &ed = g.edge(e);
    const Vertex w = in_tree[ed.u] ? ed.v : ed.u;
    // Candidates before i are excluded in this branch; those after i stay
    // available unless they now close a cycle through w.
    std::vector<EdgeId> next;
    next.reserve(candidates.size() - i + g.degree(w));
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (!g.edge(candidates[j]).touches(w))
        next.push_back(candidates[j]);
    for (EdgeId f : g.incident_edges(w))
      if (!in_tree[g.edge(f).other(w)])
        next.push_back(f);
    in_tree[w] = 1;
    edges.push_back(e);
    vertices.push_back(w);
    grow_subtrees(g, edges, in_tree, vertices, next, visit);
    vertices.pop_back();
    edges.pop_back();
    in_tree[w] = 0;
  }
}

} // namespace chromabound::detail

namespace chromabound {

template <class Visitor>
void for_each_subtree(const Graph &g, Vertex root, Visitor &&visit) {
  std::vector<char> in_tree(g.vertex_count(), 0);
  in_tree.at(root) = 1;
  std::vector<EdgeId> edges;
  std::vector<Vertex> vertices{root};
  std::vector<EdgeId> candidates(g.incident_edges(root).begin(), g.incident_edges(root).end());
  detail::grow_subtrees(g, edges, in_tree, vertices, candidates, visit);
}

} // namespace chromabound
