#include "chromabound/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace chromabound {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3)
    throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      edges.push_back({i, a + j});
  return Graph(a + b, std::move(edges));
}

Graph star_graph(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});         // outer cycle
    edges.push_back({i, i + 5});               // spokes
    edges.push_back({5 + i, 5 + (i + 2) % 5}); // inner pentagram
  }
  return Graph(10, std::move(edges));
}

Graph cube_graph() {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < 8; ++v)
    for (std::size_t bit = 1; bit < 8; bit <<= 1)
      if (!(v & bit))
        edges.push_back({v, v | bit});
  return Graph(8, std::move(edges));
}

Graph diamond_graph() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}); }

std::vector<NamedGraph> standard_corpus() {
  std::vector<NamedGraph> out{
      {"K1", complete_graph(1)},
      {"K2", complete_graph(2)},
      {"P3", path_graph(3)},
      {"P5", path_graph(5)},
      {"star3", star_graph(3)},
      {"K3", complete_graph(3)},
  };
  for (std::size_t n = 4; n <= 8; ++n)
    out.push_back({"C" + std::to_string(n), cycle_graph(n)});
  out.push_back({"diamond", diamond_graph()});
  out.push_back({"K4", complete_graph(4)});
  out.push_back({"K2,3", complete_bipartite(2, 3)});
  out.push_back({"K3,3", complete_bipartite(3, 3)});
  out.push_back({"cube", cube_graph()});
  out.push_back({"petersen", petersen_graph()});
  return out;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n > 7)
    throw std::invalid_argument("connected_graphs supports n <= 7");
  if (n == 0)
    return {};
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      slots.emplace_back(i, j);
  std::vector<std::vector<std::size_t>> slot_index(n, std::vector<std::size_t>(n));
  for (std::size_t s = 0; s < slots.size(); ++s) {
    slot_index[slots[s].first][slots[s].second] = s;
    slot_index[slots[s].second][slots[s].first] = s;
  }
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do
    perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint32_t> seen;
  std::vector<Graph> out;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << slots.size()); ++bits) {
    std::vector<Edge> edges;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (bits >> s & 1U)
        edges.push_back({slots[s].first, slots[s].second});
    Graph g(n, edges);
    if (!is_connected(g))
      continue;
    std::uint32_t canon = ~std::uint32_t{0};
    for (const auto &p : perms) {
      std::uint32_t image = 0;
      for (const Edge &e : edges)
        image |= std::uint32_t{1} << slot_index[p[e.u]][p[e.v]];
      canon = std::min(canon, image);
    }
    if (seen.insert(canon).second)
      out.push_back(std::move(g));
  }
  return out;
}

} // namespace chromabound
