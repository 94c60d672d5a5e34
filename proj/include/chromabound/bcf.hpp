#pragma once

// Exact chromatic-polynomial machinery on concrete graphs: the
// deletion-contraction oracle, polymer activities and the polymer partition
// function, broken-circuit-free (BCF) forests and their generating function.

#include "chromabound/errors.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/limits.hpp"
#include "chromabound/polynomial.hpp"

#include <bit>
#include <complex>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace chromabound {

/// An acyclic edge subset together with its vertex support.
struct ForestRecord {
  std::vector<EdgeId> edges;
  /// Vertices covered by the non-trivial trees, increasing.
  std::vector<Vertex> support;
  bool bcf = true;

  std::size_t size() const { return edges.size(); }
};

/// Chromatic polynomial in q by deletion-contraction, memoized on a
/// refinement-based canonical labelling. Throws CapExceeded above
/// limits.max_dc_edges.
IntPolynomial chromatic_dc(const Graph &g, const Limits &limits = default_limits());

/// Sum over connected spanning subgraphs h of G|_R of (-1)^{|E(h)|}, by
/// enumerating every edge subset of G|_R. Throws std::invalid_argument when
/// |R| < 2 or G|_R is disconnected.
std::int64_t css_signed_sum(const Graph &g, VertexMask subset, const Limits &limits = default_limits());

/// Polymer activity css_signed_sum(G,R) / q^{|R|-1}. Scalar is an exact
/// rational or a complex number.
template <class Scalar>
Scalar activity(const Graph &g, VertexMask subset, const Scalar &q,
                const Limits &limits = default_limits());

/// Polymer partition function: sum over families of pairwise disjoint
/// connected subsets (each of size >= 2) of the product of their activities.
template <class Scalar>
Scalar xi_polymer(const Graph &g, const Scalar &q, const Limits &limits = default_limits());

/// True iff the forest contains no broken circuit under the graph's edge
/// order: no edge outside the forest joins two vertices of one tree while
/// being larger than every edge of the tree path between them. Throws
/// std::invalid_argument when `forest` contains a cycle or repeats an edge.
bool is_bcf(const Graph &g, std::span<const EdgeId> forest);

/// All BCF forests (the empty forest first), in depth-first order over
/// increasing edge ids. Throws CapExceeded above limits.max_bcf_edges.
std::vector<ForestRecord> enumerate_bcf_forests(const Graph &g, const Limits &limits = default_limits());

/// F_G(z): coefficient k counts BCF forests with k edges.
IntPolynomial forest_gf(const Graph &g, const Limits &limits = default_limits());

/// Broken-circuit expansion q^{|V|} F_G(-1/q) as an integer polynomial in q.
IntPolynomial chromatic_whitney(const Graph &g, const Limits &limits = default_limits());

/// Relative size below which F_{V-u}(z) is treated as zero.
inline constexpr double kSingularRatioTolerance = 1e-12;

/// R^u_G(z) = F_V(z) / F_{V-u}(z) - 1, and 0 for a single-vertex graph.
/// Throws SingularRatio when |F_{V-u}(z)| < 1e-12 (1 + |F_V(z)|).
std::complex<double> ratio_R_u(const Graph &g, Vertex u, std::complex<double> z,
                               const Limits &limits = default_limits());

/// R^u_G with F_V and F_{V-u} computed once, for evaluation at many z.
class VertexRatio {
public:
  VertexRatio(const Graph &g, Vertex u, const Limits &limits = default_limits());
  std::complex<double> operator()(std::complex<double> z) const;

private:
  IntPolynomial whole_;
  IntPolynomial rest_;
};

/// Number of BCF spanning trees of g (0 when g is disconnected).
BigInt count_bcf_spanning_trees(const Graph &g, const Limits &limits = default_limits());

/// Penrose identity on G|_R with the minimal-tree scheme:
/// css_signed_sum(G,R) == (-1)^{|R|-1} * #BCF spanning trees of G|_R.
bool penrose_check(const Graph &g, VertexMask subset, const Limits &limits = default_limits());

/// A non-trivial tree given by its edges and vertex set.
struct TreeRecord {
  std::vector<EdgeId> edges;
  VertexMask vertices = 0;
};

/// Non-trivial BCF trees of g that contain u.
std::vector<TreeRecord> bcf_trees_containing(const Graph &g, Vertex u,
                                             const Limits &limits = default_limits());

/// F_{V-u}(z) + sum over non-trivial BCF trees t containing u of
/// z^{|t|} F_{V-u-V_t}(z). Equals forest_gf(g) for every u.
IntPolynomial forest_gf_by_vertex_recursion(const Graph &g, Vertex u,
                                            const Limits &limits = default_limits());

/// Sum over BCF forests F of G|_U whose trees all meet S of
/// z^{|F|} F_{U \ (S u V_F)}(z) / F_U(z); identically 1 for non-empty S in U.
Rational anchored_forest_sum(const Graph &g, VertexMask subset, VertexMask anchors,
                             const Rational &z, const Limits &limits = default_limits());

// ---------------------------------------------------------------------------

namespace detail {

template <class Scalar>
Scalar pow_nonneg(const Scalar &base, std::size_t exp) {
  Scalar out(1);
  for (std::size_t i = 0; i < exp; ++i)
    out *= base;
  return out;
}

void require_polymer_capacity(const Graph &g, const Limits &limits);

} // namespace detail

template <class Scalar>
Scalar activity(const Graph &g, VertexMask subset, const Scalar &q, const Limits &limits) {
  if (q == Scalar(0))
    throw std::domain_error("activity is undefined at q = 0");
  const std::int64_t signed_sum = css_signed_sum(g, subset, limits);
  const std::size_t size = static_cast<std::size_t>(std::popcount(subset));
  return Scalar(static_cast<long long>(signed_sum)) / detail::pow_nonneg(q, size - 1);
}

template <class Scalar>
Scalar xi_polymer(const Graph &g, const Scalar &q, const Limits &limits) {
  if (q == Scalar(0))
    throw std::domain_error("polymer partition function is undefined at q = 0");
  detail::require_polymer_capacity(g, limits);
  // xi(S) = xi(S - v) + sum_{R : v in R, R within S} z(R) xi(S - R), where v
  // is the lowest vertex of S.
  std::unordered_map<VertexMask, Scalar> memo;
  std::unordered_map<VertexMask, Scalar> activities;
  auto solve = [&](auto &&self, VertexMask rest) -> Scalar {
    if (rest == 0)
      return Scalar(1);
    if (auto it = memo.find(rest); it != memo.end())
      return it->second;
    const VertexMask low = rest & (~rest + 1);
    const VertexMask others = rest & ~low;
    Scalar total = self(self, others);
    for (VertexMask sub = others; sub != 0; sub = (sub - 1) & others) {
      const VertexMask polymer = sub | low;
      if (!is_connected_subset(g, polymer))
        continue;
      auto act = activities.find(polymer);
      if (act == activities.end())
        act = activities.emplace(polymer, activity(g, polymer, q, limits)).first;
      total += act->second * self(self, rest & ~polymer);
    }
    memo.emplace(rest, total);
    return total;
  };
  return solve(solve, full_mask(g.vertex_count()));
}

} // namespace chromabound
