#pragma once

#include <cstddef>

namespace chromabound {

/// Size caps for the exponential algorithms.
struct Limits {
  std::size_t max_bcf_edges = 20;
  std::size_t max_polymer_vertices = 12;
  std::size_t max_subtree_edges = 18;
  std::size_t max_dc_edges = 32;
  std::size_t max_css_edges = 24;
};

/// Defaults, with every edge cap replaced by CHROMABOUND_MAX_EDGES when that
/// variable holds a positive integer.
Limits default_limits();

} // namespace chromabound
