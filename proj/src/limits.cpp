#include "chromabound/limits.hpp"

#include <cstdlib>
#include <string>

namespace chromabound {

Limits default_limits() {
  Limits limits;
  if (const char *env = std::getenv("CHROMABOUND_MAX_EDGES")) {
    try {
      std::size_t pos = 0;
      const unsigned long long cap = std::stoull(env, &pos);
      if (pos == std::string(env).size() && cap > 0) {
        limits.max_bcf_edges = cap;
        limits.max_subtree_edges = cap;
        limits.max_dc_edges = cap;
        limits.max_css_edges = cap;
      }
    } catch (const std::exception &) {
      // Unparseable values leave the defaults in place.
    }
  }
  return limits;
}

} // namespace chromabound
