#pragma once

#include "chromabound/roots.hpp"

#include <json.hpp>

namespace chromabound {

/// JSON form of a report: graph_id, delta, girth (integer or "inf"), C,
/// roots as [re, im] pairs, residuals, converged, max_abs_root, margin, pass.
nlohmann::ordered_json to_json(const ZeroFreeReport &report);

} // namespace chromabound
