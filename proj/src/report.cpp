#include "chromabound/report.hpp"

namespace chromabound {

nlohmann::ordered_json to_json(const ZeroFreeReport &report) {
  nlohmann::ordered_json j;
  j["graph_id"] = report.graph_id;
  j["delta"] = report.delta;
  if (report.girth.is_finite())
    j["girth"] = report.girth.value();
  else
    j["girth"] = "inf";
  j["C"] = report.C;
  auto roots = nlohmann::ordered_json::array();
  for (const auto &r : report.roots.roots)
    roots.push_back({r.real(), r.imag()});
  j["roots"] = std::move(roots);
  j["residuals"] = report.roots.residuals;
  j["converged"] = report.roots.converged;
  j["max_abs_root"] = report.max_abs_root;
  j["margin"] = report.margin;
  j["pass"] = report.pass;
  return j;
}

} // namespace chromabound
