#include "chromabound/commands.hpp"

#include "chromabound/errors.hpp"
#include "chromabound/graph_io.hpp"
#include "chromabound/report.hpp"
#include "chromabound/roots.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace chromabound {
namespace {

unsigned parse_unsigned(const std::string &text, const char *what) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception &) {
    throw InputError(std::string("invalid ") + what + " '" + text + "'");
  }
  if (pos != text.size() || text.empty() || text[0] == '-' || v > 1000000000UL)
    throw InputError(std::string("invalid ") + what + " '" + text + "'");
  return static_cast<unsigned>(v);
}

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v))
    return v;
  return nullptr;
}

} // namespace

OutputFormat parse_output_format(const std::string &text) {
  if (text == "csv")
    return OutputFormat::csv;
  if (text == "json")
    return OutputFormat::json;
  throw InputError("unknown format '" + text + "' (expected csv or json)");
}

std::vector<TablePair> default_table_pairs() {
  auto g = [](unsigned v) { return ExtendedGirth::finite(v); };
  return {{3, g(3)}, {4, g(3)}, {5, g(3)}, {6, g(3)}, {20, g(3)},
          {3, g(4)}, {3, g(5)}, {3, g(10)}, {3, g(25)}, {3, g(100)}};
}

std::vector<TablePair> parse_table_pairs(const std::string &text) {
  std::vector<TablePair> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw InputError("row '" + item + "' is not of the form DELTA:G");
    const unsigned delta = parse_unsigned(item.substr(0, colon), "Delta");
    if (delta == 0)
      throw InputError("Delta must be >= 1");
    out.push_back({delta, ExtendedGirth::parse(item.substr(colon + 1))});
  }
  return out;
}

TableRow compute_table_row(const TablePair &pair, const MaximizeOptions &maximize) {
  TableRow row{pair, c_delta_g(pair.delta, pair.girth, maximize), std::nullopt};
  if (pair.girth.is_finite())
    row.k_g = k_g_jpr(pair.girth.value(), maximize);
  return row;
}

std::string format_number(double value) {
  if (std::isinf(value))
    return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

int cmd_table(const std::vector<TablePair> &pairs, const CommandOptions &options, std::ostream &out) {
  std::vector<TableRow> rows;
  rows.reserve(pairs.size());
  for (const TablePair &pair : pairs)
    rows.push_back(compute_table_row(pair, options.maximize));

  if (options.format == OutputFormat::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const TableRow &row : rows) {
      nlohmann::ordered_json j;
      j["delta"] = row.pair.delta;
      if (row.pair.girth.is_finite())
        j["g"] = row.pair.girth.value();
      else
        j["g"] = "inf";
      j["a_star"] = row.bound.a_star;
      j["b_star"] = number_or_null(row.bound.b_star);
      j["c_over_delta"] = row.bound.C_over_delta;
      j["k_g"] = row.k_g ? nlohmann::ordered_json(*row.k_g) : nlohmann::ordered_json(nullptr);
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }

  out << "delta,g,a_star,b_star,c_over_delta,k_g\n";
  for (const TableRow &row : rows) {
    out << row.pair.delta << ',' << row.pair.girth.to_string() << ',' << format_number(row.bound.a_star) << ','
        << format_number(row.bound.b_star) << ',' << format_number(row.bound.C_over_delta) << ',';
    if (row.k_g)
      out << format_number(*row.k_g);
    out << '\n';
  }
  return kExitOk;
}

SweepMode parse_sweep_mode(const std::string &text) {
  if (text == "by-delta")
    return SweepMode::by_delta;
  if (text == "by-g")
    return SweepMode::by_g;
  throw InputError("unknown sweep mode '" + text + "' (expected by-delta or by-g)");
}

int cmd_sweep(SweepMode mode, const std::string &fixed, unsigned from, unsigned to, const CommandOptions &options,
              std::ostream &out) {
  const bool by_delta = mode == SweepMode::by_delta;
  ExtendedGirth fixed_girth = ExtendedGirth::infinite();
  unsigned fixed_delta = 0;
  if (by_delta) {
    fixed_girth = ExtendedGirth::parse(fixed);
    if (from == 0 && to >= from)
      throw InputError("Delta range must start at 1 or above");
  } else {
    fixed_delta = parse_unsigned(fixed, "Delta");
    if (fixed_delta == 0)
      throw InputError("Delta must be >= 1");
    if (from < 3 && to >= from)
      throw InputError("girth range must start at 3 or above");
  }
  if (to >= from && to - from >= kMaxSweepPoints)
    throw CapExceeded("sweep range has more than " + std::to_string(kMaxSweepPoints) + " points");

  std::vector<std::pair<unsigned, double>> rows;
  for (unsigned v = from; v <= to && to >= from; ++v) {
    const BoundResult r = by_delta ? c_delta_g(v, fixed_girth, options.maximize)
                                   : c_delta_g(fixed_delta, ExtendedGirth::finite(v), options.maximize);
    rows.emplace_back(v, r.C_over_delta);
    if (v == to)
      break;
  }

  const char *column = by_delta ? "delta" : "g";
  if (options.format == OutputFormat::json) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto &[v, c] : rows)
      arr.push_back({{column, v}, {"c_over_delta", c}});
    out << arr.dump(2) << '\n';
    return kExitOk;
  }
  out << column << ",c_over_delta\n";
  for (const auto &[v, c] : rows)
    out << v << ',' << format_number(c) << '\n';
  return kExitOk;
}

int cmd_verify(const std::string &path, const CommandOptions &options, std::ostream &out, std::ostream &err) {
  try {
    const LoadedGraph loaded = load_graph_file(path);
    if (loaded.graph.edge_count() == 0)
      throw InputError("graph in '" + path + "' has no edges");
    const Graph g = apply_edge_order(loaded.graph, options.order, options.seed);
    RootOptions root_options;
    root_options.seed = options.seed;
    const ZeroFreeReport report =
        verify_zero_free(g, std::filesystem::path(path).stem().string(), options.limits, options.maximize, root_options);
    if (options.format == OutputFormat::json) {
      out << to_json(report).dump(2) << '\n';
    } else {
      out << "graph_id,delta,g,C,max_abs_root,margin,pass\n"
          << report.graph_id << ',' << report.delta << ',' << report.girth.to_string() << ','
          << format_number(report.C) << ',' << format_number(report.max_abs_root) << ','
          << format_number(report.margin) << ',' << (report.pass ? "true" : "false") << '\n';
    }
    return report.pass ? kExitOk : kExitFail;
  } catch (const InputError &e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << '\n';
    return kExitCap;
  }
}

int cmd_selfcheck(CheckLevel level, const CommandOptions &options, std::ostream &out) {
  SelfcheckConfig config;
  config.level = level;
  config.limits = options.limits;
  config.maximize = options.maximize;
  config.seed = options.seed == 0 ? 1 : options.seed;
  bool all = true;
  for (const CheckResult &r : run_selfcheck(config)) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
    if (!r.pass)
      out << ": " << r.detail;
    out << '\n';
    all = all && r.pass;
  }
  out << (all ? "selfcheck passed" : "selfcheck FAILED") << '\n';
  return all ? kExitOk : kExitFail;
}

} // namespace chromabound
