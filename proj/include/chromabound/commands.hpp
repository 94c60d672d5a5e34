#pragma once

// Subcommand bodies for the chromabound executable. Each returns the process
// exit code and writes its output to `out`.

#include "chromabound/bound.hpp"
#include "chromabound/graph.hpp"
#include "chromabound/limits.hpp"
#include "chromabound/selfcheck.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace chromabound {

enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitInput = 2, kExitCap = 3 };

enum class OutputFormat { csv, json };
OutputFormat parse_output_format(const std::string &text);

struct CommandOptions {
  MaximizeOptions maximize{};
  EdgeOrder order = EdgeOrder::input;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::csv;
  Limits limits = default_limits();
};

struct TablePair {
  unsigned delta;
  ExtendedGirth girth;
};

/// The ten (Delta, g) pairs of the standard comparison table.
std::vector<TablePair> default_table_pairs();
/// "D:g" items separated by commas, g an integer >= 3 or "inf".
std::vector<TablePair> parse_table_pairs(const std::string &text);

struct TableRow {
  TablePair pair;
  BoundResult bound;
  /// Empty for g = inf.
  std::optional<double> k_g;
};

TableRow compute_table_row(const TablePair &pair, const MaximizeOptions &maximize);

/// %.9g, with "inf" for +infinity.
std::string format_number(double value);

int cmd_table(const std::vector<TablePair> &pairs, const CommandOptions &options, std::ostream &out);

enum class SweepMode { by_delta, by_g };
SweepMode parse_sweep_mode(const std::string &text);

/// Sweeps over at most this many parameter values.
inline constexpr unsigned kMaxSweepPoints = 10000;

/// by_delta: `fixed` is the girth (integer or "inf"), Delta runs over [from, to].
/// by_g: `fixed` is Delta, g runs over [from, to]. An empty range prints the header only.
int cmd_sweep(SweepMode mode, const std::string &fixed, unsigned from, unsigned to, const CommandOptions &options,
              std::ostream &out);

int cmd_verify(const std::string &path, const CommandOptions &options, std::ostream &out, std::ostream &err);

int cmd_selfcheck(CheckLevel level, const CommandOptions &options, std::ostream &out);

} // namespace chromabound
