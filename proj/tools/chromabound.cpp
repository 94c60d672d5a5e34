#include "chromabound/commands.hpp"
#include "chromabound/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

using namespace chromabound;

namespace {

struct RawOptions {
  std::size_t grid = 2049;
  double tol = 1e-12;
  std::string order = "input";
  std::uint64_t seed = 0;
  std::string out;
  std::string format;
};

CommandOptions resolve(const RawOptions &raw, const char *default_format) {
  CommandOptions options;
  options.maximize.grid = raw.grid;
  options.maximize.tolerance = raw.tol;
  options.order = parse_edge_order(raw.order);
  options.seed = raw.seed;
  options.format = parse_output_format(raw.format.empty() ? default_format : raw.format);
  return options;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Zero-free disks for chromatic polynomials of bounded-degree graphs"};
  app.require_subcommand(1);
  RawOptions raw;
  app.add_option("--grid", raw.grid, "grid points for maximizing over a")->check(CLI::Range(std::size_t{33}, std::size_t{1} << 24));
  app.add_option("--tol", raw.tol, "golden-section tolerance in a")->check(CLI::PositiveNumber);
  app.add_option("--order", raw.order, "edge order: input, lex or random")->check(CLI::IsMember({"input", "lex", "random"}));
  app.add_option("--seed", raw.seed, "seed for the random edge order and root start");
  app.add_option("--out", raw.out, "write output to this file instead of stdout");
  app.add_option("--format", raw.format, "csv or json (default json for verify, csv otherwise)")->check(CLI::IsMember({"csv", "json"}));

  auto *table = app.add_subcommand("table", "C(Delta,g)/Delta and K_g per (Delta,g) pair");
  std::string rows;
  table->add_option("--rows", rows, "comma-separated DELTA:G pairs (G may be inf); default is the standard ten");

  auto *sweep = app.add_subcommand("sweep", "C(Delta,g)/Delta along Delta or g");
  std::string mode;
  std::string fixed;
  unsigned from = 0;
  unsigned to = 0;
  sweep->add_option("mode", mode, "by-delta or by-g")->required()->check(CLI::IsMember({"by-delta", "by-g"}));
  sweep->add_option("--fixed", fixed, "girth (by-delta) or Delta (by-g)")->required();
  sweep->add_option("--from", from, "first value of the swept parameter")->required();
  sweep->add_option("--to", to, "last value of the swept parameter")->required();

  auto *verify = app.add_subcommand("verify", "check that all chromatic roots lie inside |q| < C(Delta,g)");
  std::string path;
  verify->add_option("path", path, "edge-list file, or DIMACS with a .col extension")->required();

  auto *selfcheck = app.add_subcommand("selfcheck", "run the invariant suites");
  std::string level = "quick";
  selfcheck->add_option("level", level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

  for (auto *sub : {table, sweep, verify, selfcheck})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream *out = &std::cout;
  if (!raw.out.empty()) {
    file = std::make_unique<std::ofstream>(raw.out);
    if (!*file) {
      std::cerr << "error: cannot open '" << raw.out << "' for writing\n";
      return kExitInput;
    }
    out = file.get();
  }

  try {
    const CommandOptions options = resolve(raw, *verify ? "json" : "csv");
    if (*table)
      return cmd_table(rows.empty() ? default_table_pairs() : parse_table_pairs(rows), options, *out);
    if (*sweep)
      return cmd_sweep(parse_sweep_mode(mode), fixed, from, to, options, *out);
    if (*verify)
      return cmd_verify(path, options, *out, std::cerr);
    return cmd_selfcheck(parse_check_level(level), options, *out);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapExceeded &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
}
