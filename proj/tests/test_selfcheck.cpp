#include "chromabound/corpus.hpp"
#include "chromabound/errors.hpp"
#include "chromabound/selfcheck.hpp"

#include <doctest.h>

#include <algorithm>

using namespace chromabound;

TEST_CASE("check level parsing") {
  CHECK(parse_check_level("quick") == CheckLevel::quick);
  CHECK(parse_check_level("full") == CheckLevel::full);
  CHECK_THROWS_AS(parse_check_level("medium"), InputError);
}

TEST_CASE("b_grid endpoints") {
  const auto grid = b_grid(3, 10);
  REQUIRE(grid.size() == 10);
  CHECK(grid.front() > 1.0);
  CHECK(grid.back() < rho_delta(3));
  CHECK(grid.back() > rho_delta(3) * (1 - 1e-8));
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(b_grid(2, 4).back() == doctest::Approx(64.0));
}

TEST_CASE("geodesic counts") {
  const auto c4 = geodesic_counts(cycle_graph(4), 0);
  CHECK(c4 == std::vector<std::uint64_t>{1, 1, 2, 1});
  const auto cube = geodesic_counts(cube_graph(), 0);
  CHECK(*std::max_element(cube.begin(), cube.end()) == 6);
  const auto split = geodesic_counts(Graph(3, {{0, 1}}), 0);
  CHECK(split[2] == 0);
}

TEST_CASE("quick selfcheck passes") {
  SelfcheckConfig config;
  config.maximize.grid = 257;
  for (const CheckResult &r : run_selfcheck(config)) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.pass);
    CHECK(r.cases > 0);
  }
}

TEST_CASE("a corrupted path factor is caught") {
  SelfcheckConfig config;
  config.maximize.grid = 257;
  config.path_factor = [](unsigned delta, Distance d, double b) { return -f_d_delta(delta, d, b); };
  bool caught = false;
  for (const CheckResult &r : run_selfcheck(config))
    if (r.name == "subtree_bound_pair")
      caught = !r.pass;
  CHECK(caught);
}
