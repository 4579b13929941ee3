// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <cmath>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "risvc/config_io.hpp"
#include "risvc/errors.hpp"
#include "risvc/sweep.hpp"

using namespace risvc;

namespace {

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> out;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

std::string render(const SweepSpec& spec) {
  std::ostringstream os;
  write_sweep_csv(os, run_sweep(spec));
  return os.str();
}

}  // namespace

TEST_CASE("path and axis names") {
  CHECK(parse_axis("avg_snr_db") == Axis::avg_snr_db);
  CHECK_THROWS_AS(parse_axis("snr"), ConfigError);
  const auto p = parse_paths("oracle,closed,oracle");
  CHECK(p == std::vector<SweepPath>{SweepPath::closed, SweepPath::oracle});
  CHECK_THROWS_AS(parse_paths("closed,exact"), ConfigError);
  CHECK_THROWS_AS(parse_paths(""), ConfigError);
}

TEST_CASE("spec validation") {
  SweepSpec spec;
  CHECK_THROWS_AS(spec.validate(), ConfigError);  // empty grid
  spec.grid = {0.2, 0.1};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.grid = {0.1, 0.2};
  CHECK_NOTHROW(spec.validate());
  spec.paths = {SweepPath::monte_carlo};
  spec.mc_bits = 500;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.axis = Axis::n_elements;
  spec.paths = {SweepPath::closed};
  spec.grid = {10.0, 20.5};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.axis = Axis::w_m;
  spec.grid = {0.0, 2.0};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("w_m sweep: rows, degenerate flags and trends") {
  SweepSpec spec;
  spec.grid = parse_grid("0:pi/2:9");
  spec.paths = {SweepPath::closed};
  const SweepResult r = run_sweep(spec);
  REQUIRE(r.rows.size() == 9);
  CHECK(r.rows.front().degenerate_u2);
  CHECK(r.rows.back().degenerate_u1);
  CHECK(r.rows.front().closed_u2_ideal == 0.5);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    CHECK(r.rows[i].closed_u1 >= r.rows[i - 1].closed_u1);
  }
  CHECK(std::isnan(r.rows[3].oracle_u1));

  const std::string csv = render(spec);
  const auto lines = data_lines(csv);
  REQUIRE(lines.size() == 10);
  CHECK(lines[0] == "w_m,degenerate_u1,degenerate_u2,u1_direct_only,closed_u1,closed_u2_ideal,"
                    "closed_u2_eff");
  CHECK(csv.find("# seed = 1\n") != std::string::npos);
  CHECK(csv.find("# axis = w_m\n") != std::string::npos);
}

TEST_CASE("closed and oracle together get a divergence column") {
  SweepSpec spec;
  spec.axis = Axis::avg_snr_db;
  spec.grid = {0.0, 10.0};
  spec.base.w_m = 3.0 * std::numbers::pi / 8.0;
  const SweepResult r = run_sweep(spec);
  CHECK_FALSE(r.any_diverged());
  const auto lines = data_lines(render(spec));
  CHECK(lines[0].find("oracle_u1_sum_exp,diverged") != std::string::npos);
}

TEST_CASE("user-1 agreement rule") {
  CHECK(closed_u1_consistent(1.0, 1.04, 2.0, 0.05));
  CHECK(closed_u1_consistent(1.0, 2.0, 1.005, 0.05));
  CHECK_FALSE(closed_u1_consistent(1.0, 2.0, 1.1, 0.05));
}

TEST_CASE("sweep output is byte-identical across runs and worker counts") {
  SweepSpec spec;
  spec.grid = parse_grid("0:pi/2:4");
  spec.paths = {SweepPath::closed, SweepPath::monte_carlo, SweepPath::semi_analytic};
  spec.mc_bits = 2000;
  spec.workers = 1;
  const std::string a = render(spec);
  spec.workers = 3;
  const std::string b = render(spec);
  CHECK(a == b);
  CHECK(data_lines(a).size() == 5);
}

TEST_CASE("n_elements axis") {
  SweepSpec spec;
  spec.axis = Axis::n_elements;
  spec.grid = {25.0, 50.0, 100.0};
  spec.paths = {SweepPath::closed};
  const SweepResult r = run_sweep(spec);
  CHECK(r.rows[2].closed_u1 < r.rows[1].closed_u1);
  CHECK(r.rows[1].closed_u1 < r.rows[0].closed_u1);
  CHECK(config_at(spec, 100.0).n_elements == 100);
}
