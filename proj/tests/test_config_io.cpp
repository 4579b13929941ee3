// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <cmath>
#include <numbers>
#include <sstream>

#include <doctest.h>

#include "risvc/config_io.hpp"
#include "risvc/errors.hpp"

using namespace risvc;

TEST_CASE("real numbers and pi multiples") {
  CHECK(parse_real("0.25") == 0.25);
  CHECK(parse_real(" -3e2 ") == -300.0);
  CHECK(parse_real("pi") == std::numbers::pi);
  CHECK(parse_real("pi/4") == std::numbers::pi / 4.0);
  CHECK(parse_real("3pi/8") == 3.0 * std::numbers::pi / 8.0);
  CHECK(parse_real("3*pi/8") == 3.0 * std::numbers::pi / 8.0);
  CHECK_THROWS_AS(parse_real(""), ConfigError);
  CHECK_THROWS_AS(parse_real("1.5x"), ConfigError);
  CHECK_THROWS_AS(parse_real("pi/0"), ConfigError);
  CHECK_THROWS_AS(parse_real("pi*2"), ConfigError);
}

TEST_CASE("config file parsing") {
  std::istringstream in(
      "# scenario\n"
      "n_elements = 100\n"
      "rician_k = 5   # stronger LOS\n"
      "\n"
      "w_m = pi/8\n"
      "seed = 18446744073709551615\n");
  const SystemConfig cfg = parse_config(in);
  CHECK(cfg.n_elements == 100);
  CHECK(cfg.rician_k == 5.0);
  CHECK(cfg.w_m == std::numbers::pi / 8.0);
  CHECK(cfg.seed == 18446744073709551615ull);
  CHECK(cfg.l1_db == 20.0);
}

TEST_CASE("config errors name the line") {
  std::istringstream unknown("n_elements = 5\ncolour = blue\n");
  try {
    parse_config(unknown);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream no_eq("n_elements 5\n");
  CHECK_THROWS_AS(parse_config(no_eq), ConfigError);
  std::istringstream frac("n_elements = 2.5\n");
  CHECK_THROWS_AS(parse_config(frac), ConfigError);
  std::istringstream range("w_m = 2\n");
  CHECK_THROWS_AS(parse_config(range), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/risvc.cfg"), ConfigError);
}

TEST_CASE("grids") {
  const auto g = parse_grid("0:pi/2:9");
  REQUIRE(g.size() == 9);
  CHECK(g.front() == 0.0);
  CHECK(g.back() == std::numbers::pi / 2.0);
  CHECK(g[4] == doctest::Approx(std::numbers::pi / 4.0));
  CHECK(parse_grid("20:20:1") == std::vector<double>{20.0});
  CHECK_THROWS_AS(parse_grid("0:1"), ConfigError);
  CHECK_THROWS_AS(parse_grid("1:0:3"), ConfigError);
  CHECK_THROWS_AS(parse_grid("0:1:0"), ConfigError);
}

TEST_CASE("real formatting round-trips") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -0.0, 29.529241013}) {
    const std::string s = format_real(x);
    CHECK(std::stod(s) == x);
  }
  CHECK(format_real(0.5) == "0.5");
}

TEST_CASE("config header round-trips through the parser") {
  SystemConfig cfg;
  cfg.w_m = 0.3;
  cfg.seed = 42;
  cfg.series_l = 77;
  std::ostringstream os;
  write_config_header(os, cfg);
  std::string text = os.str();
  for (std::size_t p = 0; (p = text.find("# ", p)) != std::string::npos;) text.erase(p, 2);
  std::istringstream in(text);
  const SystemConfig back = parse_config(in);
  CHECK(back.w_m == cfg.w_m);
  CHECK(back.seed == 42);
  CHECK(back.series_l == 77);
}
