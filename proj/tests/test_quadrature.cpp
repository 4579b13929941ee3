// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "risvc/errors.hpp"
#include "risvc/quadrature.hpp"

using namespace risvc;

TEST_CASE("finite interval: polynomial and smooth integrands") {
  const auto r = quad::integrate([](double x) { return x * x * x; }, 0.0, 2.0);
  CHECK(r.value == doctest::Approx(4.0).epsilon(1e-14));
  const auto s = quad::integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
  CHECK(s.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("breakpoints help a kink") {
  auto f = [](double x) { return std::abs(x - 0.3); };
  const std::vector<double> breaks{0.3};
  const auto r = quad::integrate(f, 0.0, 1.0, breaks);
  CHECK(r.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-14));
}

TEST_CASE("semi-infinite: Gaussian and exponential tails") {
  const auto g = quad::integrate_to_infinity([](double x) { return std::exp(-x * x); }, 0.0);
  CHECK(g.value == doctest::Approx(std::sqrt(std::numbers::pi) / 2.0).epsilon(1e-12));
  const auto e = quad::integrate_to_infinity([](double x) { return std::exp(-3.0 * x); }, 1.0);
  CHECK(e.value == doctest::Approx(std::exp(-3.0) / 3.0).epsilon(1e-12));
}

TEST_CASE("non-finite integrand is reported") {
  CHECK_THROWS_AS(quad::integrate([](double) { return std::nan(""); }, 0.0, 1.0), NumericError);
}
