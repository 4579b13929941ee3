// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <cmath>
#include <numbers>

#include <doctest.h>

#include "risvc/errors.hpp"
#include "risvc/model.hpp"

using namespace risvc;

namespace {

// Composite Simpson on [a, b] with n (even) panels.
template <typename F>
double simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

// Rician envelope density with unit second moment.
double rician_pdf(double r, double k) {
  const double s2 = 1.0 / (2.0 * (1.0 + k));
  const double nu = std::sqrt(k / (1.0 + k));
  return r / s2 * std::exp(-(r * r + nu * nu) / (2.0 * s2)) * std::cyl_bessel_i(0.0, r * nu / s2);
}

}  // namespace

TEST_CASE("dB conversion") {
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(20.0) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(db_to_linear(30.0) == doctest::Approx(1000.0).epsilon(1e-15));
}

TEST_CASE("link budget divides the average SNR by each path loss") {
  SystemConfig cfg;
  const LinkBudget lb = link_budget(cfg);
  CHECK(lb.gamma_bar1 == doctest::Approx(1.0));
  CHECK(lb.gamma_bar2 == doctest::Approx(0.1));
}

TEST_CASE("element mean against numerical integration of the densities") {
  for (double k : {0.0, 1.0, 3.0, 10.0}) {
    const double e_beta = simpson([k](double r) { return r * rician_pdf(r, k); }, 0.0, 8.0, 4000);
    const double e_alpha = std::sqrt(std::numbers::pi) / 2.0;
    CHECK(element_mean(k) == doctest::Approx(e_alpha * e_beta).epsilon(1e-10));
    CHECK(rician_second_moment(k) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(element_mean(3.0) == doctest::Approx(0.83521306233140974).epsilon(1e-14));
}

TEST_CASE("Gaussian moments at the reference configuration") {
  SystemConfig cfg;
  const GaussianMoments m1 = moments_r1(cfg);
  const GaussianMoments m2 = moments_r2(cfg);
  CHECK(m1.mu == doctest::Approx(29.52924101).epsilon(1e-9));
  CHECK(m1.sigma2 == doctest::Approx(7.560478513).epsilon(1e-9));
  CHECK(m2.mu == doctest::Approx(m1.mu).epsilon(1e-14));
  CHECK(m2.sigma2 == doctest::Approx(m1.sigma2).epsilon(1e-14));
}

TEST_CASE("endpoint weights snap and moments degenerate") {
  CHECK(cos_weight(kHalfPi) == 0.0);
  CHECK(sin_weight(0.0) == 0.0);
  CHECK(cos_weight(0.0) == 1.0);
  CHECK(sin_weight(kHalfPi - 1e-13) == 1.0);
  SystemConfig cfg;
  cfg.w_m = kHalfPi;
  CHECK(moments_r1(cfg).degenerate());
  CHECK_THROWS_AS(derived_constants(cfg, moments_r1(cfg)), DegenerateMomentsError);
  cfg.w_m = 0.0;
  CHECK(moments_r2(cfg).degenerate());
  CHECK_FALSE(moments_r1(cfg).degenerate());
}

TEST_CASE("moments are positive inside the open interval") {
  SystemConfig cfg;
  for (int i = 1; i < 16; ++i) {
    cfg.w_m = kHalfPi * i / 16.0;
    CHECK(moments_r1(cfg).mu > 0.0);
    CHECK(moments_r2(cfg).mu > 0.0);
  }
}

TEST_CASE("derived constant invariants") {
  SystemConfig cfg;
  const GaussianMoments m1 = moments_r1(cfg);
  const DerivedConstants c = derived_constants(cfg, m1);
  const LinkBudget lb = link_budget(cfg);
  CHECK(c.c1 == doctest::Approx(1.0 / std::sqrt(lb.gamma_bar1)));
  CHECK(c.c2 == doctest::Approx(1.0 / std::sqrt(lb.gamma_bar2)));
  CHECK(c.c3 >= std::sqrt(0.5));
  CHECK(c.c4 == doctest::Approx(2.0 * m1.sigma2 * c.c1 * c.c1 / c.c2));
  CHECK(c.c7 > 0.0);
}

TEST_CASE("config validation") {
  SystemConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  auto bad = [](auto mutate) {
    SystemConfig c;
    mutate(c);
    CHECK_THROWS_AS(c.validate(), ConfigError);
  };
  bad([](SystemConfig& c) { c.n_elements = 0; });
  bad([](SystemConfig& c) { c.rician_k = -1.0; });
  bad([](SystemConfig& c) { c.w_m = 2.0; });
  bad([](SystemConfig& c) { c.w_m = -0.1; });
  bad([](SystemConfig& c) { c.mod_p = 0.0; });
  bad([](SystemConfig& c) { c.series_l = 0; });
  bad([](SystemConfig& c) { c.avg_snr_db = INFINITY; });
}

TEST_CASE("describe lists every field") {
  const std::string d = describe(SystemConfig{});
  for (const char* key : {"n_elements", "rician_k", "w_m", "l1_db", "l2_db", "avg_snr_db", "mod_p",
                          "mod_q", "series_l", "seed"}) {
    CHECK(d.find(key) != std::string::npos);
  }
}
