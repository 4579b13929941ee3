// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <doctest.h>

#include "risvc/analytic.hpp"
#include "risvc/errors.hpp"
#include "risvc/montecarlo.hpp"

using namespace risvc;

namespace {

struct Moments {
  double mean, var;
};

template <typename Draw>
Moments sample_moments(int n, Draw draw) {
  double s = 0.0, q = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = draw();
    s += v;
    q += v * v;
  }
  const double mean = s / n;
  return {mean, q / n - mean * mean};
}

}  // namespace

TEST_CASE("Rayleigh envelope has unit power") {
  Rng rng(7);
  const int n = 400000;
  const Moments m = sample_moments(n, [&] { return sample_rayleigh(rng); });
  const double mean = std::sqrt(std::numbers::pi) / 2.0;
  CHECK(std::abs(m.mean - mean) < 4.0 * std::sqrt(m.var / n));
  CHECK(m.var + m.mean * m.mean == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("Rician envelope has unit power and the model mean") {
  for (double k : {0.0, 3.0, 10.0}) {
    Rng rng(11);
    const int n = 400000;
    const Moments m = sample_moments(n, [&] { return sample_rician(rng, k); });
    const double mean = element_mean(k) / (std::sqrt(std::numbers::pi) / 2.0);
    CHECK(std::abs(m.mean - mean) < 4.0 * std::sqrt(m.var / n));
    CHECK(m.var + m.mean * m.mean == doctest::Approx(1.0).epsilon(0.01));
  }
  Rng rng(1);
  CHECK_THROWS_AS(sample_rician(rng, -1.0), DomainError);
}

TEST_CASE("channel draw shape") {
  Rng rng(3);
  const ChannelDraw d = draw_channel(rng, 16, 3.0);
  CHECK(d.alpha.size() == 16);
  CHECK(d.psi.size() == 16);
  for (std::size_t i = 0; i < 16; ++i) {
    CHECK(d.alpha[i] >= 0.0);
    CHECK(d.beta[i] >= 0.0);
    CHECK(d.theta[i] >= 0.0);
    CHECK(d.theta[i] < 2.0 * std::numbers::pi);
    CHECK(d.psi[i] >= 0.0);
    CHECK(d.psi[i] < 2.0 * std::numbers::pi);
  }
  CHECK(d.eps >= 0.0);
  CHECK_THROWS_AS(draw_channel(rng, 0, 3.0), DomainError);
}

TEST_CASE("per-draw SNR formulas") {
  ChannelDraw d;
  d.alpha = {1.0, 2.0};
  d.beta = {0.5, 0.25};
  d.theta = d.psi = {0.0, 0.0};
  d.eps = 0.5;
  SystemConfig cfg;
  cfg.n_elements = 2;
  const LinkBudget lb = link_budget(cfg);
  const double r = 1.0 * std::cos(cfg.w_m);
  CHECK(sample_snr_u1(d, cfg) ==
        doctest::Approx(std::pow(std::sqrt(lb.gamma_bar1) * 0.5 + std::sqrt(lb.gamma_bar2) * r, 2)));
  CHECK(sample_snr_u2(d, cfg) ==
        doctest::Approx(lb.gamma_bar2 * 0.5 / (lb.gamma_bar1 * 0.25 + 1.0)));
}

TEST_CASE("SNR sampling is independent of the worker count") {
  SystemConfig cfg;
  cfg.seed = 99;
  const SnrSamples a = sample_snr(cfg, 5000, 1);
  const SnrSamples b = sample_snr(cfg, 5000, 3);
  CHECK(a.gamma1 == b.gamma1);
  CHECK(a.gamma2 == b.gamma2);
  cfg.seed = 100;
  CHECK(sample_snr(cfg, 5000, 1).gamma1 != a.gamma1);
}

TEST_CASE("semi-analytic estimator") {
  const std::vector<double> g(10, 1.0);
  const Estimate e = semi_analytic_ber(g);
  CHECK(e.value == doctest::Approx(0.5 * std::erfc(1.0)));
  CHECK(e.std_error == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(semi_analytic_ber(std::vector<double>{}), DomainError);
  CHECK_THROWS_AS(semi_analytic_ber(std::vector<double>{-1.0}), DomainError);
}

TEST_CASE("Gaussian-sum sampling reproduces the analytic user-2 BER") {
  SystemConfig cfg;
  cfg.avg_snr_db = 10.0;
  const SnrSamples s = sample_snr_gaussian(cfg, 200000, 0);
  const Estimate e = semi_analytic_ber(s.gamma2);
  CHECK(std::abs(e.value - ber_u2_oracle(cfg).total) < 4.0 * e.std_error);
}

TEST_CASE("symbol simulation agrees with the semi-analytic average on the same channel") {
  SystemConfig cfg;
  cfg.avg_snr_db = 0.0;
  cfg.w_m = 3.0 * std::numbers::pi / 8.0;
  const std::uint64_t n = 100000;
  const SimResult sim = simulate_link(cfg, n, DetectorMode::model_faithful, 0);
  const SnrSamples s = sample_snr(cfg, 400000, 0);
  const Estimate e1 = semi_analytic_ber(s.gamma1);
  const Estimate e2 = semi_analytic_ber(s.gamma2);
  CHECK(std::abs(sim.ber_u1 - e1.value) < 4.0 * std::hypot(sim.stderr_u1, e1.std_error));
  const double composed = ber_u2_effective(e1.value, e2.value);
  CHECK(std::abs(sim.ber_u2 - composed) < 4.0 * std::hypot(sim.stderr_u2, e2.std_error));
  CHECK(sim.bits_sent == n);
  CHECK(sim.ber_u1 == doctest::Approx(static_cast<double>(sim.bit_errors_u1) / n));
  CHECK(sim.stderr_u1 == doctest::Approx(std::sqrt(sim.ber_u1 * (1 - sim.ber_u1) / n)));
}

TEST_CASE("simulation is deterministic across worker counts") {
  SystemConfig cfg;
  cfg.avg_snr_db = 0.0;
  const SimResult a = simulate_link(cfg, 5000, DetectorMode::quadrature, 1);
  const SimResult b = simulate_link(cfg, 5000, DetectorMode::quadrature, 4);
  CHECK(a.bit_errors_u1 == b.bit_errors_u1);
  CHECK(a.bit_errors_u2 == b.bit_errors_u2);
  CHECK(a.seed == cfg.seed);
}

TEST_CASE("no phase offset leaves user 2 at a coin flip") {
  SystemConfig cfg;
  cfg.w_m = 0.0;
  const SimResult sim = simulate_link(cfg, 20000, DetectorMode::quadrature, 0);
  CHECK(std::abs(sim.ber_u2 - 0.5) < 4.0 * std::sqrt(0.25 / 20000));
}

TEST_CASE("detector names") {
  CHECK(parse_detector("quadrature") == DetectorMode::quadrature);
  CHECK(parse_detector("model-faithful") == DetectorMode::model_faithful);
  CHECK(std::string(to_string(DetectorMode::model_faithful)) == "model-faithful");
  CHECK_THROWS_AS(parse_detector("ml"), DomainError);
}

TEST_CASE("constellation dump") {
  SystemConfig cfg;
  const ConstellationDump d = dump_constellation(cfg, 4000);
  CHECK(d.stage1.size() == 4000);
  CHECK(d.stage2.size() == 4000);

  // Without noise the remodulated sample carries user 2 on its quadrature sign.
  const ConstellationDump clean = dump_constellation(cfg, 500, true);
  for (std::size_t i = 0; i < clean.stage2.size(); ++i) {
    CHECK((clean.stage1[i].y.real() > 0.0) == (clean.stage1[i].u1_bit == 1));
    CHECK((clean.stage2[i].y.imag() > 0.0) == (clean.stage2[i].u2_bit == 1));
    CHECK(clean.stage2[i].y.real() > 0.0);
  }

  cfg.w_m = 0.0;
  const ConstellationDump flat = dump_constellation(cfg, 4000);
  double s = 0.0, q = 0.0;
  for (const auto& p : flat.stage1) {
    s += p.y.imag();
    q += p.y.imag() * p.y.imag();
  }
  const double mean = s / 4000.0;
  const double se = std::sqrt((q / 4000.0 - mean * mean) / 4000.0);
  CHECK(std::abs(mean) < 3.0 * se);
}

TEST_CASE("CLT moment check") {
  SystemConfig cfg;
  const CltReport r = clt_moment_check(cfg, 200000, 0);
  CHECK(r.draws == 200000);
  CHECK(r.gap_mean_r1 < 0.005);
  CHECK(r.gap_var_r1 < 0.02);
  CHECK(r.mean_r1 == doctest::Approx(r.mean_r2));
  CHECK(r.skewness == doctest::Approx(0.168870670432877).epsilon(1e-10));
  CHECK(clt_moment_check(cfg, 200000, 1).mean_r1 == clt_moment_check(cfg, 200000, 3).mean_r1);
  cfg.w_m = 0.0;
  CHECK(clt_moment_check(cfg, 10000, 0).mean_r2 == 0.0);
}

TEST_CASE("KS statistic") {
  const auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
  CHECK(ks_statistic(std::vector<double>{0.5}, uniform) == doctest::Approx(0.5));
  std::vector<double> grid(1000);
  for (int i = 0; i < 1000; ++i) grid[i] = (i + 0.5) / 1000.0;
  CHECK(ks_statistic(grid, uniform) == doctest::Approx(0.0005));
  CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, uniform), DomainError);
}
