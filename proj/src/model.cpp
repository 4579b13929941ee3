// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include "risvc/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "risvc/errors.hpp"

namespace risvc {

void SystemConfig::validate() const {
  auto fail = [](const std::string& msg) { throw ConfigError("config: " + msg); };
  if (n_elements < 1) fail("n_elements must be >= 1");
  if (!std::isfinite(rician_k) || rician_k < 0.0) fail("rician_k must be finite and >= 0");
  if (!std::isfinite(w_m) || w_m < 0.0 || w_m > kHalfPi + kEndpointTolerance) {
    fail("w_m must lie in [0, pi/2]");
  }
  for (double v : {l1_db, l2_db, avg_snr_db}) {
    if (!std::isfinite(v)) fail("path losses and avg_snr_db must be finite");
  }
  if (!(mod_p > 0.0) || !std::isfinite(mod_p)) fail("mod_p must be > 0");
  if (!(mod_q > 0.0) || !std::isfinite(mod_q)) fail("mod_q must be > 0");
  if (series_l < 1) fail("series_l must be >= 1");
}

double db_to_linear(double x_db) { return std::pow(10.0, x_db / 10.0); }

LinkBudget link_budget(const SystemConfig& cfg) {
  const double g = db_to_linear(cfg.avg_snr_db);
  return {g / db_to_linear(cfg.l1_db), g / db_to_linear(cfg.l2_db)};
}

double element_mean(double k) {
  // E[alpha] = sqrt(pi)/2; E[beta] = Gamma(3/2) 1F1(3/2; 1; K) / (sqrt(1+K) e^K).
  const double e_beta = std::tgamma(1.5) / (std::sqrt(1.0 + k) * std::exp(k)) *
                        specfun::kummer_1f1(1.5, 1.0, k);
  return std::sqrt(std::numbers::pi) / 2.0 * e_beta;
}

double rician_second_moment(double k) {
  return specfun::kummer_1f1(2.0, 1.0, k) / ((1.0 + k) * std::exp(k));
}

double cos_weight(double w_m) {
  if (std::abs(w_m - kHalfPi) <= kEndpointTolerance) return 0.0;
  if (std::abs(w_m) <= kEndpointTolerance) return 1.0;
  return std::cos(w_m);
}

double sin_weight(double w_m) {
  if (std::abs(w_m) <= kEndpointTolerance) return 0.0;
  if (std::abs(w_m - kHalfPi) <= kEndpointTolerance) return 1.0;
  return std::sin(w_m);
}

namespace {

GaussianMoments weighted_moments(const SystemConfig& cfg, double weight) {
  if (weight == 0.0) return {0.0, 0.0};
  const double n = cfg.n_elements;
  const double m = element_mean(cfg.rician_k);
  const double var = rician_second_moment(cfg.rician_k) - m * m;
  return {n * m * weight, n * var * weight * weight};
}

}  // namespace

GaussianMoments moments_r1(const SystemConfig& cfg) {
  return weighted_moments(cfg, cos_weight(cfg.w_m));
}

GaussianMoments moments_r2(const SystemConfig& cfg) {
  return weighted_moments(cfg, sin_weight(cfg.w_m));
}

DerivedConstants derived_constants(const SystemConfig& cfg, const GaussianMoments& m1,
                                   const specfun::ErfApproxTable& table) {
  if (m1.degenerate()) {
    throw DegenerateMomentsError(
        "derived_constants: zero variance (w_m = pi/2); use ber_u1_direct_only");
  }
  const LinkBudget lb = link_budget(cfg);
  DerivedConstants d{};
  d.mu = m1.mu;
  d.sigma2 = m1.sigma2;
  d.c1 = 1.0 / std::sqrt(lb.gamma_bar1);
  d.c2 = 1.0 / std::sqrt(lb.gamma_bar2);
  const double loss_ratio = db_to_linear(cfg.l1_db - cfg.l2_db);
  d.c3 = std::sqrt(m1.sigma2 * loss_ratio + 0.5);
  d.c4 = 2.0 * m1.sigma2 * d.c1 * d.c1 / d.c2;
  const double mu2 = m1.mu * m1.mu;
  d.c7 = mu2 / (d.c2 * d.c2) + mu2 * d.c1 * d.c1 / (2.0 * d.c2 * d.c2 * d.c3 * d.c3);
  d.erf_table = table;
  return d;
}

double DerivedConstants::c5(std::size_t i) const {
  const double t = erf_table.t.at(i);
  const double s2 = sigma2;
  const double num = 2.0 * c1 * c1 * mu * s2 - t * c2 * c4 * mu;
  const double den = 16.0 * c2 * c2 * std::pow(c3, 4) * s2 * s2 +
                     8.0 * c1 * c1 * c2 * c2 * c3 * c3 * s2 * s2 +
                     4.0 * t * c2 * c2 * c3 * c3 * c4 * c4 * s2;
  return num * num / den;
}

double DerivedConstants::c6(std::size_t i) const {
  const double t = erf_table.t.at(i);
  const double s2 = sigma2;
  const double num = 2.0 * c1 * c1 * mu * s2 + t * c2 * c2 * mu;
  const double den = 16.0 * c2 * c2 * std::pow(c3, 4) * s2 * s2 +
                     8.0 * c1 * c1 * c2 * c2 * c3 * c3 * s2 * s2 +
                     4.0 * t * std::pow(c2, 4) * c3 * c3 * s2;
  return num * num / den;
}

double DerivedConstants::c5_sign(std::size_t i) const {
  return (2.0 * c1 * c1 * sigma2 - erf_table.t.at(i) * c2 * c4) >= 0.0 ? 1.0 : -1.0;
}

std::string describe(const SystemConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "n_elements = " << cfg.n_elements << '\n'
     << "rician_k = " << cfg.rician_k << '\n'
     << "w_m = " << cfg.w_m << '\n'
     << "l1_db = " << cfg.l1_db << '\n'
     << "l2_db = " << cfg.l2_db << '\n'
     << "avg_snr_db = " << cfg.avg_snr_db << '\n'
     << "mod_p = " << cfg.mod_p << '\n'
     << "mod_q = " << cfg.mod_q << '\n'
     << "series_l = " << cfg.series_l << '\n'
     << "seed = " << cfg.seed << '\n';
  return os.str();
}

}  // namespace risvc
