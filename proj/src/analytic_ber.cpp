// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "risvc/analytic.hpp"
#include "risvc/errors.hpp"
#include "risvc/quadrature.hpp"

namespace risvc {
namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

void require_bpsk(const SystemConfig& cfg) {
  if (cfg.mod_p != 0.5 || cfg.mod_q != 1.0) {
    throw DomainError("closed-form BER assumes mod_p = 1/2 and mod_q = 1");
  }
}

// 1 + erf(sign * v) for v >= 0, times exp(log_scale); stays finite when the
// scale is huge and the erfc factor underflows.
double one_plus_erf_scaled(double sign, double v, double log_scale) {
  if (sign > 0.0) return std::exp(log_scale) * (2.0 - std::erfc(v));
  return std::exp(log_scale - v * v) * specfun::erfc_scaled(v);
}

}  // namespace

const char* to_string(CdfProvenance p) {
  switch (p) {
    case CdfProvenance::closed_form: return "closed-form";
    case CdfProvenance::quadrature: return "quadrature";
    case CdfProvenance::empirical: return "empirical";
  }
  return "unknown";
}

CdfFunction::CdfFunction(Fn fn, CdfProvenance provenance, std::vector<double> hints)
    : fn_(std::move(fn)),
      provenance_(provenance),
      hints_(std::move(hints)),
      clamps_(std::make_shared<std::atomic<std::size_t>>(0)) {}

double CdfFunction::operator()(double gamma) const {
  const double v = fn_(gamma);
  if (v < 0.0 || v > 1.0) {
    clamps_->fetch_add(1, std::memory_order_relaxed);
    return std::clamp(v, 0.0, 1.0);
  }
  return v;
}

double BerBreakdown::part(const std::string& name) const {
  for (const auto& [key, value] : parts) {
    if (key == name) return value;
  }
  throw DomainError("BerBreakdown: no part named " + name);
}

double ber_from_cdf(const CdfFunction& cdf, double p, double q) {
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw DomainError("ber_from_cdf: p and q must be positive");
  }
  // g = u^2 turns the weight into q^p / Gamma(p) exp(-q u^2) u^(2p - 1).
  const double log_scale = p * std::log(q) - std::lgamma(p);
  const double power = 2.0 * p - 1.0;
  auto f = [&](double u) {
    if (u == 0.0) return power > 0.0 ? 0.0 : (power == 0.0 ? std::exp(log_scale) * cdf(0.0) : 0.0);
    const double g = u * u;
    const double w = std::exp(log_scale - q * g + (power == 0.0 ? 0.0 : power * std::log(u)));
    return w == 0.0 ? 0.0 : w * cdf(g);
  };
  std::vector<double> breaks;
  const double unit = 1.0 / std::sqrt(q);
  for (double k : {0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 6.0, 9.0, 14.0}) breaks.push_back(k * unit);
  for (double h : cdf.hints()) {
    if (h > 0.0 && std::isfinite(h)) breaks.push_back(std::sqrt(h));
  }
  quad::Options opt;
  opt.rel_tol = 1e-10;
  opt.max_intervals = 20000;
  const double v = quad::integrate_to_infinity(f, 0.0, breaks, opt).value;
  return std::clamp(v, 0.0, 0.5);
}

BerBreakdown ber_u1_closed(const GaussianMoments& m1, const DerivedConstants& c, U1Form form) {
  if (m1.degenerate()) {
    throw DegenerateMomentsError("ber_u1_closed: degenerate moments; use ber_u1_direct_only");
  }
  const bool fixed = form == U1Form::corrected;
  const double m = c.mu;
  const double s2 = c.sigma2;
  const double c1s = c.c1 * c.c1;
  const double c2s = c.c2 * c.c2;
  const double c3s = c.c3 * c.c3;
  const double m2 = m * m;
  const auto& tab = c.erf_table;

  // 1 + erf(a) - 2 erf(b) = 2 erfc(b) - erfc(a).
  double i1 = kSqrtPi / 2.0 * (2.0 * std::erfc(m / c.c2) - std::erfc(m / std::sqrt(2.0 * s2)));
  for (std::size_t i = 0; i < tab.s.size(); ++i) {
    const double t = tab.t[i];
    const double d = 4.0 * s2 * s2 + 2.0 * t * c2s * s2;
    const double y = t * c.c2 * m / std::sqrt(d);
    const double tm = fixed ? t : t * t;
    const double arg = std::sqrt(m2 / c2s + tm * m2 / (2.0 * s2));
    i1 += tab.s[i] / 2.0 * std::sqrt(2.0 * std::numbers::pi * s2 / (2.0 * s2 + t * c2s)) *
          std::exp(t * t * c2s * m2 / d - t * m2 / (2.0 * s2)) *
          (2.0 * std::erf(arg - y) - std::erfc(y));
  }

  const double dq = std::sqrt(4.0 * c2s * c3s * c3s + 2.0 * c1s * c2s * c3s);
  const double y0 = c1s * m / dq;
  const double pre = 0.5 * std::sqrt(std::numbers::pi / (2.0 * c3s + c1s)) *
                     std::exp(-m2 * c1s / (2.0 * c2s * c3s + c1s * c2s));
  double i2 = pre * (2.0 - std::erfc(y0));
  double i3 = pre * (std::erfc(y0) - 2.0 * std::erf(std::sqrt(c.c7) - y0));
  // The two heads nearly cancel; their sum is 2 pre erfc(sqrt(c7) - y0).
  const double heads = 2.0 * pre * std::erfc(std::sqrt(c.c7) - y0);
  double sums = 0.0;  // I2 + I3 without the heads
  const double common = m2 * c1s / (2.0 * c2s * c3s);
  for (std::size_t i = 0; i < tab.s.size(); ++i) {
    const double t = tab.t[i];
    const double tail = m2 * t / (4.0 * c3s * s2);
    const double c5 = c.c5(i);
    const double sign = fixed ? c.c5_sign(i) : 1.0;
    const double v2 =
        tab.s[i] / std::numbers::sqrt2 *
        std::sqrt(std::numbers::pi * s2 / (4.0 * c3s * s2 + 2.0 * c1s * s2 + t * c.c4 * c.c4)) *
        one_plus_erf_scaled(sign, std::sqrt(c5), c5 - common - tail);
    i2 -= v2;
    sums -= v2;
    const double c6 = c.c6(i);
    const double c7 = fixed ? c.c7 + tail : c.c7;
    const double v3 =
        tab.s[i] / std::numbers::sqrt2 *
        std::sqrt(std::numbers::pi * s2 / (4.0 * c3s * s2 + 2.0 * c1s * s2 + t * c2s)) *
        std::exp(c6 - common - tail) *
        (2.0 * std::erf(std::sqrt(c7) - std::sqrt(c6)) - std::erfc(std::sqrt(c6)));
    i3 += v3;
    sums += v3;
  }

  BerBreakdown out;
  out.total = (i1 - heads - sums) / (2.0 * kSqrtPi);
  out.parts = {{"I1", i1}, {"I2", i2}, {"I3", i3}};
  out.mode = BerMode::closed_form;
  return out;
}

double ber_u1_direct_only(const SystemConfig& cfg) {
  const double g1 = link_budget(cfg).gamma_bar1;
  const double r = std::sqrt(g1 / (1.0 + g1));
  // 1 - r = (1 - r^2) / (1 + r), free of cancellation at high SNR.
  return 0.5 / ((1.0 + g1) * (1.0 + r));
}

BerBreakdown ber_u2_ideal_closed(const SystemConfig& cfg, const GaussianMoments& m2) {
  BerBreakdown out;
  out.mode = BerMode::closed_form;
  if (m2.degenerate()) {
    out.total = 0.5;
    out.parts = {{"I4", kSqrtPi}, {"I5", 0.0}, {"I6", 0.0}};
    out.degenerate = true;
    return out;
  }
  const LinkBudget lb = link_budget(cfg);
  const double g1 = lb.gamma_bar1;
  const double g2 = lb.gamma_bar2;
  const double s2 = m2.sigma2;
  const double a2 = m2.mu * m2.mu / s2;
  const double lambda = 0.5 * a2;
  const double log_lambda = std::log(lambda);
  const double b = 2.0 * g2 * s2;
  const double x4 = b / (1.0 + b);
  const auto& tab = specfun::kErfApproxTable;
  const double head = 1.0 / g1 - lambda;  // exp(1/g1 - mu^2 / (2 sigma^2))

  // Per-l logs that do not depend on k or i.
  const double log_i5_common = head + g2 * s2 / g1 - 0.25 * std::log(b / g1);
  const double z6 = (b + 1.0) / g1;
  const double log_i6_common = head + g2 * s2 / g1 - 0.5 / g1 - 0.5 * std::log(g1 / 2.0);
  const double log_g2s2 = std::log(g2 * s2);
  const double log_g21s2 = std::log(g2 * g1 * s2);
  const double log_base6 = std::log(2.0 / g1 + 1.0 / (g2 * g1 * s2));

  double sum4 = 0.0;
  double i5 = 0.0;
  double i6 = 0.0;
  for (int l = 0; l <= cfg.series_l; ++l) {
    const double pl = l * log_lambda;  // ln (a^2 / 2)^l
    const double t4 = std::exp(l * std::log(a2) + 0.5 * std::log(b) - (l - 1) * std::numbers::ln2 -
                               std::lgamma(l + 0.5) - lambda - (1.0 + l) * std::log1p(b) +
                               specfun::log_gauss_2f1(1.0, l + 1.0, 1.5, x4));
    double t5 = 0.0;
    for (std::size_t i = 0; i < tab.s.size(); ++i) {
      const double t = tab.t[i];
      t5 += std::exp(log_i5_common + std::log(tab.s[i]) + pl - 0.75 * std::log1p(t / b) -
                     t / (2.0 * g1) +
                     specfun::log_whittaker_w(-l - 0.25, -0.25, (b + t) / g1));
    }
    // Every k-term is positive: the Pochhammer sign cancels (-1)^(k + l - 1).
    double t6 = 0.0;
    for (int k = 0; k < l; ++k) {
      t6 += std::exp(log_i6_common + pl + 0.5 * k * log_g2s2 - std::lgamma(k + 1.5) -
                     (k + 0.5) * log_g21s2 - (0.5 * k + 1.0) * log_base6 +
                     specfun::log_whittaker_w(0.5 * (k - 2.0 * l), -0.5 * (k + 1.0), z6));
    }
    sum4 += t4;
    i5 += t5;
    i6 += t6;
    const double numer = kSqrtPi - sum4 + i5 + i6;
    if (l > lambda + 1.0 && t4 + t5 + t6 <= 1e-17 * std::abs(numer)) break;
  }
  const double i4 = kSqrtPi - sum4;
  out.total = std::clamp((i4 + i5 + i6) / (2.0 * kSqrtPi), 0.0, 0.5);
  out.parts = {{"I4", i4}, {"I5", i5}, {"I6", i6}};
  return out;
}

double ber_u2_effective(double pe1, double pe2_ideal) {
  auto check = [](double v) {
    if (!(v >= 0.0 && v <= 0.5)) throw DomainError("ber_u2_effective: inputs must lie in [0, 1/2]");
  };
  check(pe1);
  check(pe2_ideal);
  return pe2_ideal * (1.0 - pe1) + pe1 * (1.0 - pe2_ideal);
}

namespace {

std::vector<double> gamma1_hints(const SystemConfig& cfg, const GaussianMoments& m1) {
  const LinkBudget lb = link_budget(cfg);
  const double c = m1.mu * std::sqrt(lb.gamma_bar2);
  const double s = std::sqrt(m1.sigma2 * lb.gamma_bar2);
  std::vector<double> h;
  for (double f : {0.125, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0}) h.push_back(c * c * f * f);
  for (double k : {-3.0, -1.0, 1.0, 3.0}) {
    const double z = c + k * s;
    if (z > 0.0) h.push_back(z * z);
  }
  for (double k : {0.25, 1.0, 4.0}) h.push_back(k * lb.gamma_bar1);
  return h;
}

std::vector<double> gamma2_hints(const SystemConfig& cfg, const GaussianMoments& m2) {
  const LinkBudget lb = link_budget(cfg);
  const double peak = lb.gamma_bar2 * m2.mu * m2.mu;
  std::vector<double> h;
  for (double t : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
    h.push_back(peak / (1.0 + lb.gamma_bar1 * t));
  }
  const double r = std::sqrt(m2.sigma2) / m2.mu;
  for (double k : {-3.0, 3.0}) h.push_back(peak * (1.0 + k * r) * (1.0 + k * r));
  return h;
}

BerBreakdown oracle_result(double total) {
  BerBreakdown out;
  out.total = total;
  out.parts = {{"quadrature", total}};
  out.mode = BerMode::oracle;
  return out;
}

BerBreakdown direct_only_result(const SystemConfig& cfg, BerMode mode) {
  BerBreakdown out;
  out.total = ber_u1_direct_only(cfg);
  out.parts = {{"direct", out.total}};
  out.mode = mode;
  out.degenerate = true;
  return out;
}

}  // namespace

CdfFunction make_cdf_gamma1_quadrature(const SystemConfig& cfg) {
  const GaussianMoments m1 = moments_r1(cfg);
  return CdfFunction([cfg, m1](double g) { return cdf_gamma1_quadrature(g, cfg, m1); },
                     CdfProvenance::quadrature, gamma1_hints(cfg, m1));
}

CdfFunction make_cdf_gamma1_sum_exp(const SystemConfig& cfg) {
  const GaussianMoments m1 = moments_r1(cfg);
  const DerivedConstants c = derived_constants(cfg, m1);
  return CdfFunction([m1, c](double g) { return cdf_gamma1_sum_exp(g, m1, c); },
                     CdfProvenance::closed_form, gamma1_hints(cfg, m1));
}

CdfFunction make_cdf_gamma2_exact(const SystemConfig& cfg) {
  const GaussianMoments m2 = moments_r2(cfg);
  return CdfFunction([cfg, m2](double g) { return cdf_gamma2_exact(g, cfg, m2); },
                     CdfProvenance::closed_form, gamma2_hints(cfg, m2));
}

BerBreakdown ber_u1(const SystemConfig& cfg, U1Form form) {
  require_bpsk(cfg);
  const GaussianMoments m1 = moments_r1(cfg);
  if (m1.degenerate()) return direct_only_result(cfg, BerMode::closed_form);
  return ber_u1_closed(m1, derived_constants(cfg, m1), form);
}

BerBreakdown ber_u2_ideal(const SystemConfig& cfg) {
  require_bpsk(cfg);
  return ber_u2_ideal_closed(cfg, moments_r2(cfg));
}

BerBreakdown ber_u1_oracle(const SystemConfig& cfg) {
  if (moments_r1(cfg).degenerate()) return direct_only_result(cfg, BerMode::oracle);
  return oracle_result(ber_from_cdf(make_cdf_gamma1_quadrature(cfg), cfg.mod_p, cfg.mod_q));
}

BerBreakdown ber_u1_sum_exp_oracle(const SystemConfig& cfg) {
  if (moments_r1(cfg).degenerate()) return direct_only_result(cfg, BerMode::oracle);
  return oracle_result(ber_from_cdf(make_cdf_gamma1_sum_exp(cfg), cfg.mod_p, cfg.mod_q));
}

BerBreakdown ber_u2_oracle(const SystemConfig& cfg) {
  if (moments_r2(cfg).degenerate()) {
    BerBreakdown out = oracle_result(0.5);
    out.degenerate = true;
    return out;
  }
  return oracle_result(ber_from_cdf(make_cdf_gamma2_exact(cfg), cfg.mod_p, cfg.mod_q));
}

}  // namespace risvc
