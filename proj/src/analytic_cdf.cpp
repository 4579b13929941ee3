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

constexpr double kSqrt2 = std::numbers::sqrt2;

void require_gamma(double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("cdf: gamma must be finite and >= 0");
  }
}

void require_nondegenerate(const GaussianMoments& m, const char* who) {
  if (m.degenerate()) throw DegenerateMomentsError(std::string(who) + ": degenerate moments");
}

// erf(a) + erf(b) without cancellation when a < 0 < b and both are large.
double erf_pair_sum(double a, double b) {
  if (a < 0.0 && b > 0.0) return std::erfc(-a) - std::erfc(b);
  return std::erf(a) + std::erf(b);
}

// The CDF is 0.5 * [E(A) + erf(v)] - e * [E(B) + E(C)] with v > 0 and C > 0,
// where E is either erf or its exponential-sum stand-in. Both brackets are
// formed from tails so that small CDF values keep their relative accuracy.
struct Gamma1Terms {
  double a, v, b, c, e;
};

Gamma1Terms gamma1_terms(double gamma, const GaussianMoments& m1, const DerivedConstants& k) {
  require_gamma(gamma);
  require_nondegenerate(m1, "cdf_gamma1");
  const double x = std::sqrt(gamma);
  const double s = std::sqrt(m1.sigma2);
  const double mu = m1.mu;
  const double d = k.c1 * k.c2 * x - k.c1 * mu;
  return {(k.c2 * x - mu) / (kSqrt2 * s), mu / (kSqrt2 * s), (k.c2 * x - mu) / (2.0 * k.c3 * s),
          (k.c4 * x + mu) / (2.0 * k.c3 * s),
          std::exp(-d * d / (2.0 * k.c3 * k.c3 * k.c2 * k.c2)) / (2.0 * kSqrt2 * k.c3)};
}

}  // namespace

double cdf_gamma1_closed(double gamma, const GaussianMoments& m1, const DerivedConstants& c) {
  const Gamma1Terms t = gamma1_terms(gamma, m1, c);
  return 0.5 * erf_pair_sum(t.a, t.v) - t.e * erf_pair_sum(t.b, t.c);
}

double cdf_gamma1_sum_exp(double gamma, const GaussianMoments& m1, const DerivedConstants& c) {
  const Gamma1Terms t = gamma1_terms(gamma, m1, c);
  auto tail = [&c](double x) { return specfun::erfc_sum_exp(x, c.erf_table); };
  const double first = t.a < 0.0 ? tail(t.a) - std::erfc(t.v) : 1.0 - tail(t.a) + std::erf(t.v);
  const double second = t.b < 0.0 ? tail(t.b) - tail(t.c) : 2.0 - tail(t.b) - tail(t.c);
  return 0.5 * first - t.e * second;
}

double cdf_gamma1_quadrature(double gamma, const SystemConfig& cfg, const GaussianMoments& m1) {
  require_gamma(gamma);
  require_nondegenerate(m1, "cdf_gamma1_quadrature");
  if (gamma == 0.0) return 0.0;
  const LinkBudget lb = link_budget(cfg);
  const double z = std::sqrt(gamma);
  const double sg2 = std::sqrt(lb.gamma_bar2);
  const double upper = z / sg2;
  const double mu = m1.mu;
  const double s = std::sqrt(m1.sigma2);
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * m1.sigma2);
  // P(amplitude r) * P(direct envelope <= (z - sqrt(g2) r) / sqrt(g1)).
  auto f = [=](double r) {
    const double u = (r - mu) / s;
    const double v = z - sg2 * r;
    return norm * std::exp(-0.5 * u * u) * -std::expm1(-v * v / lb.gamma_bar1);
  };
  std::vector<double> breaks;
  for (double k : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0}) breaks.push_back(mu + k * s);
  const double knee = std::sqrt(lb.gamma_bar1) / sg2;  // width of the expm1 factor
  for (double k : {1.0, 2.0, 4.0}) breaks.push_back(upper - k * knee);
  quad::Options opt;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 20000;
  return quad::integrate(f, 0.0, upper, breaks, opt).value;
}

double cdf_gamma1_saturation(const GaussianMoments& m1) {
  require_nondegenerate(m1, "cdf_gamma1_saturation");
  return 0.5 * std::erfc(-m1.mu / std::sqrt(2.0 * m1.sigma2));
}

double cdf_gamma2_exact(double gamma, const SystemConfig& cfg, const GaussianMoments& m2) {
  require_gamma(gamma);
  require_nondegenerate(m2, "cdf_gamma2_exact");
  if (gamma == 0.0) return 0.0;
  const LinkBudget lb = link_budget(cfg);
  const double g1 = lb.gamma_bar1;
  const double g2 = lb.gamma_bar2;
  const double mu = m2.mu;
  const double s2 = m2.sigma2;
  const double head = specfun::marcum_p_half_ref(mu / std::sqrt(s2), std::sqrt(gamma / (s2 * g2)));
  const double pre = std::sqrt(g1 * gamma / (2.0 * s2 * g2 + g1 * gamma)) *
                     std::exp(1.0 / g1 - mu * mu * g2 / (g1 * gamma + 2.0 * s2 * g2));
  const double a = std::sqrt(mu * mu * gamma / (s2 * gamma + 2.0 * g2 * s2 * s2 / g1));
  const double b = std::sqrt(2.0 / g1 + gamma / (g2 * s2));
  return head + pre * specfun::marcum_q_half_ref(a, b);
}

double cdf_gamma2_series(double gamma, const SystemConfig& cfg, const GaussianMoments& m2,
                         int terms_l, ErfcArgument erfc_arg) {
  require_gamma(gamma);
  require_nondegenerate(m2, "cdf_gamma2_series");
  if (terms_l < 0) throw DomainError("cdf_gamma2_series: L must be >= 0");
  const LinkBudget lb = link_budget(cfg);
  const double g1 = lb.gamma_bar1;
  const double g2 = lb.gamma_bar2;
  const double mu = m2.mu;
  const double s2 = m2.sigma2;
  const double lambda = 0.5 * mu * mu / s2;
  const double log_lambda = std::log(lambda);
  const double y = gamma / (2.0 * g2 * s2);

  // 1 - sum_l w_l Q(l + 1/2, y) = P(Poisson > L) + sum_l w_l P(l + 1/2, y).
  double a1 = specfun::gamma_p(terms_l + 1.0, lambda);
  for (int l = 0; l <= terms_l; ++l) {
    const double w = std::exp(-lambda + l * log_lambda - std::lgamma(l + 1.0));
    a1 += w * specfun::gamma_p(l + 0.5, y);
  }
  if (gamma == 0.0) return a1;

  // Inner k-sum plus erfc(sqrt(x)) telescopes to Q(l + 1/2, x).
  const double x = 1.0 / g1 + y;
  const double lambda_g = gamma * mu * mu / (2.0 * (gamma * s2 + 2.0 * g2 * s2 * s2 / g1));
  const double log_lambda_g = std::log(lambda_g);
  double a2 = 0.0;
  for (int l = 0; l <= terms_l; ++l) {
    const double log_w = 1.0 / g1 - lambda + l * log_lambda_g - std::lgamma(l + 1.0);
    double term = 0.0;
    if (erfc_arg == ErfcArgument::square_root) {
      term = std::exp(log_w + specfun::log_gamma_q(l + 0.5, x));
    } else {
      const double bracket =
          specfun::gamma_q(l + 0.5, x) - std::erfc(std::sqrt(x)) + std::erfc(x);
      term = std::exp(log_w) * bracket;
    }
    a2 += term;
  }
  a2 *= std::sqrt(g1 * gamma / (2.0 * s2 * g2 + g1 * gamma));
  return a1 + a2;
}

}  // namespace risvc
