// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include "risvc/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "risvc/errors.hpp"
#include "risvc/quadrature.hpp"

namespace risvc::specfun {
namespace {

constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934381868;
constexpr double kRescale = 1e200;
const double kLogRescale = std::log(kRescale);

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

bool is_nonpositive_integer(double x) { return x <= 0.0 && std::floor(x) == x; }

quad::Options reference_quadrature() {
  quad::Options opt;
  opt.abs_tol = 1e-300;
  opt.rel_tol = 1e-12;
  opt.max_intervals = 4000;
  return opt;
}

// Series for P(s, x), valid for x < s + 1.
double gamma_p_series(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) {
      return sum * std::exp(-x + s * std::log(x) - std::lgamma(s));
    }
  }
  throw NumericError("gamma_p: series did not converge");
}

// Lentz continued fraction for ln Q(s, x), valid for x >= s + 1.
double log_gamma_q_fraction(double s, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) {
      return -x + s * std::log(x) - std::lgamma(s) + std::log(h);
    }
  }
  throw NumericError("gamma_q: continued fraction did not converge");
}

double gamma_q_fraction(double s, double x) { return std::exp(log_gamma_q_fraction(s, x)); }

void check_gamma_args(double s, double x) {
  require_finite(s, "incomplete gamma");
  require_finite(x, "incomplete gamma");
  if (s <= 0.0) throw DomainError("incomplete gamma: s must be positive");
  if (x < 0.0) throw DomainError("incomplete gamma: x must be nonnegative");
}

}  // namespace

void Accuracy::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_terms < 1) {
    throw DomainError("Accuracy: abs_tol > 0, rel_tol > 0 and max_terms >= 1 required");
  }
}

double erf_exact(double x) {
  require_finite(x, "erf_exact");
  return std::erf(x);
}

double erfc_exact(double x) {
  require_finite(x, "erfc_exact");
  return std::erfc(x);
}

double erfc_scaled(double x) {
  require_finite(x, "erfc_scaled");
  if (x < 0.0) throw DomainError("erfc_scaled: requires x >= 0");
  if (x < 5.0) return std::exp(x * x) * std::erfc(x);
  // Laplace continued fraction, evaluated bottom-up.
  double k = x;
  for (int n = 80; n >= 1; --n) k = x + 0.5 * n / k;
  return 1.0 / (std::sqrt(std::numbers::pi) * k);
}

double erfc_sum_exp(double x, const ErfApproxTable& table) {
  require_finite(x, "erfc_sum_exp");
  const double x2 = x * x;
  double sum = 0.0;
  for (std::size_t i = 0; i < table.s.size(); ++i) sum += table.s[i] * std::exp(-table.t[i] * x2);
  return sum;
}

double erf_sum_exp(double x, const ErfApproxTable& table) {
  const double tail = erfc_sum_exp(x, table);
  return x >= 0.0 ? 1.0 - tail : -1.0 + tail;
}

double kummer_1f1(double a, double b, double z, const Accuracy& acc) {
  require_finite(a, "kummer_1f1");
  require_finite(b, "kummer_1f1");
  require_finite(z, "kummer_1f1");
  if (is_nonpositive_integer(b)) throw DomainError("kummer_1f1: b is a non-positive integer");
  if (z < 0.0) throw DomainError("kummer_1f1: z must be nonnegative");
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n < acc.max_terms; ++n) {
    term *= (a + n) / (b + n) * z / (n + 1);
    sum += term;
    if (term == 0.0) return sum;
    if (n + 1 > z && std::abs(term) <= acc.rel_tol * 1e-3 * std::abs(sum)) return sum;
  }
  throw NumericError("kummer_1f1: no convergence within max_terms");
}

namespace {

struct ScaledSum {
  double mantissa;
  double log_scale;
};

ScaledSum gauss_2f1_scaled(double a, double b, double c, double x, const Accuracy& acc) {
  for (double v : {a, b, c, x}) require_finite(v, "gauss_2f1");
  if (is_nonpositive_integer(c)) throw DomainError("gauss_2f1: c is a non-positive integer");
  if (x < 0.0 || x >= 1.0) throw DomainError("gauss_2f1: requires 0 <= x < 1");
  double term = 1.0;
  double sum = 1.0;
  double log_scale = 0.0;
  for (int n = 0; n < acc.max_terms; ++n) {
    const double ratio = (a + n) * (b + n) / ((c + n) * (n + 1)) * x;
    term *= ratio;
    sum += term;
    if (term == 0.0) return {sum, log_scale};
    if (std::abs(sum) > kRescale) {
      sum /= kRescale;
      term /= kRescale;
      log_scale += kLogRescale;
    }
    // Past the peak the ratio is below one and the tail is geometric.
    if (std::abs(ratio) < 1.0) {
      const double tail = std::abs(term) * std::abs(ratio) / (1.0 - std::abs(ratio));
      if (tail <= acc.rel_tol * 1e-3 * std::abs(sum)) return {sum, log_scale};
    }
  }
  throw NumericError("gauss_2f1: no convergence within max_terms");
}

}  // namespace

double gauss_2f1(double a, double b, double c, double x, const Accuracy& acc) {
  const ScaledSum s = gauss_2f1_scaled(a, b, c, x, acc);
  const double v = s.mantissa * std::exp(s.log_scale);
  if (!std::isfinite(v)) throw NumericError("gauss_2f1: value overflows double");
  return v;
}

double log_gauss_2f1(double a, double b, double c, double x, const Accuracy& acc) {
  if (!(a > 0.0 && b > 0.0 && c > 0.0)) {
    throw DomainError("log_gauss_2f1: requires a, b, c > 0");
  }
  const ScaledSum s = gauss_2f1_scaled(a, b, c, x, acc);
  return std::log(s.mantissa) + s.log_scale;
}

double gamma_p(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 0.0;
  if (x < s + 1.0) return gamma_p_series(s, x);
  return 1.0 - gamma_q_fraction(s, x);
}

double gamma_q(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 1.0;
  if (x < s + 1.0) return 1.0 - gamma_p_series(s, x);
  return gamma_q_fraction(s, x);
}

double log_gamma_q(double s, double x) {
  check_gamma_args(s, x);
  if (x == 0.0) return 0.0;
  if (x < s + 1.0) return std::log1p(-gamma_p_series(s, x));
  return log_gamma_q_fraction(s, x);
}

double upper_gamma(double s, double x) { return std::tgamma(s) * gamma_q(s, x); }

double log_tricomi_u(double a, double b, double z) {
  require_finite(a, "tricomi_u");
  require_finite(b, "tricomi_u");
  require_finite(z, "tricomi_u");
  if (!(a > 0.0)) throw DomainError("tricomi_u: requires a > 0");
  if (!(z > 0.0)) throw DomainError("tricomi_u: requires z > 0");

  const auto opt = reference_quadrature();
  const double c = b - a - 1.0;

  if (a < 1.0) {
    // t = s^(1/a) removes the t^(a-1) endpoint singularity.
    const double inv_a = 1.0 / a;
    auto g = [=](double s) {
      const double t = std::pow(s, inv_a);
      return std::exp(-z * t + c * std::log1p(t));
    };
    std::vector<double> breaks;
    for (double k : {0.05, 0.25, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0}) {
      breaks.push_back(std::pow(k / z, a));
    }
    const double integral = quad::integrate_to_infinity(g, 0.0, breaks, opt).value * inv_a;
    return std::log(integral) - std::lgamma(a);
  }

  // Laplace-style scaling about the maximiser of the log-integrand.
  const double p = b - 2.0 - z;
  const double t_star = (p + std::sqrt(p * p + 4.0 * z * (a - 1.0))) / (2.0 * z);
  auto log_f = [=](double t) {
    const double lead = (a == 1.0) ? 0.0 : (a - 1.0) * std::log(t);
    return lead - z * t + c * std::log1p(t);
  };
  const double peak = (t_star > 0.0) ? log_f(t_star) : 0.0;
  auto g = [=](double t) {
    if (t == 0.0) return (a == 1.0) ? std::exp(-peak) : 0.0;
    return std::exp(log_f(t) - peak);
  };
  double width = 1.0 / z;
  if (t_star > 0.0) {
    const double curv = (a - 1.0) / (t_star * t_star) + c / ((1.0 + t_star) * (1.0 + t_star));
    if (curv > 0.0) width = std::min(width, 1.0 / std::sqrt(curv));
  }
  std::vector<double> breaks;
  for (double k : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0}) {
    const double t = t_star + k * width;
    if (t > 0.0) breaks.push_back(t);
  }
  const double integral = quad::integrate_to_infinity(g, 0.0, breaks, opt).value;
  return peak + std::log(integral) - std::lgamma(a);
}

double tricomi_u(double a, double b, double z) { return std::exp(log_tricomi_u(a, b, z)); }

double log_whittaker_w(double kappa, double mu, double z) {
  require_finite(kappa, "whittaker_w");
  require_finite(mu, "whittaker_w");
  if (!(z > 0.0)) throw DomainError("whittaker_w: requires z > 0");
  const double a = mu - kappa + 0.5;
  if (!(a > 0.0)) throw DomainError("whittaker_w: requires mu - kappa + 1/2 > 0");
  return -0.5 * z + (mu + 0.5) * std::log(z) + log_tricomi_u(a, 1.0 + 2.0 * mu, z);
}

double whittaker_w(double kappa, double mu, double z) {
  return std::exp(log_whittaker_w(kappa, mu, z));
}

namespace {

void check_marcum_args(double a, double b) {
  require_finite(a, "marcum_q_half");
  require_finite(b, "marcum_q_half");
  if (a < 0.0 || b < 0.0) throw DomainError("marcum_q_half: a and b must be nonnegative");
}

// Density of |X| for X ~ N(a, 1).
double folded_normal_pdf(double a, double x) {
  const double u = x - a;
  const double v = x + a;
  return kInvSqrt2Pi * (std::exp(-0.5 * u * u) + std::exp(-0.5 * v * v));
}

}  // namespace

double marcum_q_half_ref(double a, double b) {
  check_marcum_args(a, b);
  auto f = [a](double x) { return folded_normal_pdf(a, x); };
  std::vector<double> breaks;
  for (double k : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0}) breaks.push_back(a + k);
  for (double k : {1.0, 2.0, 4.0, 8.0}) breaks.push_back(b + k);
  const double q = quad::integrate_to_infinity(f, b, breaks, reference_quadrature()).value;
  return std::clamp(q, 0.0, 1.0);
}

double marcum_p_half_ref(double a, double b) {
  check_marcum_args(a, b);
  if (b == 0.0) return 0.0;
  auto f = [a](double x) { return folded_normal_pdf(a, x); };
  std::vector<double> breaks;
  for (double k : {-8.0, -4.0, -2.0, -1.0, 0.0, 1.0, 2.0, 4.0, 8.0}) breaks.push_back(a + k);
  const double p = quad::integrate(f, 0.0, b, breaks, reference_quadrature()).value;
  return std::clamp(p, 0.0, 1.0);
}

double marcum_q_half_series(double a, double b, int terms_l, const Accuracy& acc) {
  check_marcum_args(a, b);
  if (terms_l < 0) throw DomainError("marcum_q_half_series: L must be nonnegative");
  const double x = 0.5 * b * b;
  if (a == 0.0) return gamma_q(0.5, x);
  const double lambda = 0.5 * a * a;
  const double log_lambda = std::log(lambda);
  double sum = 0.0;
  for (int l = 0; l <= terms_l; ++l) {
    const double weight = std::exp(-lambda + l * log_lambda - std::lgamma(l + 1.0));
    const double term = weight * gamma_q(l + 0.5, x);
    sum += term;
    if (l > lambda && term < acc.abs_tol) break;
  }
  return sum;
}

double pochhammer(double x, int n) {
  require_finite(x, "pochhammer");
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  double prod = 1.0;
  for (int j = 0; j < n; ++j) prod *= x + j;
  return prod;
}

}  // namespace risvc::specfun
