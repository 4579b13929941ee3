// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <array>

namespace risvc::specfun {

/// Tolerances and series cap shared by the series and quadrature routines.
///
/// Defaults: abs_tol = 1e-14 (series early stop), rel_tol = 1e-13,
/// max_terms = 200000. Quadrature-backed reference paths integrate to a
/// relative tolerance of 1e-12.
struct Accuracy {
  double abs_tol = 1e-14;
  double rel_tol = 1e-13;
  int max_terms = 200000;

  void validate() const;
};

inline constexpr Accuracy kDefaultAccuracy{};

/// Four-term exponential sum standing in for erf:
/// erf(x) ~ sign(x) * (1 - sum_i s[i] exp(-t[i] x^2)).
struct ErfApproxTable {
  std::array<double, 4> s;
  std::array<double, 4> t;
};

inline constexpr ErfApproxTable kErfApproxTable{{1.0 / 8.0, 1.0 / 4.0, 1.0 / 4.0, 1.0 / 4.0},
                                                {1.0, 2.0, 20.0 / 3.0, 20.0 / 17.0}};

// --- error function -------------------------------------------------------

double erf_exact(double x);
/// 1 - erf(x), evaluated without cancellation for large x.
double erfc_exact(double x);

/// exp(x^2) erfc(x) for x >= 0, finite where erfc underflows.
double erfc_scaled(double x);

double erf_sum_exp(double x, const ErfApproxTable& table = kErfApproxTable);
/// sum_i s[i] exp(-t[i] x^2): the matching stand-in for erfc(|x|).
double erfc_sum_exp(double x, const ErfApproxTable& table = kErfApproxTable);

// --- hypergeometric family ------------------------------------------------

/// Kummer 1F1(a; b; z) for z >= 0 by direct summation.
double kummer_1f1(double a, double b, double z, const Accuracy& acc = kDefaultAccuracy);

/// Gauss 2F1(a, b; c; x) for 0 <= x < 1 by direct summation.
double gauss_2f1(double a, double b, double c, double x, const Accuracy& acc = kDefaultAccuracy);

/// ln 2F1(a, b; c; x) for series whose terms are all positive (a, b, c > 0).
/// Rescales while summing, so it survives values beyond the double range.
double log_gauss_2f1(double a, double b, double c, double x,
                     const Accuracy& acc = kDefaultAccuracy);

/// Regularised incomplete gamma functions P(s, x) and Q(s, x) = 1 - P(s, x).
double gamma_p(double s, double x);
double gamma_q(double s, double x);

/// ln Q(s, x); stays finite where Q underflows.
double log_gamma_q(double s, double x);

/// Upper incomplete gamma Gamma(s, x).
double upper_gamma(double s, double x);

/// Tricomi U(a, b, z) from its Laplace-type integral, a > 0, z > 0.
double tricomi_u(double a, double b, double z);
double log_tricomi_u(double a, double b, double z);

/// Whittaker W_{kappa,mu}(z) = exp(-z/2) z^(mu+1/2) U(mu-kappa+1/2, 1+2mu, z).
double whittaker_w(double kappa, double mu, double z);
double log_whittaker_w(double kappa, double mu, double z);

// --- Marcum Q of order 1/2 --------------------------------------------------

/// Q_{1/2}(a, b) = P(|X| > b) with X ~ N(a, 1), by quadrature of the tail.
double marcum_q_half_ref(double a, double b);
/// 1 - Q_{1/2}(a, b), integrated directly over [0, b].
double marcum_p_half_ref(double a, double b);

/// Poisson-weighted incomplete-gamma series for Q_{1/2}, truncated after
/// `terms_l` (inclusive). Stops early once past the Poisson mode and a term
/// falls below acc.abs_tol.
double marcum_q_half_series(double a, double b, int terms_l,
                            const Accuracy& acc = kDefaultAccuracy);

/// Rising factorial (x)_n.
double pochhammer(double x, int n);

}  // namespace risvc::specfun
