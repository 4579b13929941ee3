// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <cstdint>
#include <numbers>
#include <string>

#include "risvc/specfun.hpp"

namespace risvc {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Angles within this distance of 0 or pi/2 are treated as the endpoint, so
/// grids built as start + i * step still hit the degenerate branches.
inline constexpr double kEndpointTolerance = 1e-12;

/// Scenario parameters. Path losses and SNR are in dB, w_m in radians.
struct SystemConfig {
  int n_elements = 50;
  double rician_k = 3.0;
  double w_m = std::numbers::pi / 4.0;
  double l1_db = 20.0;
  double l2_db = 30.0;
  double avg_snr_db = 20.0;
  double mod_p = 0.5;
  double mod_q = 1.0;
  int series_l = 200;
  std::uint64_t seed = 1;

  /// Throws ConfigError on any violated invariant.
  void validate() const;
};

struct LinkBudget {
  double gamma_bar1;  // direct link, linear
  double gamma_bar2;  // cascaded link, linear
};

struct GaussianMoments {
  double mu = 0.0;
  double sigma2 = 0.0;

  bool degenerate() const { return !(sigma2 > 0.0); }
};

/// Scalars shared by the user-1 CDF and BER closed forms. c5 and c6 depend
/// on the exponential-sum index and are computed on demand.
struct DerivedConstants {
  double mu;
  double sigma2;
  double c1;
  double c2;
  double c3;
  double c4;
  double c7;
  specfun::ErfApproxTable erf_table;

  double c5(std::size_t i) const;
  double c6(std::size_t i) const;
  /// sign(2 c1^2 sigma^2 - T_i c2 c4): the branch of sqrt(c5) that the
  /// completed square actually takes.
  double c5_sign(std::size_t i) const;
};

double db_to_linear(double x_db);

LinkBudget link_budget(const SystemConfig& cfg);

/// Per-element mean E[alpha * beta] and second moment E[(alpha * beta)^2]
/// for unit-power Rayleigh and Rician envelopes.
double element_mean(double rician_k);
double rician_second_moment(double rician_k);

/// cos(w_m) and sin(w_m), snapped to exact 0 and 1 at the endpoints.
double cos_weight(double w_m);
double sin_weight(double w_m);

GaussianMoments moments_r1(const SystemConfig& cfg);
GaussianMoments moments_r2(const SystemConfig& cfg);

/// Throws DegenerateMomentsError when m1.sigma2 == 0.
DerivedConstants derived_constants(const SystemConfig& cfg, const GaussianMoments& m1,
                                   const specfun::ErfApproxTable& table = specfun::kErfApproxTable);

/// One line per field, "key = value".
std::string describe(const SystemConfig& cfg);

}  // namespace risvc
