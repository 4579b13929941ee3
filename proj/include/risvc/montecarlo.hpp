// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "risvc/model.hpp"
#include "risvc/rng.hpp"

namespace risvc {

/// One joint fading realisation. Envelopes have unit second moment.
struct ChannelDraw {
  std::vector<double> alpha;  // user -> surface, Rayleigh
  std::vector<double> theta;
  std::vector<double> beta;   // surface -> base station, Rician
  std::vector<double> psi;
  double eps = 0.0;           // direct link, Rayleigh
  double eta = 0.0;
};

double sample_rayleigh(Rng& rng);
/// Throws DomainError for k < 0.
double sample_rician(Rng& rng, double k);
ChannelDraw draw_channel(Rng& rng, int n_elements, double k);

/// (sqrt(g1) eps + sqrt(g2) sum(alpha beta) cos w_m)^2.
double sample_snr_u1(const ChannelDraw& d, const SystemConfig& cfg);
/// g2 (sum(alpha beta) sin w_m)^2 / (g1 eps^2 + 1).
double sample_snr_u2(const ChannelDraw& d, const SystemConfig& cfg);

struct SnrSamples {
  std::vector<double> gamma1;
  std::vector<double> gamma2;
};

/// n joint (gamma1, gamma2) draws; bit-identical for any worker count.
SnrSamples sample_snr(const SystemConfig& cfg, std::size_t n, unsigned workers = 0);

/// As sample_snr, but the element sum is drawn from the Gaussian the analytic
/// model assumes instead of from the channel.
SnrSamples sample_snr_gaussian(const SystemConfig& cfg, std::size_t n, unsigned workers = 0);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
};

/// Mean of (1/2) erfc(sqrt(g)) and its sample standard error.
Estimate semi_analytic_ber(std::span<const double> snr);

enum class DetectorMode {
  quadrature,      // sign of the quadrature rail after remodulation
  model_faithful,  // Bernoulli error at the interference-limited SNR
};

const char* to_string(DetectorMode mode);
/// "quadrature" or "model-faithful"; throws DomainError otherwise.
DetectorMode parse_detector(std::string_view name);

struct SimResult {
  std::uint64_t bits_sent = 0;
  std::uint64_t bit_errors_u1 = 0;
  std::uint64_t bit_errors_u2 = 0;
  double ber_u1 = 0.0;
  double ber_u2 = 0.0;
  double stderr_u1 = 0.0;
  double stderr_u2 = 0.0;
  std::uint64_t seed = 0;
};

/// Symbol-level simulation with fresh fading per bit pair and successive
/// decoding (user 1 first, then user 2 from the remodulated sample).
SimResult simulate_link(const SystemConfig& cfg, std::uint64_t n_bits, DetectorMode mode,
                        unsigned workers = 0);

struct Stage1Point {
  std::complex<double> y;
  int u1_bit;
  int u2_bit;
};

struct Stage2Point {
  std::complex<double> y;
  int u2_bit;
};

struct ConstellationDump {
  std::vector<Stage1Point> stage1;  // derotated received samples
  std::vector<Stage2Point> stage2;  // stage1 remodulated by the decoded user-1 symbol
};

ConstellationDump dump_constellation(const SystemConfig& cfg, std::size_t n_points,
                                     bool noiseless = false);

struct CltReport {
  std::size_t draws = 0;
  double mean_r1 = 0.0, var_r1 = 0.0;
  double mean_r2 = 0.0, var_r2 = 0.0;
  GaussianMoments model_r1, model_r2;
  /// Relative gaps |empirical - model| / model; absolute when the model is 0.
  double gap_mean_r1 = 0.0, gap_var_r1 = 0.0;
  double gap_mean_r2 = 0.0, gap_var_r2 = 0.0;
  /// Skewness of the element sum: what the Gaussian model leaves out.
  double skewness = 0.0;
};

CltReport clt_moment_check(const SystemConfig& cfg, std::size_t n_draws, unsigned workers = 0);

/// Skewness of sum(alpha beta) from the exact element moments.
double element_sum_skewness(const SystemConfig& cfg);

/// sup |F_n - F| over the sample. Sorts a copy of `samples`.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

}  // namespace risvc
