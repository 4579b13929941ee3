// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "risvc/model.hpp"
#include "risvc/specfun.hpp"

namespace risvc {

enum class CdfProvenance { closed_form, quadrature, empirical };

const char* to_string(CdfProvenance p);

/// A CDF of an SNR, gamma >= 0 -> [0, 1]. Values that leave [0, 1] through
/// rounding are clamped and counted. Copies share the clamp counter.
class CdfFunction {
 public:
  using Fn = std::function<double(double)>;

  CdfFunction(Fn fn, CdfProvenance provenance, std::vector<double> hints = {});

  double operator()(double gamma) const;

  CdfProvenance provenance() const { return provenance_; }
  std::size_t clamp_events() const { return clamps_->load(); }
  /// SNR values near which the CDF changes quickly; ber_from_cdf splits there.
  const std::vector<double>& hints() const { return hints_; }

 private:
  Fn fn_;
  CdfProvenance provenance_;
  std::vector<double> hints_;
  std::shared_ptr<std::atomic<std::size_t>> clamps_;
};

enum class BerMode { closed_form, oracle };

struct BerBreakdown {
  double total = 0.0;
  std::vector<std::pair<std::string, double>> parts;
  BerMode mode = BerMode::closed_form;
  bool degenerate = false;

  double part(const std::string& name) const;
};

// --- user 1 ---------------------------------------------------------------

/// Closed-form CDF of the user-1 SNR with the exact error function.
double cdf_gamma1_closed(double gamma, const GaussianMoments& m1, const DerivedConstants& c);

/// Same expression with erf replaced by the four-term exponential sum where
/// its argument depends on gamma. Its BER transform is exactly the closed
/// form returned by ber_u1_closed.
double cdf_gamma1_sum_exp(double gamma, const GaussianMoments& m1, const DerivedConstants& c);

/// The user-1 CDF as a single integral over the Gaussian amplitude, computed
/// by adaptive quadrature.
double cdf_gamma1_quadrature(double gamma, const SystemConfig& cfg, const GaussianMoments& m1);

/// 1 - Phi(-mu / sigma): the mass the amplitude Gaussian puts on r >= 0, and
/// so the limit of every user-1 CDF above.
double cdf_gamma1_saturation(const GaussianMoments& m1);

// --- user 2 ---------------------------------------------------------------

/// Exact CDF of the interference-limited user-2 SNR (Marcum Q by quadrature).
double cdf_gamma2_exact(double gamma, const SystemConfig& cfg, const GaussianMoments& m2);

enum class ErfcArgument {
  square_root,  // erfc(sqrt(x)), the form the l = 0 term requires
  as_printed,   // erfc(x)
};

/// Truncated-series CDF of the user-2 SNR with `terms_l` Poisson terms.
double cdf_gamma2_series(double gamma, const SystemConfig& cfg, const GaussianMoments& m2,
                         int terms_l, ErfcArgument erfc_arg = ErfcArgument::square_root);

// --- BER --------------------------------------------------------------------

/// q^p / (2 Gamma(p)) * int_0^inf exp(-q g) g^(p-1) F(g) dg by quadrature in
/// u = sqrt(g).
double ber_from_cdf(const CdfFunction& cdf, double p, double q);

enum class U1Form {
  corrected,   // default; see docs/DEVIATIONS.md
  as_printed,  // kept for audit
};

/// (I1 - I2 - I3) / (2 sqrt(pi)). Throws DegenerateMomentsError when m1 is
/// degenerate; ber_u1 routes that case to ber_u1_direct_only.
BerBreakdown ber_u1_closed(const GaussianMoments& m1, const DerivedConstants& c,
                           U1Form form = U1Form::corrected);

/// Direct link only: (1/2)(1 - sqrt(g1 / (1 + g1))).
double ber_u1_direct_only(const SystemConfig& cfg);

/// (I4 + I5 + I6) / (2 sqrt(pi)) summed over cfg.series_l Poisson terms, with
/// an early stop past the Poisson mode. w_m = 0 returns exactly 1/2, flagged.
BerBreakdown ber_u2_ideal_closed(const SystemConfig& cfg, const GaussianMoments& m2);

/// Successive-decoding composition pe2 (1 - pe1) + pe1 (1 - pe2).
double ber_u2_effective(double pe1, double pe2_ideal);

// --- pipelines --------------------------------------------------------------

CdfFunction make_cdf_gamma1_quadrature(const SystemConfig& cfg);
CdfFunction make_cdf_gamma1_sum_exp(const SystemConfig& cfg);
CdfFunction make_cdf_gamma2_exact(const SystemConfig& cfg);

/// Closed form, or the direct-link value at w_m = pi/2.
BerBreakdown ber_u1(const SystemConfig& cfg, U1Form form = U1Form::corrected);
BerBreakdown ber_u2_ideal(const SystemConfig& cfg);

/// Quadrature oracles. Degenerate endpoints return the same special values
/// as the closed forms.
BerBreakdown ber_u1_oracle(const SystemConfig& cfg);
/// Quadrature of the exponential-sum CDF; isolates the erf approximation.
BerBreakdown ber_u1_sum_exp_oracle(const SystemConfig& cfg);
BerBreakdown ber_u2_oracle(const SystemConfig& cfg);

}  // namespace risvc
