// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include "risvc/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "risvc/errors.hpp"
#include "risvc/parallel.hpp"
#include "risvc/simd/kernels.hpp"

namespace risvc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct RicianShape {
  double nu;     // specular amplitude, sqrt(K / (1 + K))
  double sigma;  // per-rail diffuse deviation, sqrt(1 / (2 (1 + K)))
};

RicianShape rician_shape(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("rician: K must be finite and >= 0");
  return {std::sqrt(k / (1.0 + k)), std::sqrt(0.5 / (1.0 + k))};
}

std::size_t block_count(std::size_t n) { return (n + kBlockSize - 1) / kBlockSize; }

// Scratch buffers for drawing element sums without per-draw allocation.
class SumSampler {
 public:
  SumSampler(int n_elements, double k)
      : shape_(rician_shape(k)), alpha_(n_elements), x_(n_elements), y_(n_elements),
        beta_(n_elements) {}

  // sum(alpha_i beta_i) for one draw.
  double draw(Rng& rng) {
    const std::size_t n = alpha_.size();
    for (std::size_t i = 0; i < n; ++i) alpha_[i] = std::sqrt(-std::log(rng.uniform()));
    for (std::size_t i = 0; i < n; ++i) {
      const auto z = rng.normal_pair();
      x_[i] = z[0];
      y_[i] = z[1];
    }
    simd::rician_envelope(x_, y_, shape_.nu, shape_.sigma, beta_);
    return simd::dot(alpha_, beta_);
  }

 private:
  RicianShape shape_;
  std::vector<double> alpha_, x_, y_, beta_;
};

double relative_gap(double empirical, double model) {
  if (model == 0.0) return std::abs(empirical);
  return std::abs(empirical - model) / std::abs(model);
}

}  // namespace

double sample_rayleigh(Rng& rng) { return std::sqrt(-std::log(rng.uniform())); }

double sample_rician(Rng& rng, double k) {
  const RicianShape sh = rician_shape(k);
  const auto z = rng.normal_pair();
  return std::hypot(sh.nu + sh.sigma * z[0], sh.sigma * z[1]);
}

ChannelDraw draw_channel(Rng& rng, int n_elements, double k) {
  if (n_elements < 1) throw DomainError("draw_channel: n_elements must be >= 1");
  const RicianShape sh = rician_shape(k);
  ChannelDraw d;
  d.alpha.resize(n_elements);
  d.theta.resize(n_elements);
  d.beta.resize(n_elements);
  d.psi.resize(n_elements);
  for (int i = 0; i < n_elements; ++i) {
    d.alpha[i] = sample_rayleigh(rng);
    d.theta[i] = kTwoPi * rng.uniform();
    const auto z = rng.normal_pair();
    const double re = sh.nu + sh.sigma * z[0];
    const double im = sh.sigma * z[1];
    d.beta[i] = std::hypot(re, im);
    const double psi = std::atan2(im, re);
    d.psi[i] = psi < 0.0 ? psi + kTwoPi : psi;
  }
  d.eps = sample_rayleigh(rng);
  d.eta = kTwoPi * rng.uniform();
  if (d.eta >= kTwoPi) d.eta -= kTwoPi;
  return d;
}

namespace {

double element_sum(const ChannelDraw& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d.alpha.size(); ++i) s += d.alpha[i] * d.beta[i];
  return s;
}

}  // namespace

double sample_snr_u1(const ChannelDraw& d, const SystemConfig& cfg) {
  const LinkBudget lb = link_budget(cfg);
  const double z = std::sqrt(lb.gamma_bar1) * d.eps +
                   std::sqrt(lb.gamma_bar2) * element_sum(d) * cos_weight(cfg.w_m);
  return z * z;
}

double sample_snr_u2(const ChannelDraw& d, const SystemConfig& cfg) {
  const LinkBudget lb = link_budget(cfg);
  const double r2 = element_sum(d) * sin_weight(cfg.w_m);
  return lb.gamma_bar2 * r2 * r2 / (lb.gamma_bar1 * d.eps * d.eps + 1.0);
}

SnrSamples sample_snr(const SystemConfig& cfg, std::size_t n, unsigned workers) {
  cfg.validate();
  const LinkBudget lb = link_budget(cfg);
  const simd::SnrParams p{std::sqrt(lb.gamma_bar1),
                          std::sqrt(lb.gamma_bar2) * cos_weight(cfg.w_m),
                          std::sqrt(lb.gamma_bar2) * sin_weight(cfg.w_m), lb.gamma_bar1};
  SnrSamples out;
  out.gamma1.resize(n);
  out.gamma2.resize(n);
  for_each_block(block_count(n), workers, [&](std::size_t b) {
    Rng rng = Rng::for_block(cfg.seed, Stream::snr_samples, b);
    SumSampler sampler(cfg.n_elements, cfg.rician_k);
    const std::size_t lo = b * kBlockSize;
    const std::size_t len = std::min(kBlockSize, n - lo);
    std::vector<double> eps(len), s(len);
    for (std::size_t i = 0; i < len; ++i) {
      s[i] = sampler.draw(rng);
      eps[i] = sample_rayleigh(rng);
    }
    simd::snr_batch(eps, s, p, std::span(out.gamma1).subspan(lo, len),
                    std::span(out.gamma2).subspan(lo, len));
  });
  return out;
}

SnrSamples sample_snr_gaussian(const SystemConfig& cfg, std::size_t n, unsigned workers) {
  cfg.validate();
  const LinkBudget lb = link_budget(cfg);
  const simd::SnrParams p{std::sqrt(lb.gamma_bar1),
                          std::sqrt(lb.gamma_bar2) * cos_weight(cfg.w_m),
                          std::sqrt(lb.gamma_bar2) * sin_weight(cfg.w_m), lb.gamma_bar1};
  const double m = element_mean(cfg.rician_k);
  const double mean = cfg.n_elements * m;
  const double sd = std::sqrt(cfg.n_elements * (rician_second_moment(cfg.rician_k) - m * m));
  SnrSamples out;
  out.gamma1.resize(n);
  out.gamma2.resize(n);
  for_each_block(block_count(n), workers, [&](std::size_t b) {
    Rng rng = Rng::for_block(cfg.seed, Stream::gaussian_surrogate, b);
    const std::size_t lo = b * kBlockSize;
    const std::size_t len = std::min(kBlockSize, n - lo);
    std::vector<double> eps(len), s(len);
    for (std::size_t i = 0; i < len; ++i) {
      s[i] = mean + sd * rng.normal_pair()[0];
      eps[i] = sample_rayleigh(rng);
    }
    simd::snr_batch(eps, s, p, std::span(out.gamma1).subspan(lo, len),
                    std::span(out.gamma2).subspan(lo, len));
  });
  return out;
}

Estimate semi_analytic_ber(std::span<const double> snr) {
  if (snr.empty()) throw DomainError("semi_analytic_ber: no samples");
  double sum = 0.0, sumsq = 0.0;
  for (double g : snr) {
    if (!(g >= 0.0)) throw DomainError("semi_analytic_ber: SNR samples must be >= 0");
    const double p = 0.5 * std::erfc(std::sqrt(g));
    sum += p;
    sumsq += p * p;
  }
  const double n = static_cast<double>(snr.size());
  const double mean = sum / n;
  double se = 0.0;
  if (snr.size() > 1) {
    const double var = std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
    se = std::sqrt(var / n);
  }
  return {mean, se};
}

const char* to_string(DetectorMode mode) {
  return mode == DetectorMode::quadrature ? "quadrature" : "model-faithful";
}

DetectorMode parse_detector(std::string_view name) {
  if (name == "quadrature") return DetectorMode::quadrature;
  if (name == "model-faithful") return DetectorMode::model_faithful;
  throw DomainError("unknown detector mode '" + std::string(name) + "'");
}

namespace {

struct LinkSample {
  std::complex<double> stage1;
  std::complex<double> stage2;
  int u1_bit;
  int u2_bit;
  bool u1_error;
  bool u2_error_quadrature;
  double gamma2;  // interference-limited SNR of this draw
};

// One bit pair through the channel: RIS phases cancel the cascaded phases
// and add +-w_m; the receiver derotates by the direct-link phase.
LinkSample transmit(Rng& rng, const SystemConfig& cfg, const LinkBudget& lb, double noise_sd) {
  const std::uint64_t bits = rng();
  LinkSample out{};
  out.u1_bit = static_cast<int>(bits & 1u);
  out.u2_bit = static_cast<int>((bits >> 1) & 1u);
  const double x = out.u1_bit ? 1.0 : -1.0;
  const double w = out.u2_bit ? cfg.w_m : -cfg.w_m;

  const ChannelDraw d = draw_channel(rng, cfg.n_elements, cfg.rician_k);
  std::complex<double> cascade{0.0, 0.0};
  double s = 0.0;
  for (int i = 0; i < cfg.n_elements; ++i) {
    const double phi = w - d.theta[i] - d.psi[i] + d.eta;
    cascade += d.alpha[i] * d.beta[i] * std::polar(1.0, d.theta[i] + d.psi[i] + phi);
    s += d.alpha[i] * d.beta[i];
  }
  // Amplitudes are scaled by sqrt(E_s / N_0) so the noise has unit power.
  const std::complex<double> h =
      std::sqrt(lb.gamma_bar1) * d.eps * std::polar(1.0, d.eta) + std::sqrt(lb.gamma_bar2) * cascade;
  const auto z = rng.normal_pair();
  const std::complex<double> noise{noise_sd * z[0], noise_sd * z[1]};
  const std::complex<double> r = (h * x + noise) * std::polar(1.0, -d.eta);
  const double x_hat = r.real() >= 0.0 ? 1.0 : -1.0;
  out.stage1 = r;
  out.stage2 = r * x_hat;
  out.u1_error = x_hat != x;
  out.u2_error_quadrature = (out.stage2.imag() >= 0.0 ? 1 : 0) != out.u2_bit;
  const double r2 = s * sin_weight(cfg.w_m);
  out.gamma2 = lb.gamma_bar2 * r2 * r2 / (lb.gamma_bar1 * d.eps * d.eps + 1.0);
  return out;
}

}  // namespace

SimResult simulate_link(const SystemConfig& cfg, std::uint64_t n_bits, DetectorMode mode,
                        unsigned workers) {
  cfg.validate();
  if (n_bits < 1) throw DomainError("simulate_link: n_bits must be >= 1");
  const LinkBudget lb = link_budget(cfg);
  const double noise_sd = std::sqrt(0.5);
  const std::size_t n_blocks = block_count(n_bits);
  std::vector<std::uint64_t> err1(n_blocks), err2(n_blocks);
  for_each_block(n_blocks, workers, [&](std::size_t b) {
    Rng rng = Rng::for_block(cfg.seed, Stream::link, b);
    const std::size_t len = std::min<std::uint64_t>(kBlockSize, n_bits - b * kBlockSize);
    std::uint64_t e1 = 0, e2 = 0;
    for (std::size_t i = 0; i < len; ++i) {
      const LinkSample s = transmit(rng, cfg, lb, noise_sd);
      e1 += s.u1_error;
      bool u2_error = s.u2_error_quadrature;
      if (mode == DetectorMode::model_faithful) {
        const bool raw = rng.uniform() <= 0.5 * std::erfc(std::sqrt(s.gamma2));
        u2_error = raw != s.u1_error;  // a wrong first stage flips the second
      }
      e2 += u2_error;
    }
    err1[b] = e1;
    err2[b] = e2;
  });
  SimResult r;
  r.seed = cfg.seed;
  r.bits_sent = n_bits;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    r.bit_errors_u1 += err1[b];
    r.bit_errors_u2 += err2[b];
  }
  const double n = static_cast<double>(n_bits);
  r.ber_u1 = r.bit_errors_u1 / n;
  r.ber_u2 = r.bit_errors_u2 / n;
  r.stderr_u1 = std::sqrt(r.ber_u1 * (1.0 - r.ber_u1) / n);
  r.stderr_u2 = std::sqrt(r.ber_u2 * (1.0 - r.ber_u2) / n);
  return r;
}

ConstellationDump dump_constellation(const SystemConfig& cfg, std::size_t n_points,
                                     bool noiseless) {
  cfg.validate();
  if (n_points < 1) throw DomainError("dump_constellation: n_points must be >= 1");
  const LinkBudget lb = link_budget(cfg);
  const double noise_sd = noiseless ? 0.0 : std::sqrt(0.5);
  // Report samples on the E_s = 1, N_0 = 1 / avg_snr scale.
  const double unscale = 1.0 / std::sqrt(db_to_linear(cfg.avg_snr_db));
  ConstellationDump out;
  out.stage1.reserve(n_points);
  out.stage2.reserve(n_points);
  const std::size_t n_blocks = block_count(n_points);
  for (std::size_t b = 0; b < n_blocks; ++b) {
    Rng rng = Rng::for_block(cfg.seed, Stream::constellation, b);
    const std::size_t len = std::min(kBlockSize, n_points - b * kBlockSize);
    for (std::size_t i = 0; i < len; ++i) {
      const LinkSample s = transmit(rng, cfg, lb, noise_sd);
      out.stage1.push_back({s.stage1 * unscale, s.u1_bit, s.u2_bit});
      out.stage2.push_back({s.stage2 * unscale, s.u2_bit});
    }
  }
  return out;
}

CltReport clt_moment_check(const SystemConfig& cfg, std::size_t n_draws, unsigned workers) {
  cfg.validate();
  if (n_draws < 2) throw DomainError("clt_moment_check: need at least two draws");
  const std::size_t n_blocks = block_count(n_draws);
  std::vector<double> sums(n_blocks), sumsqs(n_blocks);
  // A shift near the mean keeps the variance free of cancellation.
  const double shift = cfg.n_elements * element_mean(cfg.rician_k);
  for_each_block(n_blocks, workers, [&](std::size_t b) {
    Rng rng = Rng::for_block(cfg.seed, Stream::moments, b);
    SumSampler sampler(cfg.n_elements, cfg.rician_k);
    const std::size_t len = std::min(kBlockSize, n_draws - b * kBlockSize);
    std::vector<double> v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = sampler.draw(rng) - shift;
    const auto [s, q] = simd::sum_and_sumsq(v);
    sums[b] = s;
    sumsqs[b] = q;
  });
  double s = 0.0, q = 0.0;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    s += sums[b];
    q += sumsqs[b];
  }
  const double n = static_cast<double>(n_draws);
  const double dm = s / n;
  const double mean_sum = shift + dm;
  const double var_sum = (q - n * dm * dm) / (n - 1.0);

  CltReport r;
  r.draws = n_draws;
  const double c = cos_weight(cfg.w_m);
  const double sn = sin_weight(cfg.w_m);
  r.mean_r1 = mean_sum * c;
  r.var_r1 = var_sum * c * c;
  r.mean_r2 = mean_sum * sn;
  r.var_r2 = var_sum * sn * sn;
  r.model_r1 = moments_r1(cfg);
  r.model_r2 = moments_r2(cfg);
  r.gap_mean_r1 = relative_gap(r.mean_r1, r.model_r1.mu);
  r.gap_var_r1 = relative_gap(r.var_r1, r.model_r1.sigma2);
  r.gap_mean_r2 = relative_gap(r.mean_r2, r.model_r2.mu);
  r.gap_var_r2 = relative_gap(r.var_r2, r.model_r2.sigma2);
  r.skewness = element_sum_skewness(cfg);
  return r;
}

double element_sum_skewness(const SystemConfig& cfg) {
  const double k = cfg.rician_k;
  // Raw moments of X = alpha beta: E[alpha^3] = Gamma(5/2) for unit power,
  // E[beta^3] = Gamma(5/2) e^-K 1F1(5/2; 1; K) / (1 + K)^(3/2).
  const double g52 = std::tgamma(2.5);
  const double e3 = g52 * g52 * std::exp(-k) * specfun::kummer_1f1(2.5, 1.0, k) /
                    std::pow(1.0 + k, 1.5);
  const double e2 = rician_second_moment(k);
  const double m = element_mean(k);
  const double var = e2 - m * m;
  const double skew_elem = (e3 - 3.0 * m * e2 + 2.0 * m * m * m) / std::pow(var, 1.5);
  return skew_elem / std::sqrt(static_cast<double>(cfg.n_elements));
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: no samples");
  std::vector<double> v(samples.begin(), samples.end());
  std::sort(v.begin(), v.end());
  const double n = static_cast<double>(v.size());
  double d = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f = cdf(v[i]);
    d = std::max({d, (i + 1) / n - f, f - i / n});
  }
  return d;
}

}  // namespace risvc
