// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>

namespace risvc::simd {

enum class Level { scalar, avx2 };

const char* to_string(Level level);
/// "scalar" or "avx2"; throws ConfigError otherwise.
Level parse_level(std::string_view name);

/// True when the binary carries AVX2 kernels and the CPU runs them.
bool avx2_supported();

/// Best supported level, unless RISVC_SIMD names another one.
Level active_level();
/// Throws DomainError when the level is not supported here.
void set_level(Level level);

/// Precomputed factors for snr_batch.
struct SnrParams {
  double sqrt_g1;   // sqrt(gamma_bar1)
  double amp_cos;   // sqrt(gamma_bar2) * cos(w_m)
  double amp_sin;   // sqrt(gamma_bar2) * sin(w_m)
  double g1;        // gamma_bar1
};

// Every kernel reduces in the same fixed order (four interleaved lanes,
// combined as (l0 + l1) + (l2 + l3), then the tail in index order), and
// uses no fused multiply-add, so all levels return bit-identical results.

/// out[i] = sqrt((nu + sigma x[i])^2 + (sigma y[i])^2).
void rician_envelope(std::span<const double> x, std::span<const double> y, double nu,
                     double sigma, std::span<double> out);

double dot(std::span<const double> a, std::span<const double> b);

std::pair<double, double> sum_and_sumsq(std::span<const double> x);

/// gamma1[i] = (sqrt_g1 eps[i] + amp_cos s[i])^2,
/// gamma2[i] = (amp_sin s[i])^2 / (g1 eps[i]^2 + 1).
void snr_batch(std::span<const double> eps, std::span<const double> s, const SnrParams& p,
               std::span<double> gamma1, std::span<double> gamma2);

namespace detail {

struct KernelTable {
  void (*rician_envelope)(const double*, const double*, std::size_t, double, double, double*);
  double (*dot)(const double*, const double*, std::size_t);
  void (*sum_and_sumsq)(const double*, std::size_t, double*, double*);
  void (*snr_batch)(const double*, const double*, std::size_t, const SnrParams&, double*,
                    double*);
};

extern const KernelTable kScalarKernels;
#if defined(RISVC_HAVE_AVX2)
extern const KernelTable kAvx2Kernels;
#endif

}  // namespace detail
}  // namespace risvc::simd
