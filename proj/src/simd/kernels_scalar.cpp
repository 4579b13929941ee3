// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <cmath>

#include "risvc/simd/kernels.hpp"

namespace risvc::simd::detail {
namespace {

void rician_envelope(const double* x, const double* y, std::size_t n, double nu, double sigma,
                     double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = nu + sigma * x[i];
    const double im = sigma * y[i];
    out[i] = std::sqrt(re * re + im * im);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) lane[j] += a[i + j] * b[i + j];
  }
  double total = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  for (std::size_t i = n4; i < n; ++i) total += a[i] * b[i];
  return total;
}

void sum_and_sumsq(const double* x, std::size_t n, double* sum, double* sumsq) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  double q[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    for (std::size_t j = 0; j < 4; ++j) {
      s[j] += x[i + j];
      q[j] += x[i + j] * x[i + j];
    }
  }
  double ts = (s[0] + s[1]) + (s[2] + s[3]);
  double tq = (q[0] + q[1]) + (q[2] + q[3]);
  for (std::size_t i = n4; i < n; ++i) {
    ts += x[i];
    tq += x[i] * x[i];
  }
  *sum = ts;
  *sumsq = tq;
}

void snr_batch(const double* eps, const double* s, std::size_t n, const SnrParams& p,
               double* gamma1, double* gamma2) {
  for (std::size_t i = 0; i < n; ++i) {
    const double z = p.sqrt_g1 * eps[i] + p.amp_cos * s[i];
    gamma1[i] = z * z;
    const double r = p.amp_sin * s[i];
    gamma2[i] = (r * r) / (p.g1 * (eps[i] * eps[i]) + 1.0);
  }
}

}  // namespace

const KernelTable kScalarKernels{rician_envelope, dot, sum_and_sumsq, snr_batch};

}  // namespace risvc::simd::detail
