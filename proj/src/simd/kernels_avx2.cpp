// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
// Built with -mavx2 only; reached through the dispatcher after a CPU check.
#include <immintrin.h>

#include <cmath>

#include "risvc/simd/kernels.hpp"

namespace risvc::simd::detail {
namespace {

double combine(__m256d acc) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

void rician_envelope(const double* x, const double* y, std::size_t n, double nu, double sigma,
                     double* out) {
  const __m256d vnu = _mm256_set1_pd(nu);
  const __m256d vsig = _mm256_set1_pd(sigma);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d re = _mm256_add_pd(vnu, _mm256_mul_pd(vsig, _mm256_loadu_pd(x + i)));
    const __m256d im = _mm256_mul_pd(vsig, _mm256_loadu_pd(y + i));
    const __m256d r2 = _mm256_add_pd(_mm256_mul_pd(re, re), _mm256_mul_pd(im, im));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(r2));
  }
  for (std::size_t i = n4; i < n; ++i) {
    const double re = nu + sigma * x[i];
    const double im = sigma * y[i];
    out[i] = std::sqrt(re * re + im * im);
  }
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double total = combine(acc);
  for (std::size_t i = n4; i < n; ++i) total += a[i] * b[i];
  return total;
}

void sum_and_sumsq(const double* x, std::size_t n, double* sum, double* sumsq) {
  __m256d s = _mm256_setzero_pd();
  __m256d q = _mm256_setzero_pd();
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d v = _mm256_loadu_pd(x + i);
    s = _mm256_add_pd(s, v);
    q = _mm256_add_pd(q, _mm256_mul_pd(v, v));
  }
  double ts = combine(s);
  double tq = combine(q);
  for (std::size_t i = n4; i < n; ++i) {
    ts += x[i];
    tq += x[i] * x[i];
  }
  *sum = ts;
  *sumsq = tq;
}

void snr_batch(const double* eps, const double* s, std::size_t n, const SnrParams& p,
               double* gamma1, double* gamma2) {
  const __m256d a1 = _mm256_set1_pd(p.sqrt_g1);
  const __m256d ac = _mm256_set1_pd(p.amp_cos);
  const __m256d as = _mm256_set1_pd(p.amp_sin);
  const __m256d g1 = _mm256_set1_pd(p.g1);
  const __m256d one = _mm256_set1_pd(1.0);
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d e = _mm256_loadu_pd(eps + i);
    const __m256d v = _mm256_loadu_pd(s + i);
    const __m256d z = _mm256_add_pd(_mm256_mul_pd(a1, e), _mm256_mul_pd(ac, v));
    _mm256_storeu_pd(gamma1 + i, _mm256_mul_pd(z, z));
    const __m256d r = _mm256_mul_pd(as, v);
    const __m256d den = _mm256_add_pd(_mm256_mul_pd(g1, _mm256_mul_pd(e, e)), one);
    _mm256_storeu_pd(gamma2 + i, _mm256_div_pd(_mm256_mul_pd(r, r), den));
  }
  for (std::size_t i = n4; i < n; ++i) {
    const double z = p.sqrt_g1 * eps[i] + p.amp_cos * s[i];
    gamma1[i] = z * z;
    const double r = p.amp_sin * s[i];
    gamma2[i] = (r * r) / (p.g1 * (eps[i] * eps[i]) + 1.0);
  }
}

}  // namespace

const KernelTable kAvx2Kernels{rician_envelope, dot, sum_and_sumsq, snr_batch};

}  // namespace risvc::simd::detail
