// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <atomic>
#include <cstdlib>
#include <string>

#include "risvc/errors.hpp"
#include "risvc/simd/kernels.hpp"

namespace risvc::simd {
namespace {

Level initial_level() {
  Level best = avx2_supported() ? Level::avx2 : Level::scalar;
  if (const char* env = std::getenv("RISVC_SIMD")) {
    const Level wanted = parse_level(env);
    if (wanted == Level::avx2 && !avx2_supported()) return Level::scalar;
    return wanted;
  }
  return best;
}

std::atomic<Level>& current() {
  static std::atomic<Level> level{initial_level()};
  return level;
}

const detail::KernelTable& table() {
#if defined(RISVC_HAVE_AVX2)
  if (current().load(std::memory_order_relaxed) == Level::avx2) return detail::kAvx2Kernels;
#endif
  return detail::kScalarKernels;
}

void require_same_size(std::size_t a, std::size_t b, const char* who) {
  if (a != b) throw DomainError(std::string(who) + ": span sizes differ");
}

}  // namespace

const char* to_string(Level level) { return level == Level::avx2 ? "avx2" : "scalar"; }

Level parse_level(std::string_view name) {
  if (name == "scalar") return Level::scalar;
  if (name == "avx2") return Level::avx2;
  throw ConfigError("unknown SIMD level '" + std::string(name) + "'");
}

bool avx2_supported() {
#if defined(RISVC_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Level active_level() { return current().load(); }

void set_level(Level level) {
  if (level == Level::avx2 && !avx2_supported()) {
    throw DomainError("AVX2 kernels are not available on this machine");
  }
  current().store(level);
}

void rician_envelope(std::span<const double> x, std::span<const double> y, double nu,
                     double sigma, std::span<double> out) {
  require_same_size(x.size(), y.size(), "rician_envelope");
  require_same_size(x.size(), out.size(), "rician_envelope");
  table().rician_envelope(x.data(), y.data(), x.size(), nu, sigma, out.data());
}

double dot(std::span<const double> a, std::span<const double> b) {
  require_same_size(a.size(), b.size(), "dot");
  return table().dot(a.data(), b.data(), a.size());
}

std::pair<double, double> sum_and_sumsq(std::span<const double> x) {
  double s = 0.0, q = 0.0;
  table().sum_and_sumsq(x.data(), x.size(), &s, &q);
  return {s, q};
}

void snr_batch(std::span<const double> eps, std::span<const double> s, const SnrParams& p,
               std::span<double> gamma1, std::span<double> gamma2) {
  require_same_size(eps.size(), s.size(), "snr_batch");
  require_same_size(eps.size(), gamma1.size(), "snr_batch");
  require_same_size(eps.size(), gamma2.size(), "snr_batch");
  table().snr_batch(eps.data(), s.data(), eps.size(), p, gamma1.data(), gamma2.data());
}

}  // namespace risvc::simd
