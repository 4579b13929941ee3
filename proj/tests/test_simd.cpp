// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include <cmath>
#include <cstring>
#include <vector>

#include <doctest.h>

#include "risvc/errors.hpp"
#include "risvc/rng.hpp"
#include "risvc/simd/kernels.hpp"

using namespace risvc;

namespace {

std::vector<double> normals(Rng& rng, std::size_t n) {
  std::vector<double> v(n);
  for (auto& x : v) x = rng.normal_pair()[0];
  return v;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct Outputs {
  std::vector<double> env, g1, g2;
  double dot;
  std::pair<double, double> sums;
};

Outputs run_all(std::size_t n) {
  Rng rng(n + 17);
  const auto x = normals(rng, n);
  const auto y = normals(rng, n);
  auto eps = normals(rng, n);
  for (auto& e : eps) e = std::abs(e);
  Outputs o;
  o.env.resize(n);
  o.g1.resize(n);
  o.g2.resize(n);
  simd::rician_envelope(x, y, 0.866, 0.25, o.env);
  o.dot = simd::dot(x, o.env);
  o.sums = simd::sum_and_sumsq(y);
  simd::snr_batch(eps, o.env, {1.0, 0.2236, 0.2236, 1.0}, o.g1, o.g2);
  return o;
}

}  // namespace

TEST_CASE("level names") {
  CHECK(simd::parse_level("scalar") == simd::Level::scalar);
  CHECK(simd::parse_level("avx2") == simd::Level::avx2);
  CHECK_THROWS_AS(simd::parse_level("neon"), ConfigError);
}

TEST_CASE("scalar kernels match their definitions") {
  simd::set_level(simd::Level::scalar);
  const std::vector<double> a{1.0, 2.0, 3.0, 4.0, 5.0};
  const std::vector<double> b{2.0, 2.0, 2.0, 2.0, 2.0};
  CHECK(simd::dot(a, b) == 30.0);
  const auto [s, q] = simd::sum_and_sumsq(a);
  CHECK(s == 15.0);
  CHECK(q == 55.0);
  std::vector<double> env(1);
  simd::rician_envelope(std::vector<double>{1.0}, std::vector<double>{2.0}, 1.0, 1.0, env);
  CHECK(env[0] == doctest::Approx(std::sqrt(8.0)));
  simd::set_level(simd::active_level());
}

TEST_CASE("AVX2 kernels are bit-identical to scalar") {
  if (!simd::avx2_supported()) {
    MESSAGE("AVX2 not available; skipped");
    return;
  }
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 50u, 1023u, 1024u}) {
    simd::set_level(simd::Level::scalar);
    const Outputs s = run_all(n);
    simd::set_level(simd::Level::avx2);
    const Outputs v = run_all(n);
    CAPTURE(n);
    CHECK(same_bits(s.env, v.env));
    CHECK(same_bits(s.g1, v.g1));
    CHECK(same_bits(s.g2, v.g2));
    CHECK(std::memcmp(&s.dot, &v.dot, sizeof(double)) == 0);
    CHECK(std::memcmp(&s.sums, &v.sums, sizeof s.sums) == 0);
  }
  simd::set_level(simd::active_level());
}

TEST_CASE("mismatched spans are rejected") {
  std::vector<double> a(4), b(3), out(4);
  CHECK_THROWS_AS(simd::dot(a, b), DomainError);
  CHECK_THROWS_AS(simd::rician_envelope(a, b, 0.5, 0.5, out), DomainError);
}
