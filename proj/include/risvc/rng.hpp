// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace risvc {

/// Stream tags keep the draws of different pipelines apart under one seed.
enum class Stream : std::uint64_t {
  snr_samples = 1,
  moments = 2,
  link = 3,
  constellation = 4,
  gaussian_surrogate = 5,
};

/// xoshiro256++ with a splitmix64 seeding step.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  /// Independent generator for block `block` of stream `stream`. The state
  /// depends only on (seed, stream, block), never on the worker that runs it.
  static Rng for_block(std::uint64_t seed, Stream stream, std::uint64_t block);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()();

  /// Uniform on (0, 1]; never returns 0 so log() is safe.
  double uniform();

  /// Two independent standard normals (Box-Muller).
  std::array<double, 2> normal_pair();

 private:
  std::array<std::uint64_t, 4> s_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace risvc
