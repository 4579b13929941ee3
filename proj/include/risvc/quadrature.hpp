// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace risvc::quad {

/// Tolerances for the adaptive Gauss-Kronrod integrator. The iteration stops
/// once the summed error estimate is below max(abs_tol, rel_tol * |I|).
struct Options {
  double abs_tol = 1e-300;
  double rel_tol = 1e-12;
  std::size_t max_intervals = 4000;
};

struct Result {
  double value = 0.0;
  double error = 0.0;
  std::size_t intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 7/15-point Gauss-Kronrod on [a, b]. `breaks` are extra
/// interior split points (features the integrand is known to have); points
/// outside (a, b) are ignored. Throws NumericError when the tolerance cannot
/// be met within max_intervals.
Result integrate(const Integrand& f, double a, double b,
                 std::span<const double> breaks = {}, const Options& opt = {});

/// Integral over [a, +inf). Finite breakpoints are integrated directly; the
/// tail past the last breakpoint uses the map x = c + t / (1 - t).
Result integrate_to_infinity(const Integrand& f, double a,
                             std::span<const double> breaks = {},
                             const Options& opt = {});

}  // namespace risvc::quad
