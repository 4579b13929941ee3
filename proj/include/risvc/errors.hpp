// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <stdexcept>
#include <string>

namespace risvc {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or quadrature failed to reach its tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gaussian moments with zero variance reached a formula that divides by
/// them. Callers should route w_m = 0 / w_m = pi/2 to the special paths.
class DegenerateMomentsError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invalid configuration or sweep specification.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace risvc
