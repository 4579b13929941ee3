// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "risvc/specfun.hpp"

namespace risvc {

enum class Level { fast, full };

const char* to_string(Level level);
/// "fast" or "full"; throws ConfigError otherwise.
Level parse_level(std::string_view name);

struct ValidationOptions {
  Level level = Level::fast;
  /// Exponential-sum table handed to the user-1 closed form. Anything but the
  /// reference table is expected to fail the BER gate.
  specfun::ErfApproxTable erf_table = specfun::kErfApproxTable;
  unsigned workers = 0;
  std::uint64_t seed = 1;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  /// Human-readable evidence, one item per line.
  std::vector<std::string> details;
  std::vector<std::pair<std::string, double>> metrics;
};

struct ValidationReport {
  Level level = Level::fast;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_json() const;
};

CheckResult check_identities(const ValidationOptions& opt);
CheckResult check_moments(const ValidationOptions& opt);
CheckResult check_cdfs(const ValidationOptions& opt);
CheckResult check_ber(const ValidationOptions& opt);
CheckResult check_monte_carlo(const ValidationOptions& opt);
CheckResult check_trends(const ValidationOptions& opt);
CheckResult check_determinism(const ValidationOptions& opt);

/// All seven checks in order.
ValidationReport run_validation(const ValidationOptions& opt);

}  // namespace risvc
