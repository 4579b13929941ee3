// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
//
// Full-level acceptance run: one line per criterion, evidence underneath.
// Exit status is nonzero when any criterion fails.

#include <cstdio>

#include "risvc/validation.hpp"

int main() {
  risvc::ValidationOptions opt;
  opt.level = risvc::Level::full;
  bool all = true;
  for (auto check : {risvc::check_identities, risvc::check_moments, risvc::check_cdfs,
                     risvc::check_ber, risvc::check_monte_carlo, risvc::check_trends,
                     risvc::check_determinism}) {
    const risvc::CheckResult r = check(opt);
    std::printf("criterion %d: %s  %s (%.1f s)\n", r.id, r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.seconds);
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    std::fflush(stdout);
    all = all && r.passed;
  }
  std::printf("%s\n", all ? "all criteria passed" : "some criteria failed");
  return all ? 0 : 1;
}
