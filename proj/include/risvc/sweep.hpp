// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "risvc/model.hpp"
#include "risvc/montecarlo.hpp"

namespace risvc {

enum class Axis { w_m, avg_snr_db, n_elements };
enum class SweepPath { closed, oracle, monte_carlo, semi_analytic };

const char* to_string(Axis a);
const char* to_string(SweepPath p);
/// Throw ConfigError on unknown names.
Axis parse_axis(std::string_view name);
/// Comma-separated, e.g. "closed,oracle". Duplicates are dropped and the
/// result is kept in canonical order.
std::vector<SweepPath> parse_paths(std::string_view list);

struct SweepSpec {
  SystemConfig base;
  Axis axis = Axis::w_m;
  std::vector<double> grid;
  std::vector<SweepPath> paths{SweepPath::closed, SweepPath::oracle};
  std::uint64_t mc_bits = 100000;
  DetectorMode detector = DetectorMode::quadrature;
  unsigned workers = 0;
  /// Relative closed-form vs oracle gap above which a point is reported.
  double divergence_tol = 0.05;

  bool has(SweepPath p) const;
  /// Throws ConfigError.
  void validate() const;
};

/// Path outputs at one grid point; NaN where a path was not requested.
struct SweepRow {
  double x = 0.0;
  bool degenerate_u1 = false;  // w_m = pi/2: no cascaded term for user 1
  bool degenerate_u2 = false;  // w_m = 0: user 2 carries no energy
  double u1_direct_only = 0.0;

  double closed_u1, closed_u2_ideal, closed_u2_eff;
  double oracle_u1, oracle_u1_sum_exp, oracle_u2_ideal, oracle_u2_eff;
  double mc_u1, mc_u2, mc_stderr_u1, mc_stderr_u2;
  double semi_u1, semi_u2_ideal, semi_u2_eff, semi_stderr_u1, semi_stderr_u2;

  /// Closed form disagrees with its oracle beyond SweepSpec::divergence_tol
  /// and the erf-approximation allowance.
  bool diverged = false;
};

struct SweepResult {
  SweepSpec spec;
  std::vector<SweepRow> rows;

  bool any_diverged() const;
};

/// User-1 agreement rule: within `tol` of the exact oracle, or within 1% of
/// the oracle that uses the same exponential-sum erf as the closed form.
bool closed_u1_consistent(double closed, double oracle, double sum_exp_oracle, double tol);

/// The configuration evaluated at grid value x.
SystemConfig config_at(const SweepSpec& spec, double x);

/// Evaluates every requested path at every grid point. Output does not
/// depend on spec.workers.
SweepResult run_sweep(const SweepSpec& spec);

/// CSV with '#' metadata lines, then one header row and one row per point.
void write_sweep_csv(std::ostream& out, const SweepResult& result);

}  // namespace risvc
