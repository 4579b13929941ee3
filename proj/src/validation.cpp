// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include "risvc/validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "risvc/analytic.hpp"
#include "risvc/errors.hpp"
#include "risvc/model.hpp"
#include "risvc/montecarlo.hpp"
#include "risvc/sweep.hpp"

namespace risvc {
namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::string fmt_pi(double w) {
  static const char* names[] = {"0",     "pi/8",   "pi/4",  "3pi/8", "pi/2",
                                "5pi/8", "3pi/4", "7pi/8", "pi"};
  for (int k = 0; k <= 8; ++k) {
    if (std::abs(w - k * std::numbers::pi / 8.0) < 1e-12) return names[k];
  }
  return fmt(w);
}

double rel_gap(double a, double ref) {
  if (a == ref) return 0.0;
  return std::abs(a - ref) / std::abs(ref);
}

bool same_table(const specfun::ErfApproxTable& a, const specfun::ErfApproxTable& b) {
  return a.s == b.s && a.t == b.t;
}

// Runs body and stamps the elapsed time.
CheckResult timed(int id, std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details.push_back(std::string("error: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

SystemConfig base_config(const ValidationOptions& opt) {
  SystemConfig cfg;
  cfg.seed = opt.seed;
  return cfg;
}

}  // namespace

const char* to_string(Level level) { return level == Level::fast ? "fast" : "full"; }

Level parse_level(std::string_view name) {
  if (name == "fast") return Level::fast;
  if (name == "full") return Level::full;
  throw ConfigError("unknown level '" + std::string(name) + "'");
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["level"] = risvc::to_string(level);
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["name"] = c.name;
    jc["passed"] = c.passed;
    jc["seconds"] = c.seconds;
    jc["details"] = c.details;
    nlohmann::ordered_json m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.metrics) m[k] = std::isfinite(v) ? nlohmann::ordered_json(v) : nullptr;
    jc["metrics"] = m;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

CheckResult check_identities(const ValidationOptions&) {
  return timed(1, "identity suite", [](CheckResult& r) {
    bool ok = true;
    double worst_kummer = 0.0;
    for (double k : {0.0, 1.0, 3.0, 10.0}) {
      const double v = std::exp(-k) * specfun::kummer_1f1(2.0, 1.0, k);
      worst_kummer = std::max(worst_kummer, std::abs(v - (1.0 + k)));
    }
    ok = ok && worst_kummer <= 1e-10;
    r.details.push_back("e^-K 1F1(2;1;K) = 1 + K, K in {0,1,3,10}: max error " +
                        fmt(worst_kummer) + " (tol 1e-10)");

    double worst_gamma = 0.0;
    for (double x : {0.1, 1.0, 4.0}) {
      const double v = specfun::upper_gamma(0.5, x);
      worst_gamma = std::max(worst_gamma, std::abs(v - std::sqrt(std::numbers::pi) *
                                                           std::erfc(std::sqrt(x))));
    }
    ok = ok && worst_gamma <= 1e-9;
    r.details.push_back("Gamma(1/2, x) = sqrt(pi) erfc(sqrt x), x in {0.1,1,4}: max error " +
                        fmt(worst_gamma) + " (tol 1e-9)");

    double worst_marcum = 0.0;
    for (double a : {0.0, 0.5, 1.0, 2.0, 3.0}) {
      for (double b : {0.25, 1.0, 2.0, 3.0, 5.0}) {
        const double s = specfun::marcum_q_half_series(a, b, 30);
        worst_marcum = std::max(worst_marcum, std::abs(s - specfun::marcum_q_half_ref(a, b)));
      }
    }
    ok = ok && worst_marcum <= 1e-8;
    r.details.push_back("Marcum Q_1/2 series (L = 30) vs quadrature, 5x5 grid: max error " +
                        fmt(worst_marcum) + " (tol 1e-8)");
    r.metrics = {{"kummer_max_error", worst_kummer},
                 {"upper_gamma_max_error", worst_gamma},
                 {"marcum_max_error", worst_marcum}};
    r.passed = ok;
  });
}

CheckResult check_moments(const ValidationOptions& opt) {
  return timed(2, "CLT moments", [&](CheckResult& r) {
    const std::size_t draws = opt.level == Level::full ? 10'000'000 : 1'000'000;
    const CltReport c = clt_moment_check(base_config(opt), draws, opt.workers);
    r.passed = c.gap_mean_r1 <= 5e-3 && c.gap_var_r1 <= 5e-3;
    r.details.push_back(std::to_string(draws) + " draws, N = 50, K = 3, w_m = pi/4");
    r.details.push_back("mean " + fmt(c.mean_r1) + " vs " + fmt(c.model_r1.mu) + ": rel gap " +
                        fmt(c.gap_mean_r1) + " (tol 5e-3)");
    r.details.push_back("variance " + fmt(c.var_r1) + " vs " + fmt(c.model_r1.sigma2) +
                        ": rel gap " + fmt(c.gap_var_r1) + " (tol 5e-3)");
    r.metrics = {{"draws", static_cast<double>(draws)},
                 {"mean", c.mean_r1},
                 {"variance", c.var_r1},
                 {"gap_mean", c.gap_mean_r1},
                 {"gap_variance", c.gap_var_r1}};
  });
}

CheckResult check_cdfs(const ValidationOptions& opt) {
  return timed(3, "CDF gates", [&](CheckResult& r) {
    const SystemConfig cfg = base_config(opt);
    const GaussianMoments m1 = moments_r1(cfg);
    const GaussianMoments m2 = moments_r2(cfg);
    const DerivedConstants c = derived_constants(cfg, m1);
    const double top = 20.0 * db_to_linear(cfg.avg_snr_db);
    const int n = opt.level == Level::full ? 801 : 201;
    std::vector<double> grid;
    for (int i = 0; i < n; ++i) grid.push_back(top * i / (n - 1));
    for (int i = 0; i < 40; ++i) grid.push_back(top * std::pow(10.0, -6.0 + 5.0 * i / 40.0));
    std::sort(grid.begin(), grid.end());

    double gap1 = 0.0, gap2 = 0.0, gap2_default = 0.0;
    const int default_l = cfg.series_l;
    for (double g : grid) {
      gap1 = std::max(gap1, std::abs(cdf_gamma1_closed(g, m1, c) - cdf_gamma1_quadrature(g, cfg, m1)));
      const double exact = cdf_gamma2_exact(g, cfg, m2);
      gap2 = std::max(gap2, std::abs(cdf_gamma2_series(g, cfg, m2, 30) - exact));
      gap2_default = std::max(gap2_default, std::abs(cdf_gamma2_series(g, cfg, m2, default_l) - exact));
    }
    const double lambda = 0.5 * m2.mu * m2.mu / m2.sigma2;
    r.passed = gap1 <= 1e-6 && gap2 <= 1e-4;
    r.details.push_back(std::to_string(grid.size()) + " points on [0, " + fmt(top) + "]");
    const double defect = 0.5 * std::erfc(m1.mu / std::sqrt(2.0 * m1.sigma2));
    r.details.push_back("user 1 closed form vs quadrature: sup gap " + fmt(gap1) +
                        " (tol 1e-6); shared saturation defect 1 - F(inf) = " + fmt(defect));
    r.details.push_back("user 2 series (L = 30) vs exact: sup gap " + fmt(gap2) + " (tol 1e-4)");
    r.details.push_back("  Poisson weight mean " + fmt(lambda) +
                        "; weight left beyond L = 30 is " + fmt(specfun::gamma_p(31.0, lambda)));
    r.details.push_back("  info: series with L = " + std::to_string(default_l) + ": sup gap " +
                        fmt(gap2_default));
    r.metrics = {{"sup_gap_u1", gap1},
                 {"sup_gap_u2_l30", gap2},
                 {"sup_gap_u2_default_l", gap2_default},
                 {"poisson_mean", lambda}};
  });
}

CheckResult check_ber(const ValidationOptions& opt) {
  return timed(4, "BER gates", [&](CheckResult& r) {
    const bool reference_table = same_table(opt.erf_table, specfun::kErfApproxTable);
    bool ok = true;
    int via_ledger = 0;
    double worst_u2 = 0.0;
    for (int k : {1, 2, 3}) {
      for (double snr : {10.0, 20.0, 30.0}) {
        SystemConfig cfg = base_config(opt);
        cfg.w_m = k * std::numbers::pi / 8.0;
        cfg.avg_snr_db = snr;
        const GaussianMoments m1 = moments_r1(cfg);
        const double closed1 = ber_u1_closed(m1, derived_constants(cfg, m1, opt.erf_table)).total;
        const double oracle1 = ber_u1_oracle(cfg).total;
        const double closed2 = ber_u2_ideal(cfg).total;
        const double oracle2 = ber_u2_oracle(cfg).total;
        const double g1 = rel_gap(closed1, oracle1);
        const double g2 = rel_gap(closed2, oracle2);
        worst_u2 = std::max(worst_u2, g2);

        std::string u1_status = g1 <= 0.05 ? "ok" : "FAIL";
        std::string tail;
        if (g1 > 0.05 && reference_table) {
          const double sum_exp = ber_u1_sum_exp_oracle(cfg).total;
          const double gs = rel_gap(closed1, sum_exp);
          tail = "; vs erf-approximation oracle " + fmt(sum_exp) + " gap " + fmt(gs);
          if (gs <= 0.01) {
            u1_status = "ledger";
            ++via_ledger;
          }
        }
        ok = ok && u1_status != "FAIL" && g2 <= 0.05;
        r.details.push_back("w_m = " + fmt_pi(cfg.w_m) + ", " + fmt(snr) + " dB: U1 closed " +
                            fmt(closed1) + " oracle " + fmt(oracle1) + " gap " + fmt(g1) + " [" +
                            u1_status + "]" + tail + "; U2 closed " + fmt(closed2) + " oracle " +
                            fmt(oracle2) + " gap " + fmt(g2) + " [" + (g2 <= 0.05 ? "ok" : "FAIL") +
                            "]");
      }
    }
    if (via_ledger > 0) {
      r.details.push_back(std::to_string(via_ledger) +
                          " U1 points pass only through the erf-approximation entry in "
                          "docs/DEVIATIONS.md");
    }
    r.metrics = {{"u1_points_via_ledger", static_cast<double>(via_ledger)},
                 {"u2_worst_gap", worst_u2}};
    r.passed = ok;
  });
}

CheckResult check_monte_carlo(const ValidationOptions& opt) {
  return timed(5, "Monte Carlo consistency", [&](CheckResult& r) {
    const SystemConfig cfg = base_config(opt);
    const std::size_t n = opt.level == Level::full ? 1'000'000 : 100'000;
    const double o1 = ber_u1_oracle(cfg).total;
    const double o2 = ber_u2_oracle(cfg).total;

    const SnrSamples s = sample_snr(cfg, n, opt.workers);
    const Estimate e1 = semi_analytic_ber(s.gamma1);
    const Estimate e2 = semi_analytic_ber(s.gamma2);
    auto z = [](double est, double ref, double se) {
      return se > 0.0 ? std::abs(est - ref) / se : (est == ref ? 0.0 : INFINITY);
    };
    const double z1 = z(e1.value, o1, e1.std_error);
    const double z2 = z(e2.value, o2, e2.std_error);

    const SimResult sim = simulate_link(cfg, n, DetectorMode::model_faithful, opt.workers);
    const double composed = ber_u2_effective(o1, o2);
    const double null_se = std::sqrt(composed * (1.0 - composed) / static_cast<double>(n));
    const double z3 = z(sim.ber_u2, composed, null_se);

    r.passed = z1 <= 3.0 && z2 <= 3.0 && z3 <= 3.0;
    r.details.push_back(std::to_string(n) + " samples / bits at the reference configuration");
    r.details.push_back("U1 semi-analytic " + fmt(e1.value) + " +- " + fmt(e1.std_error) +
                        " vs oracle " + fmt(o1) + ": " + fmt(z1) + " se [" +
                        (z1 <= 3.0 ? "ok" : "FAIL") + "]");
    r.details.push_back("U2 semi-analytic " + fmt(e2.value) + " +- " + fmt(e2.std_error) +
                        " vs oracle " + fmt(o2) + ": " + fmt(z2) + " se [" +
                        (z2 <= 3.0 ? "ok" : "FAIL") + "]");
    r.details.push_back("U2 model-faithful simulation " + fmt(sim.ber_u2) + " (" +
                        std::to_string(sim.bit_errors_u2) + " errors) vs composition " +
                        fmt(composed) + ": " + fmt(z3) + " se [" + (z3 <= 3.0 ? "ok" : "FAIL") +
                        "]");

    // Same estimator with the element sum replaced by the model's Gaussian:
    // separates sampling error from the Gaussian approximation itself.
    const SnrSamples g = sample_snr_gaussian(cfg, n, opt.workers);
    const Estimate g1 = semi_analytic_ber(g.gamma1);
    const Estimate g2 = semi_analytic_ber(g.gamma2);
    r.details.push_back("  info: Gaussian element sum gives U1 " + fmt(g1.value) + " +- " +
                        fmt(g1.std_error) + ", U2 " + fmt(g2.value) + " +- " +
                        fmt(g2.std_error) + " (" + fmt(z(g2.value, o2, g2.std_error)) + " se)");
    r.details.push_back("  info: skewness of the element sum " +
                        fmt(element_sum_skewness(cfg)) + "; the oracle assumes 0");
    r.metrics = {{"samples", static_cast<double>(n)},
                 {"u1_semi", e1.value},
                 {"u1_semi_se", e1.std_error},
                 {"u1_oracle", o1},
                 {"u2_semi", e2.value},
                 {"u2_semi_se", e2.std_error},
                 {"u2_oracle", o2},
                 {"u2_sim", sim.ber_u2},
                 {"u2_composed", composed},
                 {"u2_gaussian_semi", g2.value}};
  });
}

CheckResult check_trends(const ValidationOptions& opt) {
  return timed(6, "trend reproduction", [&](CheckResult& r) {
    const SystemConfig base = base_config(opt);
    std::vector<double> u1, eff;
    for (int i = 0; i <= 8; ++i) {
      SystemConfig cfg = base;
      cfg.w_m = kHalfPi * i / 8.0;
      const double p1 = ber_u1(cfg).total;
      u1.push_back(p1);
      eff.push_back(ber_u2_effective(p1, ber_u2_ideal(cfg).total));
    }
    bool nondecreasing = true;
    for (std::size_t i = 1; i < u1.size(); ++i) nondecreasing = nondecreasing && u1[i] >= u1[i - 1];
    SystemConfig big = base;
    big.n_elements = 100;
    const double u1_n100 = ber_u1(big).total;
    const bool a = nondecreasing && u1_n100 < u1[4];
    r.details.push_back(std::string("(a) U1 over w_m in [0, pi/2]: ") +
                        (nondecreasing ? "nondecreasing" : "NOT nondecreasing") + "; N = 100 " +
                        fmt(u1_n100) + " vs N = 50 " + fmt(u1[4]) + " [" + (a ? "ok" : "FAIL") +
                        "]");

    const auto min_it = std::min_element(eff.begin(), eff.end());
    const auto at = min_it - eff.begin();
    const bool b = at > 0 && at < static_cast<long>(eff.size()) - 1 && *min_it < eff.front() &&
                   *min_it < eff.back();
    r.details.push_back("(b) effective U2 minimum " + fmt(*min_it) + " at w_m = " +
                        fmt_pi(kHalfPi * at / 8.0) + " [" + (b ? "ok" : "FAIL") + "]");

    SystemConfig zero = base;
    zero.w_m = 0.0;
    const double direct = ber_u1_direct_only(base);
    const double ris_zero = ber_u1(zero).total;
    const bool c = direct > u1[4] && u1[4] > ris_zero;
    r.details.push_back("(c) 20 dB: direct-only " + fmt(direct) + " > w_m = pi/4 " + fmt(u1[4]) +
                        " > w_m = 0 " + fmt(ris_zero) + " [" + (c ? "ok" : "FAIL") + "]");

    SystemConfig half = base;
    half.w_m = kHalfPi;
    const double g1 = link_budget(half).gamma_bar1;
    const double anchor = 0.5 * (1.0 - std::sqrt(g1 / (1.0 + g1)));
    const double d1 = std::abs(ber_u1(half).total - anchor);
    const double u2_zero = ber_u2_ideal(zero).total;
    const bool d = d1 <= 1e-10 && u2_zero == 0.5;
    r.details.push_back("(d) w_m = pi/2 U1 error vs direct-link formula " + fmt(d1) +
                        "; w_m = 0 U2 ideal = " + fmt(u2_zero) + " [" + (d ? "ok" : "FAIL") + "]");
    r.metrics = {{"u1_n50", u1[4]}, {"u1_n100", u1_n100}, {"u2_eff_min", *min_it}};
    r.passed = a && b && c && d;
  });
}

CheckResult check_determinism(const ValidationOptions& opt) {
  return timed(7, "sweep determinism", [&](CheckResult& r) {
    SweepSpec spec;
    spec.base = base_config(opt);
    spec.axis = Axis::w_m;
    const int points = opt.level == Level::full ? 9 : 5;
    for (int i = 0; i < points; ++i) spec.grid.push_back(kHalfPi * i / (points - 1));
    spec.paths = {SweepPath::closed, SweepPath::monte_carlo, SweepPath::semi_analytic};
    spec.mc_bits = opt.level == Level::full ? 20000 : 2000;
    auto render = [&spec](unsigned workers) {
      SweepSpec s = spec;
      s.workers = workers;
      std::ostringstream os;
      write_sweep_csv(os, run_sweep(s));
      return os.str();
    };
    const std::string a = render(1);
    const std::string b = render(1);
    const std::string c = render(4);
    r.passed = a == b && a == c;
    r.details.push_back(std::to_string(points) + "-point w_m sweep, " +
                        std::to_string(spec.mc_bits) + " Monte Carlo bits per point, " +
                        std::to_string(a.size()) + " bytes");
    r.details.push_back(std::string("repeat run: ") + (a == b ? "identical" : "DIFFERENT") +
                        "; 4 workers vs 1: " + (a == c ? "identical" : "DIFFERENT"));
  });
}

ValidationReport run_validation(const ValidationOptions& opt) {
  ValidationReport rep;
  rep.level = opt.level;
  for (auto check : {check_identities, check_moments, check_cdfs, check_ber, check_monte_carlo,
                     check_trends, check_determinism}) {
    rep.checks.push_back(check(opt));
  }
  return rep;
}

}  // namespace risvc
