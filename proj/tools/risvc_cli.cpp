// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
//
// risvc constellation | sweep | validate
//
// Exit codes: 0 success, 1 validation failure or closed-form/oracle
// divergence, 2 I/O or configuration error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "risvc/config_io.hpp"
#include "risvc/errors.hpp"
#include "risvc/montecarlo.hpp"
#include "risvc/sweep.hpp"
#include "risvc/validation.hpp"

namespace fs = std::filesystem;
using namespace risvc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> settings;
  unsigned workers = 0;
};

void add_common(CLI::App* app, CommonArgs& args) {
  app->add_option("--config", args.config, "key = value config file");
  app->add_option("--seed", args.seed, "RNG seed (overrides the config)");
  app->add_option("--set", args.settings, "override one config field, key=value")
      ->type_name("KEY=VALUE");
  app->add_option("--workers", args.workers, "worker threads, 0 = all cores");
}

SystemConfig resolve_config(const CommonArgs& args) {
  SystemConfig cfg = args.config.empty() ? SystemConfig{} : load_config(args.config);
  for (const std::string& kv : args.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (args.seed) cfg.seed = *args.seed;
  cfg.validate();
  return cfg;
}

std::ofstream open_out(const fs::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  return out;
}

void finish(std::ofstream& out, const fs::path& path) {
  out.close();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

int run_constellation(const CommonArgs& args, std::size_t points, bool noiseless,
                      const std::string& out_dir) {
  const SystemConfig cfg = resolve_config(args);
  const ConstellationDump dump = dump_constellation(cfg, points, noiseless);
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);

  auto header = [&](std::ostream& os, int stage) {
    os << "# risvc constellation\n"
       << "# stage = " << stage << '\n'
       << "# points = " << points << '\n'
       << "# noiseless = " << int{noiseless} << '\n';
    write_config_header(os, cfg);
  };
  const fs::path p1 = dir / "stage1.csv";
  std::ofstream s1 = open_out(p1);
  header(s1, 1);
  s1 << "re,im,u1_bit,u2_bit\n";
  for (const Stage1Point& p : dump.stage1) {
    s1 << format_real(p.y.real()) << ',' << format_real(p.y.imag()) << ',' << p.u1_bit << ','
       << p.u2_bit << '\n';
  }
  finish(s1, p1);

  const fs::path p2 = dir / "stage2.csv";
  std::ofstream s2 = open_out(p2);
  header(s2, 2);
  s2 << "re,im,u2_bit\n";
  for (const Stage2Point& p : dump.stage2) {
    s2 << format_real(p.y.real()) << ',' << format_real(p.y.imag()) << ',' << p.u2_bit << '\n';
  }
  finish(s2, p2);
  std::cout << "wrote " << p1.string() << " and " << p2.string() << '\n';
  return kExitOk;
}

struct SweepArgs {
  std::string axis = "w_m";
  std::string grid = "0:pi/2:9";
  std::string paths = "closed,oracle";
  std::uint64_t mc_bits = 100000;
  std::string detector = "quadrature";
  std::string out;
};

int run_sweep_cmd(const CommonArgs& args, const SweepArgs& sa) {
  SweepSpec spec;
  spec.base = resolve_config(args);
  spec.axis = parse_axis(sa.axis);
  spec.grid = parse_grid(sa.grid);
  spec.paths = parse_paths(sa.paths);
  spec.mc_bits = sa.mc_bits;
  try {
    spec.detector = parse_detector(sa.detector);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  spec.workers = args.workers;
  spec.validate();

  const SweepResult result = run_sweep(spec);
  if (sa.out.empty()) {
    write_sweep_csv(std::cout, result);
  } else {
    std::ofstream out = open_out(sa.out);
    write_sweep_csv(out, result);
    finish(out, sa.out);
    std::cerr << "wrote " << sa.out << '\n';
  }
  if (result.any_diverged()) {
    std::cerr << "closed form and oracle disagree beyond tolerance at:";
    for (const SweepRow& r : result.rows) {
      if (r.diverged) std::cerr << ' ' << format_real(r.x);
    }
    std::cerr << "\nsee docs/DEVIATIONS.md for the known gaps\n";
    return kExitFailure;
  }
  return kExitOk;
}

int run_validate(const CommonArgs& args, const std::string& level, const std::string& out) {
  ValidationOptions opt;
  opt.level = parse_level(level);
  opt.seed = resolve_config(args).seed;
  opt.workers = args.workers;
  const ValidationReport rep = run_validation(opt);
  for (const CheckResult& c : rep.checks) {
    std::printf("[%s] %d %s (%.1f s)\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(),
                c.seconds);
    for (const std::string& d : c.details) std::printf("       %s\n", d.c_str());
  }
  std::printf("%s\n", rep.passed() ? "all checks passed" : "some checks failed");
  std::fflush(stdout);

  const fs::path path = out.empty() ? fs::path("risvc_validation.json") : fs::path(out);
  std::ofstream js = open_out(path);
  js << rep.to_json();
  finish(js, path);
  return rep.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RIS-assisted two-user uplink: BER analysis and simulation"};
  app.require_subcommand(1);

  CommonArgs common;
  CLI::App* con = app.add_subcommand("constellation", "dump received samples before and after user-1 remodulation");
  add_common(con, common);
  std::size_t points = 4000;
  bool noiseless = false;
  std::string con_out;
  con->add_option("--points", points, "number of symbols")->check(CLI::PositiveNumber);
  con->add_flag("--noiseless", noiseless, "drop the receiver noise");
  con->add_option("--out", con_out, "output directory for stage1.csv and stage2.csv");

  CLI::App* sw = app.add_subcommand("sweep", "evaluate BER paths over a parameter grid");
  add_common(sw, common);
  SweepArgs sa;
  sw->add_option("--axis", sa.axis, "w_m | avg_snr_db | n_elements")->capture_default_str();
  sw->add_option("--grid", sa.grid, "start:stop:count; pi multiples allowed")->capture_default_str();
  sw->add_option("--paths", sa.paths, "comma list of closed, oracle, monte-carlo, semi-analytic")
      ->capture_default_str();
  sw->add_option("--mc-bits", sa.mc_bits, "bits or samples per point for Monte Carlo paths")
      ->capture_default_str();
  sw->add_option("--detector", sa.detector, "quadrature | model-faithful")->capture_default_str();
  sw->add_option("--out", sa.out, "CSV path (default: stdout)");

  CLI::App* va = app.add_subcommand("validate", "run the acceptance checks");
  add_common(va, common);
  std::string level = "fast";
  std::string va_out;
  va->add_option("--level", level, "fast | full")->capture_default_str();
  va->add_option("--out", va_out, "JSON report path (default: risvc_validation.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (con->parsed()) return run_constellation(common, points, noiseless, con_out);
    if (sw->parsed()) return run_sweep_cmd(common, sa);
    return run_validate(common, level, va_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}
