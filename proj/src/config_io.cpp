// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#include "risvc/config_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "risvc/errors.hpp"

namespace risvc {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_number(std::string_view text, std::string_view whole) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || text.empty()) {
    throw ConfigError("not a number: '" + std::string(whole) + "'");
  }
  return v;
}

template <typename Int>
Int parse_integer(std::string_view text, std::string_view key) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError(std::string(key) + ": not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view t = trim(text);
  const auto at = t.find("pi");
  if (at == std::string_view::npos) return parse_number(t, text);

  std::string_view coef = trim(t.substr(0, at));
  if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
  double value = std::numbers::pi;
  if (coef == "-") {
    value = -value;
  } else if (!coef.empty()) {
    value *= parse_number(coef, text);
  }
  const std::string_view rest = trim(t.substr(at + 2));
  if (rest.empty()) return value;
  if (rest.front() != '/') throw ConfigError("not a number: '" + std::string(text) + "'");
  const double den = parse_number(trim(rest.substr(1)), text);
  if (den == 0.0) throw ConfigError("division by zero in '" + std::string(text) + "'");
  return value / den;
}

void apply_setting(SystemConfig& cfg, std::string_view key, std::string_view value) {
  const std::string_view v = trim(value);
  if (key == "n_elements") {
    cfg.n_elements = parse_integer<int>(v, key);
  } else if (key == "rician_k") {
    cfg.rician_k = parse_real(v);
  } else if (key == "w_m") {
    cfg.w_m = parse_real(v);
  } else if (key == "l1_db") {
    cfg.l1_db = parse_real(v);
  } else if (key == "l2_db") {
    cfg.l2_db = parse_real(v);
  } else if (key == "avg_snr_db") {
    cfg.avg_snr_db = parse_real(v);
  } else if (key == "mod_p") {
    cfg.mod_p = parse_real(v);
  } else if (key == "mod_q") {
    cfg.mod_q = parse_real(v);
  } else if (key == "series_l") {
    cfg.series_l = parse_integer<int>(v, key);
  } else if (key == "seed") {
    cfg.seed = parse_integer<std::uint64_t>(v, key);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

SystemConfig parse_config(std::istream& in, SystemConfig base) {
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    }
    try {
      apply_setting(base, trim(s.substr(0, eq)), s.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  base.validate();
  return base;
}

SystemConfig load_config(const std::filesystem::path& path, SystemConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
  return parse_config(in, base);
}

std::vector<double> parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) {
    throw ConfigError("grid must be start:stop:count, got '" + std::string(text) + "'");
  }
  const double start = parse_real(text.substr(0, c1));
  const double stop = parse_real(text.substr(c1 + 1, c2 - c1 - 1));
  const int count = parse_integer<int>(trim(text.substr(c2 + 1)), "grid count");
  if (count < 1) throw ConfigError("grid count must be >= 1");
  if (count > 1 && !(stop > start)) throw ConfigError("grid stop must exceed start");
  std::vector<double> g(count);
  for (int i = 0; i < count; ++i) {
    g[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
  }
  if (count > 1) g.back() = stop;
  return g;
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("format_real: buffer too small");
  return std::string(buf, ptr);
}

void write_config_header(std::ostream& out, const SystemConfig& cfg) {
  out << "# n_elements = " << cfg.n_elements << '\n'
      << "# rician_k = " << format_real(cfg.rician_k) << '\n'
      << "# w_m = " << format_real(cfg.w_m) << '\n'
      << "# l1_db = " << format_real(cfg.l1_db) << '\n'
      << "# l2_db = " << format_real(cfg.l2_db) << '\n'
      << "# avg_snr_db = " << format_real(cfg.avg_snr_db) << '\n'
      << "# mod_p = " << format_real(cfg.mod_p) << '\n'
      << "# mod_q = " << format_real(cfg.mod_q) << '\n'
      << "# series_l = " << cfg.series_l << '\n'
      << "# seed = " << cfg.seed << '\n';
}

}  // namespace risvc
