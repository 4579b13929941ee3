// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The risvc Authors
#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "risvc/model.hpp"

namespace risvc {

/// Reals as plain numbers or multiples of pi: "0.5", "pi", "pi/4", "3pi/8",
/// "3*pi/8". Throws ConfigError.
double parse_real(std::string_view text);

/// Sets one SystemConfig field by name. Throws ConfigError for unknown keys
/// and malformed values.
void apply_setting(SystemConfig& cfg, std::string_view key, std::string_view value);

/// Flat "key = value" text; '#' starts a comment. Later keys win.
SystemConfig parse_config(std::istream& in, SystemConfig base = {});
/// Throws ConfigError when the file cannot be read.
SystemConfig load_config(const std::filesystem::path& path, SystemConfig base = {});

/// "start:stop:count" -> count evenly spaced values, endpoints included.
std::vector<double> parse_grid(std::string_view text);

/// Shortest round-trip decimal form; fixed across runs and platforms.
std::string format_real(double x);

/// "# key = value" lines for every config field, seed included.
void write_config_header(std::ostream& out, const SystemConfig& cfg);

}  // namespace risvc
