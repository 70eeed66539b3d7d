// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace spinchannel::cli {

enum class Command { kGapScan, kTeleport, kTransfer, kShare, kValidate };
enum class Mode { kEffective, kFull };
enum class Format { kCsv, kJson };

/// Bad flags or inconsistent settings; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TemperatureGrid {
  double min = 1e-4;
  double max = 1e-1;
  int points = 50;
  bool log = true;

  [[nodiscard]] std::vector<double> values() const;
};

struct RunConfig {
  Command command = Command::kValidate;
  std::vector<int> lengths;
  double j = 1.0;
  std::vector<double> jp{0.2};
  std::optional<double> gamma;  // empty: auto, resolved to J_eff
  TemperatureGrid temperature;
  bool temperature_given = false;
  std::optional<double> t_max;  // empty: twice the effective optimal time
  int t_points = 2001;
  Mode mode = Mode::kEffective;
  double tol = 1e-10;
  double krylov_tol = 1e-10;
  std::uint64_t seed = 0x5eed'2007'0311ULL;
  std::string out;
  Format format = Format::kCsv;

  [[nodiscard]] nlohmann::json to_json() const;
};

std::string_view to_string(Command c);

/// Parses `spinchannel <command> [flags]`. Flags override values from a JSON
/// file given by --config. Throws UsageError; returns nullopt after --help.
std::optional<RunConfig> parse_run_config(const std::vector<std::string>& args);

}  // namespace spinchannel::cli
