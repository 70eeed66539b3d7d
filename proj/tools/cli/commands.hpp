// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "run_config.hpp"
#include "spinchannel/transfer.hpp"

namespace spinchannel::cli {

/// Everything a command produces. Nothing touches the filesystem until
/// write_outputs runs, so a command is a pure function of its config.
struct CommandOutput {
  std::string data;
  std::string data_path;
  std::optional<std::string> sidecar;
  std::string sidecar_path;
  std::string console;
  int exit_code = 0;
  std::optional<nlohmann::json> error;
};

/// Substitutable pieces for mutation tests of the validate command.
struct ValidationHooks {
  std::function<double(const EffectiveModel&, double)> closed_form = closed_form_fidelity;
};

CommandOutput cmd_gap_scan(const RunConfig& cfg);
CommandOutput cmd_teleport(const RunConfig& cfg);
CommandOutput cmd_transfer(const RunConfig& cfg);
CommandOutput cmd_share(const RunConfig& cfg);
CommandOutput cmd_validate(const RunConfig& cfg, const ValidationHooks& hooks = {});

CommandOutput run_command(const RunConfig& cfg);

/// 17 significant digits, locale independent.
std::string format_double(double v);

/// Sidecar next to a CSV: "x.csv" -> "x.json".
std::string sidecar_path_for(const std::string& data_path);

/// Full CLI entry point. Returns the process exit code: 0 success,
/// 1 computational failure, 2 usage error.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spinchannel::cli
