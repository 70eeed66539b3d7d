// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "run_config.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

namespace spinchannel::cli {

namespace {

const std::map<std::string, Command> kCommands{
    {"gap-scan", Command::kGapScan}, {"teleport", Command::kTeleport},
    {"transfer", Command::kTransfer}, {"share", Command::kShare},
    {"validate", Command::kValidate}};

double parse_double(const std::string& s, const std::string& flag) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty() || !std::isfinite(v)) {
    throw UsageError("--" + flag + ": not a number: '" + s + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& s, const std::string& flag) {
  std::vector<double> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_double(item, flag));
  return out;
}

// Flag value if present, else the config-file entry, else nothing.
template <class T>
std::optional<T> pick(const std::optional<T>& flag, const nlohmann::json& file, const char* key) {
  if (flag) return flag;
  if (file.contains(key)) {
    try {
      return file.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
      throw UsageError(std::string("config file: bad value for '") + key + "'");
    }
  }
  return std::nullopt;
}

// Numbers in the config file may be given as JSON numbers or strings.
std::optional<std::string> pick_text(const std::optional<std::string>& flag,
                                     const nlohmann::json& file, const char* key) {
  if (flag) return flag;
  if (!file.contains(key)) return std::nullopt;
  const auto& v = file.at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string joined;
    for (const auto& x : v) {
      if (!joined.empty()) joined += ',';
      joined += x.is_string() ? x.get<std::string>() : x.dump();
    }
    return joined;
  }
  return v.dump();
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [name, cmd] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::vector<double> TemperatureGrid::values() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    out.push_back(min);
    return out;
  }
  for (int i = 0; i < points; ++i) {
    const double s = static_cast<double>(i) / static_cast<double>(points - 1);
    out.push_back(log ? min * std::pow(max / min, s) : min + (max - min) * s);
  }
  out.back() = max;
  return out;
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j_out;
  j_out["command"] = std::string(to_string(command));
  j_out["lengths"] = lengths;
  j_out["j"] = j;
  j_out["jp"] = jp;
  j_out["gamma"] = gamma ? nlohmann::json(*gamma) : nlohmann::json("auto");
  j_out["temperature"] = {{"min", temperature.min},
                          {"max", temperature.max},
                          {"points", temperature.points},
                          {"scale", temperature.log ? "log" : "lin"}};
  j_out["t_max"] = t_max ? nlohmann::json(*t_max) : nlohmann::json("auto");
  j_out["t_points"] = t_points;
  j_out["mode"] = mode == Mode::kEffective ? "effective" : "full";
  j_out["tol"] = tol;
  j_out["krylov_tol"] = krylov_tol;
  j_out["seed"] = seed;
  j_out["out"] = out;
  j_out["format"] = format == Format::kCsv ? "csv" : "json";
  return j_out;
}

std::optional<RunConfig> parse_run_config(const std::vector<std::string>& args) {
  CLI::App app{"Heisenberg-chain quantum channels: gaps, teleportation, transfer", "spinchannel"};
  std::string command;
  std::optional<std::string> config_path;
  std::optional<int> length, l_min, l_max, l_step, temp_points, t_points;
  std::optional<std::string> j, jp, gamma, temp_min, temp_max, temp_scale, t_max, mode, tol,
      krylov_tol, out, format;
  std::optional<std::uint64_t> seed;

  app.add_option("command", command, "gap-scan | teleport | transfer | share | validate")
      ->required();
  app.add_option("--config", config_path, "JSON config file; flags take precedence");
  app.add_option("--length", length, "Chain length L (probes included)");
  app.add_option("--l-min", l_min, "Smallest L of a range");
  app.add_option("--l-max", l_max, "Largest L of a range");
  app.add_option("--l-step", l_step, "Step of the L range (default 2)");
  app.add_option("--j", j, "Bulk coupling J");
  app.add_option("--jp", jp, "Probe coupling(s) Jp, comma separated");
  app.add_option("--gamma", gamma, "Sender coupling or 'auto' (= J_eff)");
  app.add_option("--temp-min", temp_min, "Lowest temperature");
  app.add_option("--temp-max", temp_max, "Highest temperature");
  app.add_option("--temp-points", temp_points, "Number of temperatures");
  app.add_option("--temp-scale", temp_scale, "lin | log");
  app.add_option("--t-max", t_max, "Final time of the transfer grid");
  app.add_option("--t-points", t_points, "Number of transfer times");
  app.add_option("--mode", mode, "effective | full");
  app.add_option("--tol", tol, "Eigensolver residual tolerance");
  app.add_option("--krylov-tol", krylov_tol, "Per-step Krylov error bound");
  app.add_option("--seed", seed, "Seed of the Lanczos start vector");
  app.add_option("--out", out, "Output path");
  app.add_option("--format", format, "csv | json");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  nlohmann::json file = nlohmann::json::object();
  if (config_path) {
    std::ifstream in(*config_path);
    if (!in) throw UsageError("cannot open config file " + *config_path);
    try {
      in >> file;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("config file is not valid JSON: " + std::string(e.what()));
    }
    if (!file.is_object()) throw UsageError("config file must hold a JSON object");
  }

  RunConfig cfg;
  const auto it = kCommands.find(command);
  if (it == kCommands.end()) throw UsageError("unknown command '" + command + "'");
  cfg.command = it->second;

  // Chain lengths.
  length = pick(length, file, "length");
  l_min = pick(l_min, file, "l-min");
  l_max = pick(l_max, file, "l-max");
  l_step = pick(l_step, file, "l-step");
  if (length && (l_min || l_max)) throw UsageError("give either --length or an L range");
  if (length) {
    cfg.lengths = {*length};
  } else if (l_min || l_max) {
    if (!l_min || !l_max) throw UsageError("an L range needs both --l-min and --l-max");
    const int step = l_step.value_or(2);
    if (step <= 0) throw UsageError("--l-step must be positive");
    for (int l = *l_min; l <= *l_max; l += step) cfg.lengths.push_back(l);
    if (cfg.lengths.empty()) throw UsageError("empty L range");
  }
  for (int l : cfg.lengths) {
    if (l < 4 || l % 2 != 0) {
      throw UsageError("chain lengths must be even and >= 4 (got " + std::to_string(l) + ")");
    }
  }

  if (auto v = pick_text(j, file, "j")) cfg.j = parse_double(*v, "j");
  if (auto v = pick_text(jp, file, "jp")) cfg.jp = parse_list(*v, "jp");
  if (cfg.jp.empty()) throw UsageError("--jp needs at least one value");
  if (!(cfg.j > 0.0)) throw UsageError("--j must be positive");
  for (double x : cfg.jp) {
    if (!(x > 0.0)) throw UsageError("--jp values must be positive");
  }
  if (auto v = pick_text(gamma, file, "gamma"); v && *v != "auto" && *v != "\"auto\"") {
    cfg.gamma = parse_double(*v, "gamma");
    if (!(*cfg.gamma >= 0.0)) throw UsageError("--gamma must be non-negative");
  }

  const auto tmin = pick_text(temp_min, file, "temp-min");
  const auto tmax = pick_text(temp_max, file, "temp-max");
  const auto tpts = pick(temp_points, file, "temp-points");
  const auto tscale = pick(temp_scale, file, "temp-scale");
  cfg.temperature_given = tmin || tmax || tpts || tscale;
  if (tmin) cfg.temperature.min = parse_double(*tmin, "temp-min");
  if (tmax) cfg.temperature.max = parse_double(*tmax, "temp-max");
  if (tpts) cfg.temperature.points = *tpts;
  if (tscale) {
    if (*tscale != "lin" && *tscale != "log") throw UsageError("--temp-scale must be lin or log");
    cfg.temperature.log = *tscale == "log";
  }
  if (tmin && !tmax && cfg.temperature.points == 1) cfg.temperature.max = cfg.temperature.min;
  if (cfg.temperature.points < 1) throw UsageError("--temp-points must be >= 1");
  if (cfg.temperature.min < 0.0 || cfg.temperature.max < cfg.temperature.min) {
    throw UsageError("temperature range must satisfy 0 <= min <= max");
  }
  if (cfg.temperature.log && cfg.temperature.points > 1 && !(cfg.temperature.min > 0.0)) {
    throw UsageError("log temperature grid needs a positive minimum");
  }

  if (auto v = pick_text(t_max, file, "t-max")) {
    cfg.t_max = parse_double(*v, "t-max");
    if (!(*cfg.t_max > 0.0)) throw UsageError("--t-max must be positive");
  }
  if (auto v = pick(t_points, file, "t-points")) cfg.t_points = *v;
  if (cfg.t_points < 2) throw UsageError("--t-points must be >= 2");

  if (auto v = pick(mode, file, "mode")) {
    if (*v == "effective") cfg.mode = Mode::kEffective;
    else if (*v == "full") cfg.mode = Mode::kFull;
    else throw UsageError("--mode must be effective or full");
  }
  if (auto v = pick_text(tol, file, "tol")) cfg.tol = parse_double(*v, "tol");
  if (auto v = pick_text(krylov_tol, file, "krylov-tol")) {
    cfg.krylov_tol = parse_double(*v, "krylov-tol");
  }
  if (!(cfg.tol > 0.0) || !(cfg.krylov_tol > 0.0)) throw UsageError("tolerances must be positive");
  if (auto v = pick(seed, file, "seed")) cfg.seed = *v;
  if (auto v = pick(format, file, "format")) {
    if (*v == "csv") cfg.format = Format::kCsv;
    else if (*v == "json") cfg.format = Format::kJson;
    else throw UsageError("--format must be csv or json");
  }
  if (auto v = pick(out, file, "out")) cfg.out = *v;

  return cfg;
}

}  // namespace spinchannel::cli
