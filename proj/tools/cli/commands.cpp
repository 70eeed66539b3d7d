// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "spinchannel/spinchannel.hpp"

namespace spinchannel::cli {

namespace {

using nlohmann::json;

constexpr int kFullModeMaxLength = 16;

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string line;
  for (const auto& c : cells) {
    if (!line.empty()) line += ',';
    line += c;
  }
  line += '\n';
  return line;
}

std::string format_int(long long v) { return std::to_string(v); }

LanczosOptions eigen_options(const RunConfig& cfg) {
  LanczosOptions o;
  o.tol = cfg.tol;
  o.seed = cfg.seed;
  return o;
}

json sidecar_skeleton(const RunConfig& cfg) {
  return json{{"config", cfg.to_json()},
              {"results", json::object()},
              {"derived", json::object()},
              {"warnings", json::array()}};
}

json spectral_json(const SpectralData& s) {
  return json{{"e0", s.e0},
              {"e_triplet", s.e_triplet},
              {"gap", s.gap},
              {"gzz_ground", s.gzz_ground},
              {"gzz_triplet", s.gzz_triplet},
              {"gxx_triplet", s.gxx_triplet}};
}

std::string default_path(const RunConfig& cfg, const char* ext) {
  return cfg.out.empty() ? std::string(to_string(cfg.command)) + ext : cfg.out;
}

// Packs a CSV table plus sidecar, or a single JSON document, per --format.
CommandOutput finish(const RunConfig& cfg, const std::string& csv, json sidecar, json rows) {
  CommandOutput out;
  if (cfg.format == Format::kCsv) {
    out.data = csv;
    out.data_path = default_path(cfg, ".csv");
    out.sidecar = sidecar.dump(2) + "\n";
    out.sidecar_path = sidecar_path_for(out.data_path);
  } else {
    sidecar["results"]["rows"] = std::move(rows);
    out.data = sidecar.dump(2) + "\n";
    out.data_path = default_path(cfg, ".json");
  }
  return out;
}

int single_length(const RunConfig& cfg) {
  if (cfg.lengths.size() != 1) {
    throw UsageError(std::string(to_string(cfg.command)) + " needs exactly one chain length (--length)");
  }
  return cfg.lengths.front();
}

double single_jp(const RunConfig& cfg) {
  if (cfg.jp.size() != 1) {
    throw UsageError(std::string(to_string(cfg.command)) + " needs exactly one --jp value");
  }
  return cfg.jp.front();
}

double single_temperature(const RunConfig& cfg) {
  if (!cfg.temperature_given) return 0.0;
  const auto temps = cfg.temperature.values();
  if (temps.size() != 1) {
    throw UsageError(std::string(to_string(cfg.command)) + " takes a single temperature (--temp-min)");
  }
  return temps.front();
}

double werner_at(const SpectralData& s, double temperature) {
  if (temperature == 0.0) {
    return std::clamp(s.gzz_ground, WernerParameter::kMin, WernerParameter::kMax);
  }
  return thermal_g(s, temperature).value();
}

// Peak of the three-site model; closed form at gamma = J_eff, scan otherwise.
Peak effective_peak(const EffectiveModel& m, std::optional<double> t_max) {
  if (commensurate(m)) return Peak{optimal_time(m), max_fidelity(WernerParameter(m.g))};
  const double slowest = m.gamma > 0.0 ? std::min(m.j_eff, m.gamma) : m.j_eff;
  return numeric_peak(m, t_max.value_or(8.0 * std::numbers::pi / slowest));
}

std::vector<int> alpha_lengths(int length) {
  const int start = std::max(8, length - 6);
  return {start, start + 2, start + 4, start + 6};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string sidecar_path_for(const std::string& data_path) {
  const auto slash = data_path.find_last_of('/');
  const auto dot = data_path.find_last_of('.');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  if (has_ext && data_path.substr(dot) != ".json") return data_path.substr(0, dot) + ".json";
  return data_path + ".json";
}

CommandOutput cmd_gap_scan(const RunConfig& cfg) {
  if (cfg.lengths.empty()) throw UsageError("gap-scan needs --length or an L range");
  const auto opts = eigen_options(cfg);
  auto sidecar = sidecar_skeleton(cfg);
  std::string csv = csv_line({"L", "jp", "gap", "e0"});
  json rows = json::array();
  json fits = json::array();
  json missing = json::object();

  for (double jp : cfg.jp) {
    const auto table = gap_sweep(cfg.lengths, jp, cfg.j, opts);
    for (const auto& r : table.rows) {
      csv += csv_line({format_int(r.length), format_double(r.jp), format_double(r.gap),
                       format_double(r.e0)});
      rows.push_back({{"L", r.length}, {"jp", r.jp}, {"gap", r.gap}, {"e0", r.e0}});
    }
    for (const auto& w : table.warnings) sidecar["warnings"].push_back(w);
    if (!table.missing.empty()) missing[format_double(jp)] = table.missing;

    json fit_entry{{"jp", jp}};
    try {
      const auto fit = fit_power_law(table);
      fit_entry.update({{"c", fit.c},
                        {"alpha", fit.alpha},
                        {"r_squared", fit.r_squared},
                        {"points", fit.points},
                        {"degenerate", fit.degenerate}});
      if (fit.degenerate) {
        sidecar["warnings"].push_back("jp = " + format_double(jp) +
                                      ": constant gaps, power-law fit is degenerate");
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInsufficientData) throw;
      fit_entry.update({{"c", nullptr}, {"alpha", nullptr}, {"r_squared", nullptr}});
      sidecar["warnings"].push_back("jp = " + format_double(jp) + ": " + e.what());
    }
    fits.push_back(fit_entry);
  }
  sidecar["results"]["fits"] = fits;
  sidecar["results"]["missing"] = missing;

  auto out = finish(cfg, csv, sidecar, rows);
  if (!missing.empty()) {
    out.exit_code = 1;
    out.error = json{{"error",
                      {{"code", "sweep-failure"},
                       {"command", "gap-scan"},
                       {"message", "some chain lengths failed to converge"},
                       {"missing", missing}}}};
  }
  return out;
}

CommandOutput cmd_teleport(const RunConfig& cfg) {
  const int length = single_length(cfg);
  const double jp = single_jp(cfg);
  const auto temps = cfg.temperature.values();
  for (double t : temps) {
    if (!(t > 0.0)) throw UsageError("teleport temperatures must be positive");
  }
  const ChainSpec spec{length, cfg.j, jp, std::nullopt};
  const auto curve = fidelity_curve(spec, temps, eigen_options(cfg));

  auto sidecar = sidecar_skeleton(cfg);
  std::string csv = csv_line({"T", "g", "theta", "fidelity"});
  json rows = json::array();
  for (std::size_t i = 0; i < temps.size(); ++i) {
    const double theta = -curve.g[i];
    csv += csv_line({format_double(temps[i]), format_double(curve.g[i]), format_double(theta),
                     format_double(curve.fidelities[i])});
    rows.push_back({{"T", temps[i]}, {"g", curve.g[i]}, {"theta", theta},
                    {"fidelity", curve.fidelities[i]}});
  }
  auto& res = sidecar["results"];
  res = spectral_json(curve.spectral);
  res["t_star"] = curve.t_star ? json(*curve.t_star) : json(nullptr);
  sidecar["derived"] = {{"zero_temperature_fidelity", 0.5 * (1.0 - curve.spectral.gzz_ground)},
                        {"t_star_over_gap",
                         curve.t_star ? json(*curve.t_star / curve.spectral.gap) : json(nullptr)}};
  if (!curve.t_star) {
    sidecar["warnings"].push_back("probes never cross the separability edge; T* undefined");
  }
  if (!temps.empty() && temps.back() > 0.5 * curve.spectral.gap) {
    sidecar["warnings"].push_back(
        "temperatures above gap/2 = " + format_double(0.5 * curve.spectral.gap) +
        ": the ground + triplet truncation neglects higher levels there");
  }
  return finish(cfg, csv, sidecar, rows);
}

namespace {

CommandOutput transfer_effective(const RunConfig& cfg) {
  if (cfg.lengths.empty()) throw UsageError("transfer needs --length or an L range");
  std::vector<double> temps{0.0};
  if (cfg.temperature_given) temps = cfg.temperature.values();
  const auto opts = eigen_options(cfg);

  auto sidecar = sidecar_skeleton(cfg);
  std::string csv = csv_line({"L", "jp", "T", "g", "jeff", "tstar", "fstar"});
  json rows = json::array();
  json series = json::array();

  for (double jp : cfg.jp) {
    const auto table = gap_sweep(cfg.lengths, jp, cfg.j, opts);
    if (!table.missing.empty()) {
      throw Error(ErrorCode::kConvergence, "spectral data failed for some chain lengths");
    }
    for (const auto& w : table.warnings) sidecar["warnings"].push_back(w);

    double alpha = 0.0;
    std::string alpha_source;
    try {
      alpha = fit_power_law(table).alpha;
      alpha_source = "fit over the requested L range";
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInsufficientData) throw;
      const auto lengths = alpha_lengths(cfg.lengths.back());
      alpha = fit_power_law(gap_sweep(lengths, jp, cfg.j, opts)).alpha;
      alpha_source = "auxiliary fit over L = " + std::to_string(lengths.front()) + ".." +
                     std::to_string(lengths.back());
    }

    json validity = json::array();
    for (const auto& row : table.rows) {
      const ChainSpec spec{row.length, cfg.j, jp, std::nullopt};
      const auto spectral = spectral_data(spec, opts);
      for (double t : temps) {
        if (t < 0.0) throw UsageError("temperatures must be non-negative");
        auto model = effective_model(spec, spectral.gap, alpha);
        model.gamma = cfg.gamma.value_or(spectral.gap);
        model.g = werner_at(spectral, t);
        const auto peak = effective_peak(model, cfg.t_max);
        csv += csv_line({format_int(row.length), format_double(jp), format_double(t),
                         format_double(model.g), format_double(model.j_eff),
                         format_double(peak.t_star), format_double(peak.f_star)});
        rows.push_back({{"L", row.length}, {"jp", jp}, {"T", t}, {"g", model.g},
                        {"jeff", model.j_eff}, {"tstar", peak.t_star}, {"fstar", peak.f_star}});
      }
      validity.push_back({{"L", row.length},
                          {"valid", validity_window(jp, cfg.j, alpha, row.length)}});
    }
    series.push_back({{"jp", jp},
                      {"alpha", alpha},
                      {"alpha_source", alpha_source},
                      {"validity", validity}});
  }
  sidecar["results"]["series"] = series;
  sidecar["config"]["gamma_resolved"] =
      cfg.gamma ? json(*cfg.gamma) : json("J_eff of each row");
  return finish(cfg, csv, sidecar, rows);
}

CommandOutput transfer_full(const RunConfig& cfg) {
  const int length = single_length(cfg);
  const double jp = single_jp(cfg);
  if (length > kFullModeMaxLength) {
    throw UsageError("full mode is limited to L <= " + std::to_string(kFullModeMaxLength) +
                     "; use --mode effective for longer chains");
  }
  const double temperature = single_temperature(cfg);
  if (temperature < 0.0) throw UsageError("temperature must be non-negative");
  const auto opts = eigen_options(cfg);

  ChainSpec spec{length, cfg.j, jp, std::nullopt};
  const auto states = chain_eigenstates(spec, opts);
  const double gap = states.spectral.gap;
  spec.gamma = cfg.gamma.value_or(gap);

  const double alpha = fit_power_law(gap_sweep(alpha_lengths(length), jp, cfg.j, opts)).alpha;
  auto model = effective_model(spec, gap, alpha);
  model.g = werner_at(states.spectral, temperature);
  const auto predicted = effective_peak(model, cfg.t_max);

  const double t_max = cfg.t_max.value_or(2.0 * predicted.t_star);
  std::vector<double> times(static_cast<std::size_t>(cfg.t_points));
  for (int i = 0; i < cfg.t_points; ++i) {
    times[static_cast<std::size_t>(i)] = t_max * i / (cfg.t_points - 1);
  }

  FullChainOptions fopts;
  fopts.krylov_tol = cfg.krylov_tol;
  fopts.eigen = opts;
  const auto curve = full_chain_transfer(spec, states, temperature, times, fopts);

  auto sidecar = sidecar_skeleton(cfg);
  std::string csv = csv_line({"t", "theta", "fidelity"});
  json rows = json::array();
  for (std::size_t i = 0; i < times.size(); ++i) {
    csv += csv_line({format_double(times[i]), format_double(curve.theta[i]),
                     format_double(curve.fidelities[i])});
    rows.push_back({{"t", times[i]}, {"theta", curve.theta[i]}, {"fidelity", curve.fidelities[i]}});
  }
  sidecar["config"]["gamma_resolved"] = *spec.gamma;
  sidecar["config"]["temperature_resolved"] = temperature;
  sidecar["results"] = {{"t_star", curve.t_star},
                        {"f_star", curve.f_star},
                        {"max_norm_drift", curve.max_norm_drift},
                        {"spectral", spectral_json(states.spectral)}};
  sidecar["derived"] = {
      {"effective",
       {{"j_eff", model.j_eff},
        {"gamma", model.gamma},
        {"g", model.g},
        {"t_star", predicted.t_star},
        {"f_star", predicted.f_star},
        {"alpha", alpha},
        {"valid", model.valid}}},
      {"deviation",
       {{"f_star_abs", std::abs(curve.f_star - predicted.f_star)},
        {"t_star_rel", std::abs(curve.t_star - predicted.t_star) / predicted.t_star}}}};
  if (!model.valid) {
    sidecar["warnings"].push_back("(Jp/J)^2 >= L^(alpha-1): effective two-probe model not trusted");
  }
  return finish(cfg, csv, sidecar, rows);
}

}  // namespace

CommandOutput cmd_transfer(const RunConfig& cfg) {
  return cfg.mode == Mode::kEffective ? transfer_effective(cfg) : transfer_full(cfg);
}

CommandOutput cmd_share(const RunConfig& cfg) {
  const int length = single_length(cfg);
  const double jp = single_jp(cfg);
  const double temperature = single_temperature(cfg);
  const ChainSpec spec{length, cfg.j, jp, std::nullopt};
  const auto spectral = spectral_data(spec, eigen_options(cfg));
  const auto report = sharing_report(WernerParameter(werner_at(spectral, temperature)));

  auto doc = sidecar_skeleton(cfg);
  doc["results"] = {{"g", report.g},
                    {"f_star", report.f_star},
                    {"p", report.error_probability},
                    {"concurrence_out", report.concurrence_out},
                    {"concurrence_in", report.concurrence_in},
                    {"enhancement_margin", report.enhancement()}};
  doc["derived"] = {{"spectral", spectral_json(spectral)}, {"temperature", temperature}};
  CommandOutput out;
  out.data = doc.dump(2) + "\n";
  out.data_path = cfg.out.empty() ? "share.json" : cfg.out;
  return out;
}

CommandOutput run_command(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::kGapScan: return cmd_gap_scan(cfg);
    case Command::kTeleport: return cmd_teleport(cfg);
    case Command::kTransfer: return cmd_transfer(cfg);
    case Command::kShare: return cmd_share(cfg);
    case Command::kValidate: return cmd_validate(cfg);
  }
  throw UsageError("unknown command");
}

namespace {

json error_record(std::string_view code, const std::string& message, const std::string& command) {
  return json{{"error", {{"code", code}, {"command", command}, {"message", message}}}};
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  f << text;
  return static_cast<bool>(f);
}

}  // namespace

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> cfg;
  try {
    cfg = parse_run_config(args);
  } catch (const UsageError& e) {
    err << error_record("usage", e.what(), args.empty() ? "" : args.front()).dump() << "\n";
    return 2;
  }
  if (!cfg) return 0;

  const std::string command(to_string(cfg->command));
  CommandOutput result;
  try {
    result = run_command(*cfg);
  } catch (const UsageError& e) {
    err << error_record("usage", e.what(), command).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    err << error_record(to_string(e.code()), e.what(), command).dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << error_record("internal", e.what(), command).dump() << "\n";
    return 1;
  }

  if (!result.data_path.empty() && !write_file(result.data_path, result.data)) {
    err << error_record("io", "cannot write " + result.data_path, command).dump() << "\n";
    return 1;
  }
  if (result.sidecar && !write_file(result.sidecar_path, *result.sidecar)) {
    err << error_record("io", "cannot write " + result.sidecar_path, command).dump() << "\n";
    return 1;
  }
  out << result.console;
  if (result.error) err << result.error->dump() << "\n";
  return result.exit_code;
}

}  // namespace spinchannel::cli
