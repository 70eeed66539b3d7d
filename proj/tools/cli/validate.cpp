// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "spinchannel/spinchannel.hpp"

namespace spinchannel::cli {

namespace {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

CheckResult check_lanczos_vs_dense(const LanczosOptions& opts) {
  double worst = 0.0;
  for (int length = 4; length <= 10; length += 2) {
    for (double jp : {0.1, 0.5, 1.0}) {
      const ChainSpec spec{length, 1.0, jp, std::nullopt};
      for (int m2 = -length; m2 <= length; m2 += 2) {
        const Sector sector(length, m2);
        const auto h = build_chain_hamiltonian(spec, sector);
        const auto dense = dense_spectrum(h);
        const std::size_t k = std::min<std::size_t>(2, sector.dim());
        const auto pairs = lowest_eigenpairs(h, k, opts);
        for (std::size_t i = 0; i < k; ++i) {
          worst = std::max(worst, std::abs(pairs[i].energy - dense[i]));
        }
      }
    }
  }
  return {"lanczos-vs-dense", worst <= 1e-9, "max |dE| = " + sci(worst)};
}

CheckResult check_closed_form(const ValidationHooks& hooks) {
  double worst = 0.0;
  const Eigen::Vector2cd xi(std::complex<double>(0.6, 0.0), std::complex<double>(0.0, 0.8));
  for (double gamma_ratio : {1.0, 0.6}) {
    for (double g : {-1.0, -0.5, 0.0, 1.0 / 3.0}) {
      EffectiveModel m;
      m.j_eff = 0.37;
      m.gamma = gamma_ratio * m.j_eff;
      m.g = g;
      for (int i = 0; i < 1000; ++i) {
        const double t = 4.0 * std::numbers::pi / m.j_eff * i / 999.0;
        worst = std::max(worst, std::abs(hooks.closed_form(m, t) - three_site_oracle(m, t, xi)));
      }
    }
  }
  return {"closed-form-vs-three-site", worst <= 1e-10, "max |df| = " + sci(worst)};
}

double bisect_threshold(const SpectralData& s) {
  double lo = s.gap * 1e-3;
  double hi = s.gap;
  while (thermal_g_value(s, hi) < -1.0 / 3.0) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (thermal_g_value(s, mid) < -1.0 / 3.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CheckResult check_threshold(const LanczosOptions& opts) {
  SpectralData two_spin;
  two_spin.gap = 1.0;
  two_spin.gzz_ground = -1.0;
  two_spin.gzz_triplet = 1.0;
  two_spin.gxx_triplet = 0.0;
  const double d1 = std::abs(threshold_temperature(two_spin) - 1.0 / std::log(3.0));

  const auto s = spectral_data(ChainSpec{8, 1.0, 0.2, std::nullopt}, opts);
  const double closed = threshold_temperature(s);
  const double d2 = std::abs(closed - bisect_threshold(s));
  return {"threshold-bisection", d1 <= 1e-12 && d2 <= 1e-10,
          "two-spin " + sci(d1) + ", L=8 " + sci(d2)};
}

CheckResult check_channel() {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n01;
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double theta = -1.0 / 3.0 + (4.0 / 3.0) * k / 19.0;
    const DepolarizingChannel ch(theta);
    for (int s = 0; s < 100; ++s) {
      Eigen::Vector2cd psi(std::complex<double>(n01(rng), n01(rng)),
                           std::complex<double>(n01(rng), n01(rng)));
      psi.normalize();
      const QubitState xi = psi * psi.adjoint();
      const double f = (xi * apply_channel(ch, xi)).trace().real();
      worst = std::max(worst, std::abs(f - 0.5 * (1.0 + theta)));
    }
  }
  return {"channel-state-independence", worst <= 1e-12, "max |df| = " + sci(worst)};
}

CheckResult check_enhancement() {
  double min_margin = 1.0;
  bool ok = true;
  for (int i = 0; i < 1000; ++i) {
    const double g = -1.0 + (4.0 / 3.0) * i / 999.0;
    const WernerParameter w(g);
    const double margin = sharing_concurrence(max_fidelity(w)) - werner_concurrence(w);
    if (i == 0) {
      ok = ok && std::abs(margin) <= 1e-12;
    } else {
      ok = ok && margin > 1e-12;
      min_margin = std::min(min_margin, margin);
    }
  }
  return {"enhancement-inequality", ok, "min margin (g > -1) = " + sci(min_margin)};
}

CheckResult check_constants(const ValidationHooks& hooks) {
  EffectiveModel m;
  m.j_eff = 0.5;
  m.gamma = 0.5;
  m.g = -1.0;
  const double t_star = optimal_time(m);
  const bool ok = max_fidelity(WernerParameter(0.0)) == 7.0 / 8.0 &&
                  sharing_concurrence(7.0 / 8.0) == 5.0 / 8.0 &&
                  std::abs(t_star - std::numbers::pi / m.j_eff) <= 1e-10 &&
                  std::abs(hooks.closed_form(m, t_star) - 1.0) <= 1e-12;
  return {"closed-form-constants", ok, "f*(0) = 7/8, C = 5/8, t*(-1) = pi/J_eff, f(t*) = 1"};
}

CheckResult check_full_chain(const LanczosOptions& opts) {
  ChainSpec spec{8, 1.0, 0.1, std::nullopt};
  const auto states = chain_eigenstates(spec, opts);
  spec.gamma = states.spectral.gap;
  EffectiveModel m = effective_model(spec, states.spectral.gap, 0.5);
  m.g = states.spectral.gzz_ground;
  const double t_eff = optimal_time(m);
  const double f_eff = max_fidelity(WernerParameter(m.g));
  std::vector<double> times(2001);
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = 2.0 * t_eff * i / 2000.0;
  const auto curve = full_chain_transfer(spec, states, 0.0, times);
  const double df = std::abs(curve.f_star - f_eff);
  const double dt = std::abs(curve.t_star - t_eff) / t_eff;
  return {"effective-vs-full-chain", df <= 0.05 && dt <= 0.1 && curve.f_star > 2.0 / 3.0,
          "|df*| = " + sci(df) + ", |dt*|/t* = " + sci(dt)};
}

}  // namespace

CommandOutput cmd_validate(const RunConfig& cfg, const ValidationHooks& hooks) {
  LanczosOptions opts;
  opts.tol = cfg.tol;
  opts.seed = cfg.seed;

  std::vector<CheckResult> checks;
  checks.push_back(check_lanczos_vs_dense(opts));
  checks.push_back(check_closed_form(hooks));
  checks.push_back(check_threshold(opts));
  checks.push_back(check_channel());
  checks.push_back(check_enhancement());
  checks.push_back(check_constants(hooks));
  checks.push_back(check_full_chain(opts));

  std::ostringstream table;
  std::vector<std::string> failed;
  for (const auto& c : checks) {
    char line[256];
    std::snprintf(line, sizeof(line), "%-28s %-4s %s\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                  c.detail.c_str());
    table << line;
    if (!c.pass) failed.push_back(c.name);
  }

  CommandOutput out;
  out.console = table.str();
  nlohmann::json report = nlohmann::json::array();
  for (const auto& c : checks) {
    report.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  if (!cfg.out.empty()) {
    out.data = nlohmann::json{{"checks", report}}.dump(2) + "\n";
    out.data_path = cfg.out;
  }
  if (!failed.empty()) {
    out.exit_code = 1;
    out.error = nlohmann::json{{"error",
                                {{"code", "validation-failure"},
                                 {"command", "validate"},
                                 {"message", "oracle checks failed"},
                                 {"failed", failed}}}};
  }
  return out;
}

}  // namespace spinchannel::cli
