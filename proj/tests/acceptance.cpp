// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

// Release gate: one line per acceptance criterion, nonzero exit on any FAIL.
// A FLAG line reports a tolerated discrepancy and does not fail the gate.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "oracles/oracles.hpp"
#include "spinchannel/spinchannel.hpp"

namespace {

using namespace spinchannel;
constexpr double kPi = std::numbers::pi;

enum class Verdict { kPass, kFail, kFlag };

struct Outcome {
  Verdict verdict;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

Outcome pass_if(bool ok, std::string detail) { return {ok ? Verdict::kPass : Verdict::kFail, std::move(detail)}; }

Outcome channel_exactness() {
  const auto states = oracle::random_qubits(100, 2026);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double theta = -1.0 / 3.0 + (4.0 / 3.0) * k / 19.0;
    const DepolarizingChannel ch(theta);
    for (const auto& v : states) {
      const QubitState xi = v * v.adjoint();
      const double f = (xi * apply_channel(ch, xi)).trace().real();
      worst = std::max(worst, std::abs(f - 0.5 * (1.0 + theta)));
    }
  }
  return pass_if(worst <= 1e-12, fmt("max |f - (1+theta)/2| = %.2e", worst));
}

Outcome threshold() {
  SpectralData two;
  two.gap = 1.0;
  two.gzz_ground = -1.0;
  two.gzz_triplet = 1.0;
  two.gxx_triplet = 0.0;
  const double d1 = std::abs(threshold_temperature(two) - 1.0 / std::log(3.0));
  const auto s = spectral_data(ChainSpec{8, 1.0, 0.2, std::nullopt});
  const double closed = threshold_temperature(s);
  const double bis = oracle::bisect([&](double t) { return thermal_g_value(s, t) + 1.0 / 3.0; },
                                    1e-3 * s.gap, 10.0 * s.gap, 1e-16);
  const double d2 = std::abs(closed - bis);
  return pass_if(d1 <= 1e-12 && d2 <= 1e-10,
                 fmt("two-spin |T* - gap/ln3| = %.2e; L=8 Jp=0.2 T* = %.10g, |closed - bisection| = %.2e", d1,
                     closed, d2));
}

Outcome closed_form_oracle() {
  const Eigen::Vector2cd xi(std::complex<double>(0.8, 0.0), std::complex<double>(0.36, 0.48));
  double worst = 0.0;
  for (double g : {-1.0, -0.5, 0.0, 1.0 / 3.0}) {
    EffectiveModel m;
    m.j_eff = 0.6;
    m.gamma = 0.6;
    m.g = g;
    for (int i = 0; i < 1000; ++i) {
      const double t = 4.0 * kPi / m.j_eff * i / 999.0;
      worst = std::max(worst, std::abs(closed_form_fidelity(m, t) - three_site_oracle(m, t, xi)));
    }
  }
  return pass_if(worst <= 1e-10, fmt("max |closed form - three-site| = %.2e over 4x1000 points", worst));
}

Outcome constants() {
  EffectiveModel m;
  m.j_eff = 0.25;
  m.gamma = 0.25;
  m.g = -1.0;
  const double t_star = optimal_time(m);
  const bool a = max_fidelity(WernerParameter(0.0)) == 7.0 / 8.0;
  const bool b = sharing_concurrence(7.0 / 8.0) == 5.0 / 8.0;
  const double dt = std::abs(t_star - kPi / m.j_eff);
  const double df = std::abs(closed_form_fidelity(m, t_star) - 1.0);
  return pass_if(a && b && dt <= 1e-10 && df <= 1e-12,
                 std::string("f*(0) == 7/8: ") + (a ? "yes" : "no") + ", C(7/8) == 5/8: " + (b ? "yes" : "no") +
                     fmt(", |t* - pi/J| = %.2e, |f(t*) - 1| = %.2e", dt, df));
}

Outcome worst_case_shift() {
  EffectiveModel m;
  m.j_eff = 1.0;
  m.gamma = 1.0;
  m.g = 1.0 / 3.0;
  const double shift = numeric_peak(m, 3.0 * kPi).t_star - kPi;
  const double rel = std::abs(shift - 1.448) / 1.448;
  const Verdict v = rel <= 0.1 ? Verdict::kPass : Verdict::kFlag;
  return {v, fmt("shift = %.6f/J_eff vs reference 1.448/J_eff, relative difference %.2f%%", shift, 100.0 * rel)};
}

Outcome eigensolver_oracle() {
  double worst = 0.0;
  for (int length = 2; length <= 10; length += 2) {
    for (double jp : {0.1, 0.5, 1.0}) {
      const ChainSpec spec{length, 1.0, jp, std::nullopt};
      for (int m2 = -length; m2 <= length; m2 += 2) {
        const auto sector = enumerate_sector(length, m2);
        const auto h = length == 2 ? build_bond_hamiltonian(std::vector<Bond>{{0, 1, 1.0}}, sector)
                                   : build_chain_hamiltonian(spec, sector);
        const auto dense = dense_spectrum(h);
        const std::size_t k = std::min<std::size_t>(2, h.dim());
        const auto pairs = lowest_eigenpairs(h, k);
        for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, std::abs(pairs[i].energy - dense[i]));
      }
    }
  }
  return pass_if(worst <= 1e-9, fmt("max |E_lanczos - E_dense| = %.2e", worst));
}

struct SweepCache {
  std::vector<int> lengths{8, 10, 12, 14, 16, 18, 20};
  std::vector<SpectralData> jp01;
};

Outcome gap_scaling(SweepCache& cache) {
  for (int l : cache.lengths) cache.jp01.push_back(spectral_data(ChainSpec{l, 1.0, 0.1, std::nullopt}));
  GapTable t01;
  for (std::size_t i = 0; i < cache.lengths.size(); ++i)
    t01.rows.push_back({cache.lengths[i], 0.1, cache.jp01[i].gap, cache.jp01[i].e0});
  const auto t02 = gap_sweep(cache.lengths, 0.2);
  if (!t02.missing.empty()) return {Verdict::kFail, "Jp=0.2 sweep has missing lengths"};
  const auto f1 = fit_power_law(t01);
  const auto f2 = fit_power_law(t02);
  const auto ok = [](const PowerLawFit& f) { return f.alpha > 0 && f.alpha < 1 && f.r_squared >= 0.98; };
  return pass_if(ok(f1) && ok(f2), fmt("Jp=0.1: alpha = %.4f, R2 = %.5f; ", f1.alpha, f1.r_squared) +
                                       fmt("Jp=0.2: alpha = %.4f, R2 = %.5f", f2.alpha, f2.r_squared));
}

Outcome effective_validity() {
  ChainSpec spec{8, 1.0, 0.1, std::nullopt};
  const auto states = chain_eigenstates(spec);
  spec.gamma = states.spectral.gap;
  EffectiveModel m;
  m.j_eff = m.gamma = states.spectral.gap;
  m.g = states.spectral.gzz_ground;
  const double t_eff = optimal_time(m);
  const double f_eff = max_fidelity(WernerParameter(m.g));
  std::vector<double> times(2001);
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = 2.0 * t_eff * i / 2000.0;
  const auto c = full_chain_transfer(spec, states, 0.0, times);
  const double df = std::abs(c.f_star - f_eff);
  const double dt = std::abs(c.t_star - t_eff) / t_eff;
  return pass_if(df <= 0.05 && dt <= 0.1 && c.f_star > 2.0 / 3.0,
                 fmt("f*: full %.6f vs effective %.6f, ", c.f_star, f_eff) +
                     fmt("t*: full %.2f vs effective %.2f (rel %.2e)", c.t_star, t_eff, dt));
}

Outcome enhancement() {
  bool ok = true;
  double min_margin = 1.0;
  for (int i = 0; i < 1000; ++i) {
    const WernerParameter g(-1.0 + (4.0 / 3.0) * i / 999.0);
    const double margin = sharing_concurrence(max_fidelity(g)) - werner_concurrence(g);
    if (i == 0) {
      ok = ok && std::abs(margin) <= 1e-12;
    } else {
      ok = ok && margin > 1e-12;
      min_margin = std::min(min_margin, margin);
    }
  }
  return pass_if(ok, fmt("equality at g = -1 only; smallest margin elsewhere = %.3e", min_margin));
}

Outcome figure_shapes(const SweepCache& cache) {
  std::vector<double> temps(300);
  for (std::size_t i = 0; i < temps.size(); ++i) temps[i] = 1e-6 * std::pow(1e5, i / 299.0);
  std::vector<double> f0;
  bool monotone = true;
  bool crossing = true;
  std::string detail;
  for (double jp : {0.1, 0.2, 0.3}) {
    const auto c = fidelity_curve(ChainSpec{12, 1.0, jp, std::nullopt}, temps);
    f0.push_back(c.fidelities.front());
    for (std::size_t i = 1; i < temps.size(); ++i) monotone = monotone && c.fidelities[i] <= c.fidelities[i - 1];
    bool found = false;
    for (std::size_t i = 1; i < temps.size() && c.t_star; ++i) {
      if (c.fidelities[i - 1] > 2.0 / 3.0 && c.fidelities[i] <= 2.0 / 3.0) {
        found = *c.t_star > temps[i - 1] && *c.t_star <= temps[i];
      }
    }
    crossing = crossing && found;
    detail += fmt("Jp=%.1f: f(T->0) = %.4f, T* = %.4e; ", jp, c.fidelities.front(), c.t_star.value_or(NAN));
  }
  const bool ordered = f0[0] > f0[1] && f0[1] > f0[2];

  bool degraded = true;
  for (const auto& s : cache.jp01) {
    const double cold = max_fidelity(WernerParameter(s.gzz_ground));
    const double warm = max_fidelity(thermal_g(s, 1e-3));
    degraded = degraded && warm < cold && warm > 2.0 / 3.0;
  }
  detail += std::string("monotone: ") + (monotone ? "yes" : "no") + ", ordered: " + (ordered ? "yes" : "no") +
            ", crosses 2/3 at T*: " + (crossing ? "yes" : "no") +
            ", transfer f*(T=1e-3) < f*(0) for L=8..20: " + (degraded ? "yes" : "no");
  return pass_if(monotone && ordered && crossing && degraded, detail);
}

}  // namespace

int main() {
  SweepCache cache;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"depolarizing-channel exactness", channel_exactness},
      {"threshold temperature", threshold},
      {"closed-form oracle equivalence", closed_form_oracle},
      {"closed-form constants", constants},
      {"worst-case optimal-time shift", worst_case_shift},
      {"eigensolver oracle", eigensolver_oracle},
      {"gap scaling", [&] { return gap_scaling(cache); }},
      {"effective-model validity", effective_validity},
      {"enhancement inequality", enhancement},
      {"figure-shape reproduction", [&] { return figure_shapes(cache); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {Verdict::kFail, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* tag = o.verdict == Verdict::kPass ? "PASS" : o.verdict == Verdict::kFail ? "FAIL" : "FLAG";
    if (o.verdict == Verdict::kFail) ++failures;
    std::printf("[%s] criterion %2zu  %-32s %s (%.2f s)\n", tag, i + 1, criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
