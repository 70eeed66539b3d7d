// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "spinchannel/eigensolve.hpp"
#include "spinchannel/thermal.hpp"

namespace spinchannel {

/// Probes A and B replaced by H_eff = J_eff S_A.S_B, with a sender coupled
/// to A by gamma and an initial probe state of Werner parameter g.
struct EffectiveModel {
  double j_eff = 0.0;
  double gamma = 0.0;
  double g = -1.0;

  /// Whether (Jp/J)^2 < L^(alpha - 1) held for the inputs below.
  bool valid = false;
  int length = 0;
  double jp_over_j = 0.0;
  double alpha = 0.0;
};

struct Frequencies {
  double omega = 0.0;
  double omega_plus = 0.0;
  double omega_minus = 0.0;
};

Frequencies frequencies(double j_eff, double gamma);

/// J_eff = singlet-triplet gap of `spec`. `gamma` defaults to J_eff. When
/// `alpha` is absent it is fitted from a four-point gap sweep starting at
/// max(8, L - 6).
EffectiveModel effective_coupling(const ChainSpec& spec, std::optional<double> alpha,
                                  const LanczosOptions& opts = {});

/// Same, reusing an already computed gap.
EffectiveModel effective_model(const ChainSpec& spec, double gap, double alpha);

/// Closed-form transfer fidelity of the three-site model at time t >= 0.
double closed_form_fidelity(const EffectiveModel& model, double t);

/// True when gamma equals J_eff to relative precision 1e-9.
bool commensurate(const EffectiveModel& model);

/// First maximum of closed_form_fidelity in the commensurate case.
/// Throws Error(kUnsupportedRegime) otherwise.
double optimal_time(const EffectiveModel& model);

/// Peak fidelity f* (commensurate case) as a function of g.
double max_fidelity(const WernerParameter& g);

struct Peak {
  double t_star = 0.0;
  double f_star = 0.0;
};

/// Scan of [0, t_max] with at least 1e4 points followed by golden-section
/// refinement of the first interior local maximum to 1e-10 in t.
/// Throws Error(kFlatCurve) when no interior maximum exists.
Peak numeric_peak(const EffectiveModel& model, double t_max);

/// Same scan for an arbitrary fidelity function.
template <class F>
Peak numeric_peak_of(F&& f, double t_max);

/// Exact evolution of the 8-dimensional S-A-B problem starting from
/// |xi><xi| x rho_AB(g). Returns Tr(rho(t) |xi><xi|_B).
double three_site_oracle(const EffectiveModel& model, double t, const Eigen::Vector2cd& xi);

enum class TransferMode { kClosedForm, kFullChain };

struct TransferCurve {
  std::vector<double> times;
  std::vector<double> theta;
  std::vector<double> sigma_z_b;  // raw <s^z_B(t)>, full-chain mode only
  std::vector<double> fidelities;
  double t_star = 0.0;
  double f_star = 0.0;
  TransferMode mode = TransferMode::kClosedForm;
  /// Largest |norm - 1| over all propagated branches and grid times.
  double max_norm_drift = 0.0;
};

/// Closed-form curve sampled on a time grid; peak from numeric_peak-style
/// refinement over the grid span.
TransferCurve closed_form_curve(const EffectiveModel& model, std::span<const double> times);

struct FullChainOptions {
  double krylov_tol = 1e-10;
  std::size_t krylov_dim = 30;
  /// Sender prepared in |up> (true) or |down> (false).
  bool sender_up = true;
  LanczosOptions eigen{};
};

/// Real-time evolution under H_chain + gamma S_S.S_A of the sender spin
/// times the ground + triplet thermal mixture at temperature T (T = 0 keeps
/// only the ground state). theta(t) = +-<s^z_B(t)> for a sender in up/down;
/// f(t) = (1 + theta)/2. The peak is the largest sampled fidelity.
TransferCurve full_chain_transfer(const ChainSpec& spec, double temperature,
                                  std::span<const double> times,
                                  const FullChainOptions& opts = {});

/// Same, reusing eigenstates computed for `spec` without a sender.
TransferCurve full_chain_transfer(const ChainSpec& spec, const ChainEigenstates& states,
                                  double temperature, std::span<const double> times,
                                  const FullChainOptions& opts = {});

}  // namespace spinchannel

#include "spinchannel/detail/numeric_peak.ipp"
