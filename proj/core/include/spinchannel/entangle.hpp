// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "spinchannel/thermal.hpp"

namespace spinchannel {

struct SharingResult {
  double g = 0.0;
  double f_star = 0.0;
  double error_probability = 0.0;
  double concurrence_out = 0.0;
  double concurrence_in = 0.0;

  [[nodiscard]] double enhancement() const noexcept { return concurrence_out - concurrence_in; }
};

/// max(-3g/2 - 1/2, 0).
double werner_concurrence(const WernerParameter& g);

/// Concurrence of half a singlet sent through a channel with peak fidelity
/// f*: max(3 f* - 2, 0).
double sharing_concurrence(double f_star);

/// Throws Error(kInternalConsistency) if C_out < C_in.
SharingResult sharing_report(const WernerParameter& g);

/// (1 - p) rho_in + (p/3) sum_k (I x s^k) rho_in (I x s^k) with rho_in the
/// singlet.
Eigen::Matrix4cd shared_singlet_state(double error_probability);

}  // namespace spinchannel
