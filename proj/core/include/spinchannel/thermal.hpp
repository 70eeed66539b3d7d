// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "spinchannel/eigensolve.hpp"

namespace spinchannel {

/// g = <s^z_A s^z_B> of an SU(2)-invariant two-qubit state. Valid range is
/// [-1, 1/3]; the state is entangled iff g < -1/3.
class WernerParameter {
 public:
  static constexpr double kMin = -1.0;
  static constexpr double kMax = 1.0 / 3.0;
  static constexpr double kSeparable = -1.0 / 3.0;

  /// Throws Error(kDomain) outside [-1, 1/3] (with 1e-12 slack, clamped).
  explicit WernerParameter(double g);

  [[nodiscard]] double value() const noexcept { return g_; }
  [[nodiscard]] bool entangled() const noexcept { return g_ < kSeparable; }

 private:
  double g_;
};

/// Boltzmann weight of one triplet member relative to the ground state.
double triplet_weight(double gap, double temperature);

/// Werner parameter of the ground + triplet mixture at temperature T > 0:
/// g = [gzz_G + w (gzz_1 + 2 gxx_1)] / (1 + 3 w),  w = exp(-gap / T).
WernerParameter thermal_g(const SpectralData& spectral, double temperature);

/// Unclamped version used by root finders.
double thermal_g_value(const SpectralData& spectral, double temperature);

/// rho = I/4 + (g/4) sigma_A . sigma_B in the basis {uu, ud, du, dd}.
Eigen::Matrix4d werner_density_matrix(const WernerParameter& g);

}  // namespace spinchannel
