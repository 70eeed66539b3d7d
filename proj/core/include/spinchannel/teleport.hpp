// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spinchannel/thermal.hpp"

namespace spinchannel {

using QubitState = Eigen::Matrix2cd;

/// Lambda(xi) = theta xi + (1 - theta) I/2, theta in [-1/3, 1].
class DepolarizingChannel {
 public:
  explicit DepolarizingChannel(double theta);

  [[nodiscard]] double theta() const noexcept { return theta_; }
  [[nodiscard]] bool ideal() const noexcept { return theta_ == 1.0; }
  /// p = 3 (1 - theta) / 4.
  [[nodiscard]] double error_probability() const noexcept { return 0.75 * (1.0 - theta_); }

 private:
  double theta_;
};

DepolarizingChannel shrink_factor(const WernerParameter& g);

/// Throws Error(kDomain) unless `qubit` is Hermitian, unit-trace and PSD.
QubitState apply_channel(const DepolarizingChannel& ch, const QubitState& qubit);

/// f = (1 - g) / 2, independent of the teleported state.
double teleport_fidelity(const WernerParameter& g);

/// Temperature at which thermal_g crosses -1/3.
/// Throws Error(kNoThreshold) when the ground state is not entangled or the
/// mixture never reaches the separability edge.
double threshold_temperature(const SpectralData& spectral);

struct FidelityCurve {
  ChainSpec spec;
  SpectralData spectral;
  std::vector<double> temperatures;
  std::vector<double> g;
  std::vector<double> fidelities;
  std::optional<double> t_star;
};

/// One spectral_data call, then thermal_g and teleport_fidelity per grid point.
FidelityCurve fidelity_curve(const ChainSpec& spec, std::span<const double> temperatures,
                             const LanczosOptions& opts = {});
FidelityCurve fidelity_curve(const SpectralData& spectral, const ChainSpec& spec,
                             std::span<const double> temperatures);

}  // namespace spinchannel
