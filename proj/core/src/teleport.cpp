// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/teleport.hpp"

#include <cmath>
#include <string>

#include "spinchannel/error.hpp"

namespace spinchannel {

DepolarizingChannel::DepolarizingChannel(double theta) : theta_(theta) {
  if (!(theta >= -1.0 / 3.0 - 1e-12 && theta <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::kDomain, "shrinking factor " + std::to_string(theta) +
                                        " outside [-1/3, 1]");
  }
}

DepolarizingChannel shrink_factor(const WernerParameter& g) {
  return DepolarizingChannel(-g.value());
}

QubitState apply_channel(const DepolarizingChannel& ch, const QubitState& qubit) {
  constexpr double kTol = 1e-12;
  if ((qubit - qubit.adjoint()).cwiseAbs().maxCoeff() > kTol) {
    throw Error(ErrorCode::kDomain, "input state is not Hermitian");
  }
  if (std::abs(qubit.trace() - 1.0) > kTol) {
    throw Error(ErrorCode::kDomain, "input state does not have unit trace");
  }
  // For a Hermitian 2x2 with unit trace, PSD <=> det >= 0.
  if (qubit.determinant().real() < -kTol) {
    throw Error(ErrorCode::kDomain, "input state is not positive semidefinite");
  }
  const double theta = ch.theta();
  return theta * qubit + (1.0 - theta) * 0.5 * QubitState::Identity();
}

double teleport_fidelity(const WernerParameter& g) { return 0.5 * (1.0 - g.value()); }

double threshold_temperature(const SpectralData& s) {
  const double excess = -s.gzz_ground - 1.0 / 3.0;
  if (!(excess > 0.0)) {
    throw Error(ErrorCode::kNoThreshold,
                "probes not entangled at T = 0 (gzz_ground >= -1/3); no threshold exists");
  }
  const double ratio = (s.gzz_triplet + 2.0 * s.gxx_triplet + 1.0) / excess;
  if (!(ratio > 1.0)) {
    throw Error(ErrorCode::kNoThreshold,
                "thermal mixture stays entangled at all temperatures of the truncation");
  }
  return s.gap / std::log(ratio);
}

FidelityCurve fidelity_curve(const SpectralData& spectral, const ChainSpec& spec,
                             std::span<const double> temperatures) {
  FidelityCurve curve;
  curve.spec = spec;
  curve.spectral = spectral;
  curve.temperatures.assign(temperatures.begin(), temperatures.end());
  curve.g.reserve(temperatures.size());
  curve.fidelities.reserve(temperatures.size());
  for (double t : temperatures) {
    const auto g = thermal_g(spectral, t);
    curve.g.push_back(g.value());
    curve.fidelities.push_back(teleport_fidelity(g));
  }
  try {
    curve.t_star = threshold_temperature(spectral);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoThreshold) throw;
  }
  return curve;
}

FidelityCurve fidelity_curve(const ChainSpec& spec, std::span<const double> temperatures,
                             const LanczosOptions& opts) {
  return fidelity_curve(spectral_data(spec, opts), spec, temperatures);
}

}  // namespace spinchannel
