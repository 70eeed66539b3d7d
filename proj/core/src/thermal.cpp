// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinchannel/error.hpp"

namespace spinchannel {

namespace {
constexpr double kRangeSlack = 1e-12;
}

WernerParameter::WernerParameter(double g) : g_(g) {
  if (!(g >= kMin - kRangeSlack && g <= kMax + kRangeSlack)) {
    throw Error(ErrorCode::kDomain,
                "Werner parameter " + std::to_string(g) + " outside [-1, 1/3]");
  }
  g_ = std::clamp(g, kMin, kMax);
}

double triplet_weight(double gap, double temperature) {
  if (!(temperature > 0.0)) {
    throw Error(ErrorCode::kDomain, "temperature must be positive");
  }
  if (!(gap > 0.0)) throw Error(ErrorCode::kDomain, "gap must be positive");
  // Underflow to zero reproduces the T -> 0 limit exactly.
  return std::exp(-gap / temperature);
}

double thermal_g_value(const SpectralData& s, double temperature) {
  const double w = triplet_weight(s.gap, temperature);
  return (s.gzz_ground + w * (s.gzz_triplet + 2.0 * s.gxx_triplet)) / (1.0 + 3.0 * w);
}

WernerParameter thermal_g(const SpectralData& spectral, double temperature) {
  return WernerParameter(thermal_g_value(spectral, temperature));
}

Eigen::Matrix4d werner_density_matrix(const WernerParameter& g) {
  const double x = g.value();
  Eigen::Matrix4d rho = Eigen::Matrix4d::Identity() * 0.25;
  // sigma.sigma = diag(1, -1, -1, 1) + 2 (|ud><du| + |du><ud|)
  rho(0, 0) += 0.25 * x;
  rho(3, 3) += 0.25 * x;
  rho(1, 1) -= 0.25 * x;
  rho(2, 2) -= 0.25 * x;
  rho(1, 2) = 0.5 * x;
  rho(2, 1) = 0.5 * x;
  return rho;
}

}  // namespace spinchannel
