// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "spinchannel/error.hpp"
#include "spinchannel/thermal.hpp"

namespace spinchannel {
namespace {

SpectralData two_spin() {
  SpectralData s;
  s.e0 = -0.75;
  s.e_triplet = 0.25;
  s.gap = 1.0;
  s.gzz_ground = -1.0;
  s.gzz_triplet = 1.0;
  s.gxx_triplet = 0.0;
  return s;
}

TEST(WernerParameter, RangeAndEntanglement) {
  EXPECT_TRUE(WernerParameter(-1.0).entangled());
  EXPECT_FALSE(WernerParameter(-1.0 / 3.0).entangled());
  EXPECT_FALSE(WernerParameter(1.0 / 3.0).entangled());
  EXPECT_THROW(WernerParameter(-1.1), Error);
  EXPECT_THROW(WernerParameter(0.34), Error);
}

TEST(ThermalG, LowTemperatureLimit) {
  const auto s = two_spin();
  EXPECT_EQ(thermal_g(s, 1e-3 * s.gap).value(), s.gzz_ground);
}

TEST(ThermalG, SeparabilityEdgeAtLog3) {
  EXPECT_NEAR(thermal_g(two_spin(), 1.0 / std::log(3.0)).value(), -1.0 / 3.0, 1e-15);
}

TEST(ThermalG, HighTemperatureMixture) {
  EXPECT_NEAR(thermal_g_value(two_spin(), 1e12), 0.0, 1e-11);
  SpectralData s = two_spin();
  s.gzz_ground = -0.8;
  s.gzz_triplet = 0.7;
  s.gxx_triplet = -0.05;
  EXPECT_NEAR(thermal_g_value(s, 1e12), (-0.8 + 0.7 - 0.1) / 4.0, 1e-11);
}

TEST(ThermalG, MonotoneAndBounded) {
  const auto s = two_spin();
  double prev = -2.0;
  for (int i = 0; i <= 400; ++i) {
    const double t = 1e-3 * std::pow(10.0, 6.0 * i / 400.0);
    const double g = thermal_g_value(s, t);
    EXPECT_GE(g, prev);
    EXPECT_GE(g, -1.0);
    EXPECT_LE(g, 0.0);
    prev = g;
  }
}

TEST(ThermalG, RequiresPositiveTemperature) {
  EXPECT_THROW((void)thermal_g(two_spin(), 0.0), Error);
  EXPECT_THROW((void)thermal_g(two_spin(), -1.0), Error);
}

TEST(WernerDensity, Endpoints) {
  const Eigen::Matrix4d singlet = werner_density_matrix(WernerParameter(-1.0));
  Eigen::Vector4d psi(0.0, 1.0, -1.0, 0.0);
  psi /= std::sqrt(2.0);
  EXPECT_LE((singlet - psi * psi.transpose()).cwiseAbs().maxCoeff(), 1e-15);

  EXPECT_LE((werner_density_matrix(WernerParameter(0.0)) - 0.25 * Eigen::Matrix4d::Identity())
                .cwiseAbs()
                .maxCoeff(),
            0.0);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(werner_density_matrix(WernerParameter(1.0 / 3.0)));
  EXPECT_NEAR(eig.eigenvalues()(0), 0.0, 1e-15);
  for (int i = 1; i < 4; ++i) EXPECT_NEAR(eig.eigenvalues()(i), 1.0 / 3.0, 1e-15);
}

TEST(WernerDensity, TracePositivitySymmetry) {
  for (int i = 0; i <= 200; ++i) {
    const double g = -1.0 + (4.0 / 3.0) * i / 200.0;
    const Eigen::Matrix4d rho = werner_density_matrix(WernerParameter(g));
    EXPECT_EQ(rho.trace(), 1.0);
    EXPECT_EQ(rho, rho.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> eig(rho);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-14);
  }
}

}  // namespace
}  // namespace spinchannel
