// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <complex>
#include <random>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "spinchannel/krylov.hpp"
#include "spinchannel/spin_core.hpp"

namespace spinchannel {
namespace {

TEST(Krylov, MatchesDenseExponential) {
  const ChainSpec spec{8, 1.0, 0.3, 0.2};
  const auto sector = enumerate_sector(9, 1);
  const auto h = build_transfer_hamiltonian(spec, sector);

  Eigen::MatrixXd d(h.dim(), h.dim());
  for (std::size_t r = 0; r < h.dim(); ++r)
    for (std::size_t c = 0; c < h.dim(); ++c) d(r, c) = h.at(r, c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(d);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> n01;
  ComplexVector psi(h.dim());
  for (auto& x : psi) x = {n01(rng), n01(rng)};
  double norm = 0.0;
  for (const auto& x : psi) norm += std::norm(x);
  for (auto& x : psi) x /= std::sqrt(norm);
  const Eigen::VectorXcd psi0 = Eigen::Map<const Eigen::VectorXcd>(psi.data(), psi.size());

  KrylovPropagator prop(h);
  double t = 0.0;
  for (double dt : {0.1, 2.0, 7.5, 30.0}) {
    prop.evolve(psi, dt);
    t += dt;
    Eigen::VectorXcd ph(h.dim());
    for (Eigen::Index i = 0; i < ph.size(); ++i)
      ph(i) = std::exp(std::complex<double>(0.0, -eig.eigenvalues()(i) * t));
    const Eigen::MatrixXcd v = eig.eigenvectors().cast<std::complex<double>>();
    const Eigen::VectorXcd ref = v * ph.asDiagonal() * (v.adjoint() * psi0);
    double err = 0.0;
    double nrm = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      err = std::max(err, std::abs(psi[i] - ref(static_cast<Eigen::Index>(i))));
      nrm += std::norm(psi[i]);
    }
    EXPECT_LE(err, 1e-8) << "t=" << t;
    EXPECT_NEAR(nrm, 1.0, 1e-10);
  }
  EXPECT_GT(prop.stats().steps, 0u);
  EXPECT_LE(prop.stats().accumulated_error, 1e-10 * prop.stats().steps + 1e-15);
}

TEST(Krylov, ZeroStepIsIdentity) {
  const ChainSpec spec{4, 1.0, 0.3, 0.2};
  const auto h = build_transfer_hamiltonian(spec, enumerate_sector(5, 1));
  ComplexVector psi(h.dim(), {0.0, 0.0});
  psi[0] = 1.0;
  const auto copy = psi;
  KrylovPropagator prop(h);
  prop.evolve(psi, 0.0);
  EXPECT_EQ(psi, copy);
}

}  // namespace
}  // namespace spinchannel
