// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

// Reference implementations used only by the test suites. Everything here is
// built from dense Kronecker products and textbook formulas, sharing no code
// path with the sparse library.

#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace spinchannel::oracle {

struct DenseBond {
  int a;
  int b;
  double coupling;
};

/// Full 2^n Heisenberg matrix, sum of coupling * S_a.S_b. Basis index bit k
/// set means site with bit position k is up.
Eigen::MatrixXd full_space_hamiltonian(int n_sites, const std::vector<DenseBond>& bonds);

/// Open chain of L sites with probe couplings on the two end bonds, bit k
/// holding chain site k + 1 + offset.
std::vector<DenseBond> probed_chain(int length, double j, double jp, int offset = 0);

/// Ascending eigenvalues of a symmetric matrix.
std::vector<double> eigenvalues(const Eigen::MatrixXd& h);

/// Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const Eigen::Matrix4cd& rho);

/// Transfer fidelity of the three-site model gamma S_S.S_A + J S_A.S_B with
/// the sender in |xi> and A, B in the Werner state of parameter g.
double three_site_fidelity(double j_eff, double gamma, double g, double t,
                           const Eigen::Vector2cd& xi);

/// Bisection root of f on [lo, hi], f(lo) and f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi, double tol);

/// Deterministic random pure qubit states.
std::vector<Eigen::Vector2cd> random_qubits(std::size_t count, std::uint64_t seed);

}  // namespace spinchannel::oracle
