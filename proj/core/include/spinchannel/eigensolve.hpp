// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "spinchannel/spin_core.hpp"

namespace spinchannel {

inline constexpr double kDefaultEigenTol = 1e-10;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2007'0311ULL;
inline constexpr std::size_t kDenseCap = 4096;

struct EigenPair {
  double energy = 0.0;
  std::vector<double> vector;
  double residual = 0.0;  // ||H v - E v||
};

struct LanczosOptions {
  double tol = kDefaultEigenTol;
  std::uint64_t seed = kDefaultSeed;
  /// Krylov basis size kept in memory between thick restarts.
  std::size_t max_basis = 64;
  /// Cap on the total number of matrix-vector products.
  std::size_t max_matvecs = 20000;
};

/// The k lowest eigenpairs of a real symmetric operator, ascending.
///
/// Thick-restart Lanczos with full reorthogonalization. The start vector is
/// drawn from a splitmix64 stream seeded with `opts.seed`, so results are
/// bit-reproducible. When the Krylov space becomes invariant before k pairs
/// have converged, a fresh seeded direction orthogonal to the basis is added.
/// Throws ConvergenceError (carrying the best residual) on hitting the cap.
std::vector<EigenPair> lowest_eigenpairs(const SparseOperator& op, std::size_t k,
                                         const LanczosOptions& opts = {});

/// Every eigenvalue, ascending. Refuses (kRefusal) above kDenseCap.
std::vector<double> dense_spectrum(const SparseOperator& op);

/// Low-energy data entering the four-state thermal mixture.
///
/// Correlators use Pauli matrices: gzz = <s^z_A s^z_B>, and gxx_triplet is
/// evaluated from the magnetization-conserving part of s^x_A s^x_B.
struct SpectralData {
  double e0 = 0.0;
  double e_triplet = 0.0;
  double gap = 0.0;
  double gzz_ground = 0.0;
  double gzz_triplet = 0.0;
  double gxx_triplet = 0.0;
};

/// Eigenvectors behind a SpectralData, kept for real-time evolution.
struct ChainEigenstates {
  SpectralData spectral;
  int n_sites = 0;
  int probe_a = 0;  // bit positions
  int probe_b = 0;
  std::vector<double> ground;         // m = 0 sector
  std::vector<double> triplet_plus;   // m = +1 sector
  std::vector<double> triplet_zero;   // S-_tot |1,+1> / sqrt(2), m = 0 sector
  std::vector<double> triplet_minus;  // spin inversion of |1,+1>, m = -1 sector
};

/// Ground/triplet analysis of an arbitrary bonded system with probes at the
/// given bit positions. Throws Error(kOrdering) if the m = 0 ground state is
/// degenerate or if its second level is not degenerate with the lowest m = 1
/// level within 10*tol.
ChainEigenstates analyze_probes(int n_sites, std::span<const Bond> bonds, int probe_a,
                                int probe_b, const LanczosOptions& opts = {});

ChainEigenstates chain_eigenstates(const ChainSpec& spec, const LanczosOptions& opts = {});

SpectralData spectral_data(const ChainSpec& spec, double tol = kDefaultEigenTol);
SpectralData spectral_data(const ChainSpec& spec, const LanczosOptions& opts);

/// <psi| s^z_a s^z_b |psi> for a real sector vector.
double zz_correlator(const Sector& sector, std::span<const double> psi, int a, int b);

/// <psi| s^+_a s^-_b + s^-_a s^+_b |psi>, the in-sector part of s^x_a s^x_b.
double xx_correlator(const Sector& sector, std::span<const double> psi, int a, int b);

}  // namespace spinchannel
