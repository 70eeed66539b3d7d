// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/eigensolve.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <string>

#include "spinchannel/error.hpp"

namespace spinchannel {

namespace {

int pauli_z(Config c, int site) { return ((c >> site) & 1ULL) ? 1 : -1; }

std::vector<double> lower_total_sz(const Sector& from, std::span<const double> psi,
                                   const Sector& to) {
  std::vector<double> out(to.dim(), 0.0);
  for (std::size_t i = 0; i < from.dim(); ++i) {
    const Config c = from[i];
    for (int s = 0; s < from.n_sites(); ++s) {
      if ((c >> s) & 1ULL) {
        out[*to.index_of(c ^ (Config{1} << s))] += psi[i];
      }
    }
  }
  double n = 0.0;
  for (double x : out) n += x * x;
  n = std::sqrt(n);
  for (auto& x : out) x /= n;
  return out;
}

std::vector<double> invert_spins(const Sector& from, std::span<const double> psi,
                                 const Sector& to) {
  const Config mask = (Config{1} << from.n_sites()) - 1;
  std::vector<double> out(to.dim(), 0.0);
  for (std::size_t i = 0; i < from.dim(); ++i) {
    out[*to.index_of(~from[i] & mask)] = psi[i];
  }
  return out;
}

}  // namespace

double zz_correlator(const Sector& sector, std::span<const double> psi, int a, int b) {
  double s = 0.0;
  for (std::size_t i = 0; i < sector.dim(); ++i) {
    s += psi[i] * psi[i] * pauli_z(sector[i], a) * pauli_z(sector[i], b);
  }
  return s;
}

double xx_correlator(const Sector& sector, std::span<const double> psi, int a, int b) {
  const Config mask = (Config{1} << a) | (Config{1} << b);
  double s = 0.0;
  for (std::size_t i = 0; i < sector.dim(); ++i) {
    const Config c = sector[i];
    if (pauli_z(c, a) != pauli_z(c, b)) {
      s += psi[i] * psi[*sector.index_of(c ^ mask)];
    }
  }
  return s;
}

ChainEigenstates analyze_probes(int n_sites, std::span<const Bond> bonds, int probe_a,
                                int probe_b, const LanczosOptions& opts) {
  const Sector singlet_sector(n_sites, 0);
  const Sector triplet_sector(n_sites, 2);

  // The two sectors are independent; each solve is deterministic on its own.
  auto singlet_job = std::async(std::launch::async, [&] {
    const auto h = build_bond_hamiltonian(bonds, singlet_sector);
    return lowest_eigenpairs(h, std::min<std::size_t>(2, singlet_sector.dim()), opts);
  });
  const auto h1 = build_bond_hamiltonian(bonds, triplet_sector);
  auto triplet = lowest_eigenpairs(h1, 1, opts);
  auto singlet = singlet_job.get();

  if (singlet.size() < 2) {
    throw Error(ErrorCode::kOrdering, "m = 0 sector too small to hold a singlet and a triplet");
  }
  const double tol = opts.tol;
  const double e0 = singlet[0].energy;
  const double e_second = singlet[1].energy;
  const double e_t = triplet[0].energy;
  if (e_second - e0 <= 10.0 * tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "degenerate m = 0 ground state: E0 = " << e0 << ", E1 = " << e_second;
    throw Error(ErrorCode::kOrdering, msg.str());
  }
  if (std::abs(e_second - e_t) > 10.0 * tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "lowest excitation is not the expected triplet: second m = 0 level " << e_second
        << " vs lowest m = 1 level " << e_t;
    throw Error(ErrorCode::kOrdering, msg.str());
  }

  ChainEigenstates out;
  out.n_sites = n_sites;
  out.probe_a = probe_a;
  out.probe_b = probe_b;
  out.ground = std::move(singlet[0].vector);
  out.triplet_plus = std::move(triplet[0].vector);
  out.triplet_zero = lower_total_sz(triplet_sector, out.triplet_plus, singlet_sector);
  out.triplet_minus = invert_spins(triplet_sector, out.triplet_plus, Sector(n_sites, -2));

  auto& sd = out.spectral;
  sd.e0 = e0;
  sd.e_triplet = e_t;
  sd.gap = e_t - e0;
  sd.gzz_ground = zz_correlator(singlet_sector, out.ground, probe_a, probe_b);
  sd.gzz_triplet = zz_correlator(triplet_sector, out.triplet_plus, probe_a, probe_b);
  sd.gxx_triplet = xx_correlator(triplet_sector, out.triplet_plus, probe_a, probe_b);
  if (!(sd.gap > 0.0)) {
    throw Error(ErrorCode::kOrdering, "non-positive singlet-triplet gap");
  }
  return out;
}

ChainEigenstates chain_eigenstates(const ChainSpec& spec, const LanczosOptions& opts) {
  ChainSpec bare = spec;
  bare.gamma.reset();
  bare.validate();
  const auto bonds = chain_bonds(bare);
  return analyze_probes(bare.length, bonds, 0, bare.length - 1, opts);
}

SpectralData spectral_data(const ChainSpec& spec, const LanczosOptions& opts) {
  if (spec.gamma) {
    throw Error(ErrorCode::kConfiguration, "spectral_data takes a chain without sender");
  }
  return chain_eigenstates(spec, opts).spectral;
}

SpectralData spectral_data(const ChainSpec& spec, double tol) {
  LanczosOptions opts;
  opts.tol = tol;
  return spectral_data(spec, opts);
}

}  // namespace spinchannel
