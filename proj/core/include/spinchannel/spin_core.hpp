// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace spinchannel {

using Config = std::uint64_t;

/// Geometry and couplings of an open chain A - C - B with weak end probes.
///
/// Sites are numbered 1..L with A = 1 and B = L. In bit patterns the chain
/// site k lives at bit k-1. When `gamma` is set, a sender spin S is attached
/// to A and occupies bit 0, shifting the chain up by one bit.
struct ChainSpec {
  int length = 0;
  double j = 1.0;
  double jp = 1.0;
  std::optional<double> gamma;

  /// Throws Error(kConfiguration) on odd/short chains or non-positive couplings.
  void validate() const;
};

/// One isotropic exchange term `coupling * S_a . S_b` between bit positions.
struct Bond {
  int a = 0;
  int b = 0;
  double coupling = 0.0;
};

/// Fixed-magnetization basis: all configurations of `n_sites` spins with
/// 2*Sz_total = `twice_sz`, in ascending bit-pattern order. A set bit is an
/// up spin.
class Sector {
 public:
  Sector(int n_sites, int twice_sz);

  [[nodiscard]] int n_sites() const noexcept { return n_sites_; }
  [[nodiscard]] int twice_sz() const noexcept { return twice_sz_; }
  [[nodiscard]] int n_up() const noexcept { return (n_sites_ + twice_sz_) / 2; }
  [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
  [[nodiscard]] std::span<const Config> basis() const noexcept { return basis_; }
  [[nodiscard]] Config operator[](std::size_t i) const { return basis_[i]; }

  /// Binary search in the sorted basis. Returns nullopt for out-of-sector
  /// configurations.
  [[nodiscard]] std::optional<std::size_t> index_of(Config c) const;

 private:
  int n_sites_;
  int twice_sz_;
  std::vector<Config> basis_;
};

Sector enumerate_sector(int n_sites, int twice_sz);

/// Immutable real symmetric matrix in compressed-row layout.
class SparseOperator {
 public:
  SparseOperator() = default;
  SparseOperator(std::size_t dim, std::vector<std::size_t> row_ptr,
                 std::vector<std::uint32_t> cols, std::vector<double> values);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t nnz() const noexcept { return values_.size(); }
  [[nodiscard]] std::span<const std::size_t> row_ptr() const noexcept { return row_ptr_; }
  [[nodiscard]] std::span<const std::uint32_t> cols() const noexcept { return cols_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  /// Entry lookup; zero when absent.
  [[nodiscard]] double at(std::size_t row, std::size_t col) const;

  /// y = A x without allocation. Sizes must match dim().
  void apply_into(std::span<const double> x, std::span<double> y) const;

  [[nodiscard]] bool is_symmetric() const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<double> values_;
};

/// Returns op * v. Throws Error(kDimension) on a length mismatch.
std::vector<double> apply(const SparseOperator& op, std::span<const double> v);

/// Bonds of H_chain on bits 0..L-1 (offset shifts them, e.g. by one for the
/// sender layout).
std::vector<Bond> chain_bonds(const ChainSpec& spec, int offset = 0);

/// Assembles sum_bonds J S_a.S_b in the sector basis. Each bond contributes
/// Sz_a Sz_b on the diagonal and (S+_a S-_b + S-_a S+_b)/2 off it.
SparseOperator build_bond_hamiltonian(std::span<const Bond> bonds, const Sector& sector);

/// H_chain for a spec without sender. sector.n_sites() must equal L.
SparseOperator build_chain_hamiltonian(const ChainSpec& spec, const Sector& sector);

/// H_chain + gamma S_S.S_A with the sender at bit 0. sector.n_sites() = L+1.
SparseOperator build_transfer_hamiltonian(const ChainSpec& spec, const Sector& sector);

}  // namespace spinchannel
