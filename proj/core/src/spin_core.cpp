// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/spin_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "spinchannel/error.hpp"

namespace spinchannel {

namespace {

constexpr int kMaxSites = 62;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

bool bit(Config c, int i) { return ((c >> i) & 1ULL) != 0; }

}  // namespace

void ChainSpec::validate() const {
  if (length < 4 || length % 2 != 0) {
    throw Error(ErrorCode::kConfiguration,
                "chain length must be even and >= 4, got " + std::to_string(length));
  }
  if (length + 1 > kMaxSites) {
    throw Error(ErrorCode::kConfiguration, "chain length too large for 64-bit configurations");
  }
  if (!(j > 0.0) || !(jp > 0.0) || !std::isfinite(j) || !std::isfinite(jp)) {
    throw Error(ErrorCode::kConfiguration, "couplings J and Jp must be positive");
  }
  // gamma = 0 is the decoupled-sender limit.
  if (gamma && (!(*gamma >= 0.0) || !std::isfinite(*gamma))) {
    throw Error(ErrorCode::kConfiguration, "sender coupling gamma must be non-negative");
  }
}

Sector::Sector(int n_sites, int twice_sz) : n_sites_(n_sites), twice_sz_(twice_sz) {
  if (n_sites < 1 || n_sites > kMaxSites) {
    throw Error(ErrorCode::kInvalidSector, "sector site count out of range");
  }
  if (std::abs(twice_sz) > n_sites || (n_sites + twice_sz) % 2 != 0) {
    throw Error(ErrorCode::kInvalidSector,
                "no configurations with 2Sz = " + std::to_string(twice_sz) + " on " +
                    std::to_string(n_sites) + " sites");
  }
  const int up = n_up();
  const std::uint64_t count = binomial(n_sites, up);
  if (count > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::kDimension, "sector dimension exceeds 32-bit indexing");
  }
  basis_.reserve(count);
  if (up == 0) {
    basis_.push_back(0);
    return;
  }
  // Gosper's hack walks same-popcount patterns in ascending order.
  const Config limit = Config{1} << n_sites;
  Config c = (Config{1} << up) - 1;
  while (c < limit) {
    basis_.push_back(c);
    const Config low = c & (~c + 1);
    const Config ripple = c + low;
    c = (((ripple ^ c) >> 2) / low) | ripple;
  }
}

std::optional<std::size_t> Sector::index_of(Config c) const {
  const auto it = std::lower_bound(basis_.begin(), basis_.end(), c);
  if (it == basis_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - basis_.begin());
}

Sector enumerate_sector(int n_sites, int twice_sz) { return Sector(n_sites, twice_sz); }

SparseOperator::SparseOperator(std::size_t dim, std::vector<std::size_t> row_ptr,
                               std::vector<std::uint32_t> cols, std::vector<double> values)
    : dim_(dim), row_ptr_(std::move(row_ptr)), cols_(std::move(cols)), values_(std::move(values)) {
  if (row_ptr_.size() != dim_ + 1 || cols_.size() != values_.size() ||
      row_ptr_.back() != values_.size()) {
    throw Error(ErrorCode::kDimension, "inconsistent compressed-row arrays");
  }
  for (auto c : cols_) {
    if (c >= dim_) throw Error(ErrorCode::kDimension, "column index out of range");
  }
}

double SparseOperator::at(std::size_t row, std::size_t col) const {
  const auto begin = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row]);
  const auto end = cols_.begin() + static_cast<std::ptrdiff_t>(row_ptr_[row + 1]);
  const auto it = std::lower_bound(begin, end, static_cast<std::uint32_t>(col));
  if (it == end || *it != col) return 0.0;
  return values_[static_cast<std::size_t>(it - cols_.begin())];
}

void SparseOperator::apply_into(std::span<const double> x, std::span<double> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw Error(ErrorCode::kDimension, "matvec length mismatch");
  }
  for (std::size_t r = 0; r < dim_; ++r) {
    double acc = 0.0;
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      acc += values_[k] * x[cols_[k]];
    }
    y[r] = acc;
  }
}

bool SparseOperator::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) {
      if (at(cols_[k], r) != values_[k]) return false;
    }
  }
  return true;
}

std::vector<double> apply(const SparseOperator& op, std::span<const double> v) {
  if (v.size() != op.dim()) {
    throw Error(ErrorCode::kDimension, "vector length " + std::to_string(v.size()) +
                                           " does not match operator dimension " +
                                           std::to_string(op.dim()));
  }
  std::vector<double> out(op.dim());
  op.apply_into(v, out);
  return out;
}

std::vector<Bond> chain_bonds(const ChainSpec& spec, int offset) {
  const int n = spec.length;
  std::vector<Bond> bonds;
  bonds.reserve(static_cast<std::size_t>(n - 1));
  bonds.push_back({offset, offset + 1, spec.jp});
  for (int i = 1; i + 2 < n; ++i) {
    bonds.push_back({offset + i, offset + i + 1, spec.j});
  }
  bonds.push_back({offset + n - 2, offset + n - 1, spec.jp});
  return bonds;
}

SparseOperator build_bond_hamiltonian(std::span<const Bond> bonds, const Sector& sector) {
  for (const auto& b : bonds) {
    if (b.a < 0 || b.b < 0 || b.a >= sector.n_sites() || b.b >= sector.n_sites() || b.a == b.b) {
      throw Error(ErrorCode::kDimension, "bond site outside the sector");
    }
  }
  const std::size_t dim = sector.dim();
  std::vector<std::size_t> row_ptr;
  std::vector<std::uint32_t> cols;
  std::vector<double> values;
  row_ptr.reserve(dim + 1);
  row_ptr.push_back(0);
  cols.reserve(dim * (bonds.size() / 2 + 1));
  values.reserve(cols.capacity());

  std::vector<std::pair<std::uint32_t, double>> row;
  for (std::size_t r = 0; r < dim; ++r) {
    const Config c = sector[r];
    row.clear();
    double diag = 0.0;
    for (const auto& b : bonds) {
      if (bit(c, b.a) == bit(c, b.b)) {
        diag += 0.25 * b.coupling;
      } else {
        diag -= 0.25 * b.coupling;
        const Config flipped = c ^ ((Config{1} << b.a) | (Config{1} << b.b));
        // Flipping an antiparallel pair conserves Sz, so the lookup succeeds.
        const auto col = sector.index_of(flipped);
        row.emplace_back(static_cast<std::uint32_t>(*col), 0.5 * b.coupling);
      }
    }
    row.emplace_back(static_cast<std::uint32_t>(r), diag);
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (std::size_t i = 0; i < row.size();) {
      std::uint32_t col = row[i].first;
      double v = 0.0;
      for (; i < row.size() && row[i].first == col; ++i) v += row[i].second;
      if (v != 0.0) {
        cols.push_back(col);
        values.push_back(v);
      }
    }
    row_ptr.push_back(values.size());
  }
  return SparseOperator(dim, std::move(row_ptr), std::move(cols), std::move(values));
}

SparseOperator build_chain_hamiltonian(const ChainSpec& spec, const Sector& sector) {
  spec.validate();
  if (spec.gamma) {
    throw Error(ErrorCode::kConfiguration,
                "chain Hamiltonian takes a spec without sender; use build_transfer_hamiltonian");
  }
  if (sector.n_sites() != spec.length) {
    throw Error(ErrorCode::kDimension, "sector has " + std::to_string(sector.n_sites()) +
                                           " sites, chain has " + std::to_string(spec.length));
  }
  const auto bonds = chain_bonds(spec);
  return build_bond_hamiltonian(bonds, sector);
}

SparseOperator build_transfer_hamiltonian(const ChainSpec& spec, const Sector& sector) {
  if (!spec.gamma) {
    throw Error(ErrorCode::kConfiguration, "transfer Hamiltonian needs a sender coupling gamma");
  }
  spec.validate();
  if (sector.n_sites() != spec.length + 1) {
    throw Error(ErrorCode::kDimension, "transfer sector must include the sender site");
  }
  auto bonds = chain_bonds(spec, 1);
  bonds.push_back({0, 1, *spec.gamma});
  return build_bond_hamiltonian(bonds, sector);
}

}  // namespace spinchannel
