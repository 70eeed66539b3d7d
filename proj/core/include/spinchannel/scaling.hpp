// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <vector>

#include "spinchannel/eigensolve.hpp"

namespace spinchannel {

struct GapRow {
  int length = 0;
  double jp = 0.0;
  double gap = 0.0;
  double e0 = 0.0;
};

struct GapTable {
  std::vector<GapRow> rows;
  std::vector<int> missing;  // lengths whose diagonalization failed
  std::vector<std::string> warnings;
};

/// One gap per distinct L, ordered by L. Duplicates are dropped with a
/// warning; lengths that fail are listed in `missing`.
GapTable gap_sweep(std::span<const int> lengths, double jp, double j = 1.0,
                   const LanczosOptions& opts = {});

struct FitOptions {
  /// Rows with L below this are left out of the fit.
  int min_length = 8;
};

/// Delta = c L^(-alpha), least squares on log-log axes.
struct PowerLawFit {
  double c = 0.0;
  double alpha = 0.0;
  double r_squared = 0.0;
  std::size_t points = 0;
  /// Set when log(gap) has zero variance and r_squared is meaningless.
  bool degenerate = false;
};

/// Throws Error(kInsufficientData) with fewer than four usable rows or
/// Error(kConfiguration) when rows mix several jp values.
PowerLawFit fit_power_law(const GapTable& table, const FitOptions& opts = {});

/// (jp/J)^2 < L^(alpha - 1): small-coupling form of the condition under which
/// the effective two-probe picture holds.
bool validity_window(double jp, double j, double alpha, int length);

}  // namespace spinchannel
