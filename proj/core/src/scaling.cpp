// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinchannel/error.hpp"

namespace spinchannel {

GapTable gap_sweep(std::span<const int> lengths, double jp, double j, const LanczosOptions& opts) {
  GapTable table;
  std::vector<int> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  const auto last = std::unique(sorted.begin(), sorted.end());
  if (last != sorted.end()) {
    table.warnings.push_back("duplicate chain lengths dropped from sweep");
    sorted.erase(last, sorted.end());
  }
  for (int len : sorted) {
    ChainSpec spec{len, j, jp, std::nullopt};
    spec.validate();
    try {
      const auto sd = spectral_data(spec, opts);
      table.rows.push_back({len, jp, sd.gap, sd.e0});
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kConfiguration) throw;
      table.missing.push_back(len);
      table.warnings.push_back("L = " + std::to_string(len) + ": " + e.what());
    }
  }
  return table;
}

PowerLawFit fit_power_law(const GapTable& table, const FitOptions& opts) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& row : table.rows) {
    if (row.jp != table.rows.front().jp) {
      throw Error(ErrorCode::kConfiguration, "power-law fit needs a single jp series");
    }
    if (row.length < opts.min_length) continue;
    if (!(row.gap > 0.0)) throw Error(ErrorCode::kDomain, "gaps must be positive");
    x.push_back(std::log(static_cast<double>(row.length)));
    y.push_back(std::log(row.gap));
  }
  if (x.size() < 4) {
    throw Error(ErrorCode::kInsufficientData,
                "power-law fit needs at least 4 points, have " + std::to_string(x.size()));
  }
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    ss_res += r * r;
  }

  PowerLawFit fit;
  fit.c = std::exp(intercept);
  fit.alpha = -slope;
  fit.points = x.size();
  // Relative to the magnitude of log(gap) so that round-off on a constant
  // series still registers as zero variance.
  fit.degenerate = syy <= 1e-24 * std::max(1.0, my * my) * n;
  fit.r_squared = fit.degenerate ? 0.0 : 1.0 - ss_res / syy;
  return fit;
}

bool validity_window(double jp, double j, double alpha, int length) {
  const double x = jp / j;
  return x * x < std::pow(static_cast<double>(length), alpha - 1.0);
}

}  // namespace spinchannel
