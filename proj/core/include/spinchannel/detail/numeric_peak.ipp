// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <string>

#include "spinchannel/error.hpp"

namespace spinchannel {

template <class F>
Peak numeric_peak_of(F&& f, double t_max) {
  if (!(t_max > 0.0)) {
    throw Error(ErrorCode::kDomain, "numeric_peak: t_max must be positive");
  }
  constexpr std::size_t kPoints = 20001;
  const double h = t_max / static_cast<double>(kPoints - 1);

  double prev = f(0.0);
  double cur = f(h);
  std::size_t found = 0;
  for (std::size_t i = 1; i + 1 < kPoints; ++i) {
    const double next = f(h * static_cast<double>(i + 1));
    if (cur > prev && cur >= next) {
      found = i;
      break;
    }
    prev = cur;
    cur = next;
  }
  if (found == 0) {
    throw Error(ErrorCode::kFlatCurve,
                "numeric_peak: no interior maximum on [0, " + std::to_string(t_max) + "]");
  }

  // Golden-section search on the bracketing cell pair.
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = h * static_cast<double>(found - 1);
  double b = h * static_cast<double>(found + 1);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > 1e-10) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  double t = 0.5 * (a + b);

  // Near a smooth maximum f is flat to O(dt^2), which limits the search above
  // to about sqrt(eps) in t. Polish by bisecting the sign of a central
  // difference slope, whose resolution is linear in dt.
  const double s = 1e-3 * h;
  const auto slope = [&](double x) { return f(x + s) - f(x - s); };
  double lo = h * static_cast<double>(found - 1) + s;
  double hi = h * static_cast<double>(found + 1) - s;
  if (slope(lo) > 0.0 && slope(hi) < 0.0) {
    while (hi - lo > 1e-13 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (slope(mid) > 0.0 ? lo : hi) = mid;
    }
    const double polished = 0.5 * (lo + hi);
    if (f(polished) >= f(t) - 1e-15) t = polished;
  }
  return Peak{t, f(t)};
}

}  // namespace spinchannel
