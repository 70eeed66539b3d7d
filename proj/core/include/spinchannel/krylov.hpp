// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "spinchannel/spin_core.hpp"

namespace spinchannel {

using ComplexVector = std::vector<std::complex<double>>;

struct KrylovOptions {
  std::size_t max_dim = 30;
  /// Bound on the estimated local error of one step.
  double step_tol = 1e-10;
  /// Steps below this size mean the tolerance cannot be met.
  double min_step = 1e-9;
};

struct KrylovStats {
  std::size_t steps = 0;
  double accumulated_error = 0.0;
};

/// Propagates psi <- exp(-i H dt) psi with adaptive Lanczos steps. The local
/// error of each step is estimated as beta_m |[exp(-i T dt) e_1]_m|.
/// Throws Error(kPropagation) when a step cannot reach `step_tol`.
class KrylovPropagator {
 public:
  KrylovPropagator(const SparseOperator& h, KrylovOptions opts = {});

  void evolve(ComplexVector& psi, double dt);

  [[nodiscard]] const KrylovStats& stats() const noexcept { return stats_; }

 private:
  const SparseOperator* h_;
  KrylovOptions opts_;
  KrylovStats stats_;
  double next_step_ = 0.0;
};

}  // namespace spinchannel
