// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "spinchannel/error.hpp"
#include "spinchannel/transfer.hpp"

namespace spinchannel {

double werner_concurrence(const WernerParameter& g) {
  return std::max(-1.5 * g.value() - 0.5, 0.0);
}

double sharing_concurrence(double f_star) {
  if (!(f_star >= 0.0 && f_star <= 1.0)) {
    throw Error(ErrorCode::kDomain, "fidelity " + std::to_string(f_star) + " outside [0, 1]");
  }
  return std::max(3.0 * f_star - 2.0, 0.0);
}

SharingResult sharing_report(const WernerParameter& g) {
  SharingResult r;
  r.g = g.value();
  r.f_star = max_fidelity(g);
  // Channel theta from f* = (1 + theta)/2.
  r.error_probability = 0.75 * (1.0 - (2.0 * r.f_star - 1.0));
  r.concurrence_out = sharing_concurrence(r.f_star);
  r.concurrence_in = werner_concurrence(g);
  if (r.concurrence_out < r.concurrence_in - 1e-12) {
    throw Error(ErrorCode::kInternalConsistency,
                "shared concurrence below the resource concurrence at g = " +
                    std::to_string(r.g));
  }
  return r;
}

Eigen::Matrix4cd shared_singlet_state(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kDomain, "error probability outside [0, 1]");
  }
  using C = std::complex<double>;
  Eigen::Vector4cd psi(0.0, 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0), 0.0);
  const Eigen::Matrix4cd rho_in = psi * psi.adjoint();

  Eigen::Matrix2cd sx, sy, sz;
  sx << 0.0, 1.0, 1.0, 0.0;
  sy << 0.0, C(0.0, -1.0), C(0.0, 1.0), 0.0;
  sz << 1.0, 0.0, 0.0, -1.0;
  Eigen::Matrix4cd out = (1.0 - p) * rho_in;
  for (const auto& s : {sx, sy, sz}) {
    // I (x) s in the {uu, ud, du, dd} ordering is block-diagonal.
    Eigen::Matrix4cd k = Eigen::Matrix4cd::Zero();
    k.topLeftCorner<2, 2>() = s;
    k.bottomRightCorner<2, 2>() = s;
    out += (p / 3.0) * k * rho_in * k.adjoint();
  }
  return out;
}

}  // namespace spinchannel
