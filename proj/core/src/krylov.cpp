// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/krylov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "spinchannel/error.hpp"

namespace spinchannel {

namespace {

using cplx = std::complex<double>;

cplx cdot(const ComplexVector& a, const ComplexVector& b) {
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double cnorm(const ComplexVector& a) { return std::sqrt(cdot(a, a).real()); }

void matvec(const SparseOperator& h, const ComplexVector& x, ComplexVector& y) {
  const auto rp = h.row_ptr();
  const auto cols = h.cols();
  const auto vals = h.values();
  for (std::size_t r = 0; r < h.dim(); ++r) {
    cplx acc{0.0, 0.0};
    for (std::size_t k = rp[r]; k < rp[r + 1]; ++k) acc += vals[k] * x[cols[k]];
    y[r] = acc;
  }
}

}  // namespace

KrylovPropagator::KrylovPropagator(const SparseOperator& h, KrylovOptions opts)
    : h_(&h), opts_(opts) {
  if (opts_.max_dim < 2) opts_.max_dim = 2;
}

void KrylovPropagator::evolve(ComplexVector& psi, double dt) {
  if (psi.size() != h_->dim()) {
    throw Error(ErrorCode::kDimension, "state length does not match Hamiltonian");
  }
  if (dt < 0.0) throw Error(ErrorCode::kDomain, "negative propagation time");

  const std::size_t n = psi.size();
  double remaining = dt;
  std::vector<ComplexVector> basis;
  ComplexVector w(n);

  while (remaining > 0.0) {
    const double psi_norm = cnorm(psi);
    if (psi_norm == 0.0) return;

    // Lanczos recursion with full reorthogonalization.
    basis.clear();
    basis.push_back(psi);
    for (auto& x : basis.back()) x /= psi_norm;
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[j] couples v_j and v_{j+1}
    bool invariant = false;
    const std::size_t m_max = std::min(opts_.max_dim, n);
    double scale = 1.0;
    for (std::size_t j = 0; j < m_max; ++j) {
      matvec(*h_, basis[j], w);
      const double a = cdot(basis[j], w).real();
      alpha.push_back(a);
      scale = std::max(scale, std::abs(a));
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& v : basis) {
          const cplx c = cdot(v, w);
          for (std::size_t i = 0; i < n; ++i) w[i] -= c * v[i];
        }
      }
      const double b = cnorm(w);
      beta.push_back(b);
      if (b <= 1e-13 * scale) {
        invariant = true;
        break;
      }
      if (j + 1 < m_max) {
        basis.push_back(w);
        for (auto& x : basis.back()) x /= b;
      }
    }
    if (basis.size() == n) invariant = true;

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      t(j, j) = alpha[static_cast<std::size_t>(j)];
      if (j + 1 < m) {
        t(j, j + 1) = beta[static_cast<std::size_t>(j)];
        t(j + 1, j) = beta[static_cast<std::size_t>(j)];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(t);
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const Eigen::MatrixXd& u = eig.eigenvectors();
    const double beta_last = invariant ? 0.0 : beta.back();

    const double attempted = next_step_ > 0.0 ? next_step_ : remaining;
    double step = std::min(remaining, attempted);
    bool shrunk = false;
    Eigen::VectorXcd coeff(m);
    double err = 0.0;
    while (true) {
      for (Eigen::Index r = 0; r < m; ++r) {
        cplx acc{0.0, 0.0};
        for (Eigen::Index k = 0; k < m; ++k) {
          acc += u(r, k) * std::exp(cplx(0.0, -lambda(k) * step)) * u(0, k);
        }
        coeff(r) = acc;
      }
      err = beta_last * std::abs(coeff(m - 1));
      if (err <= opts_.step_tol) break;
      step *= 0.5;
      shrunk = true;
      if (step < opts_.min_step) {
        throw Error(ErrorCode::kPropagation,
                    "Krylov step error " + std::to_string(err) + " above tolerance " +
                        std::to_string(opts_.step_tol) + " at minimal step size");
      }
    }

    std::fill(psi.begin(), psi.end(), cplx{0.0, 0.0});
    for (Eigen::Index k = 0; k < m; ++k) {
      const cplx c = psi_norm * coeff(k);
      const auto& v = basis[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < n; ++i) psi[i] += c * v[i];
    }
    remaining -= step;
    if (remaining < 1e-14 * dt) remaining = 0.0;
    ++stats_.steps;
    stats_.accumulated_error += err;
    if (shrunk) {
      next_step_ = step;
    } else if (step >= attempted && err < 1e-3 * opts_.step_tol) {
      next_step_ = 1.5 * step;
    } else {
      next_step_ = attempted;
    }
  }
}

}  // namespace spinchannel
