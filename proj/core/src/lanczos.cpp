// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "spinchannel/eigensolve.hpp"
#include "spinchannel/error.hpp"

namespace spinchannel {

namespace {

// splitmix64; fixed arithmetic so start vectors agree across platforms.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : state_(seed) {}

  double next_uniform() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return static_cast<double>(z >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  }

 private:
  std::uint64_t state_;
};

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

// Two passes of classical Gram-Schmidt. Returns accumulated coefficients.
std::vector<double> orthogonalize(const std::vector<std::vector<double>>& basis,
                                  std::vector<double>& w) {
  std::vector<double> coeff(basis.size(), 0.0);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const double h = dot(basis[i], w);
      axpy(-h, basis[i], w);
      coeff[i] += h;
    }
  }
  return coeff;
}

// Unit vector orthogonal to `basis`, or empty when the basis spans everything.
std::vector<double> fresh_direction(const std::vector<std::vector<double>>& basis,
                                    std::size_t dim, SeedStream& rng) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<double> q(dim);
    for (auto& x : q) x = rng.next_uniform();
    const double before = norm(q);
    orthogonalize(basis, q);
    const double after = norm(q);
    if (after > 1e-8 * before) {
      for (auto& x : q) x /= after;
      return q;
    }
  }
  return {};
}

void fix_sign(std::vector<double>& v) {
  std::size_t arg = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[arg]) + 1e-12) arg = i;
  }
  if (!v.empty() && v[arg] < 0.0) {
    for (auto& x : v) x = -x;
  }
}

}  // namespace

std::vector<EigenPair> lowest_eigenpairs(const SparseOperator& op, std::size_t k,
                                         const LanczosOptions& opts) {
  const std::size_t dim = op.dim();
  if (k == 0 || k > dim) {
    throw Error(ErrorCode::kDimension, "requested " + std::to_string(k) +
                                           " eigenpairs from a dimension-" +
                                           std::to_string(dim) + " operator");
  }
  if (!(opts.tol > 0.0)) throw Error(ErrorCode::kDomain, "eigensolver tolerance must be positive");

  const std::size_t max_basis = std::min(dim, std::max(opts.max_basis, k + 2));
  const std::size_t keep_target = std::max(k + 1, max_basis / 2);

  SeedStream rng(opts.seed);
  std::vector<std::vector<double>> basis;
  basis.reserve(max_basis);
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(max_basis),
                                               static_cast<Eigen::Index>(max_basis));
  std::vector<double> q = fresh_direction(basis, dim, rng);
  std::vector<double> w(dim);
  double beta = 0.0;
  double scale = 1.0;
  std::size_t matvecs = 0;
  double best_residual = std::numeric_limits<double>::infinity();

  while (true) {
    // Expand the basis up to capacity.
    while (basis.size() < max_basis && !q.empty()) {
      const auto j = static_cast<Eigen::Index>(basis.size());
      basis.push_back(std::move(q));
      op.apply_into(basis.back(), w);
      ++matvecs;
      const auto h = orthogonalize(basis, w);
      for (Eigen::Index i = 0; i <= j; ++i) {
        proj(i, j) = h[static_cast<std::size_t>(i)];
        proj(j, i) = h[static_cast<std::size_t>(i)];
      }
      scale = std::max(scale, std::abs(h.back()));
      beta = norm(w);
      if (beta > 1e-13 * scale) {
        q.assign(w.begin(), w.end());
        for (auto& x : q) x /= beta;
      } else {
        // Invariant subspace: continue from a seeded direction.
        beta = 0.0;
        q = basis.size() < dim ? fresh_direction(basis, dim, rng) : std::vector<double>{};
      }
    }

    const auto m = static_cast<Eigen::Index>(basis.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(proj.topLeftCorner(m, m));
    const Eigen::VectorXd& theta = ritz.eigenvalues();
    const Eigen::MatrixXd& y = ritz.eigenvectors();

    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      worst = std::max(worst, std::abs(beta * y(m - 1, static_cast<Eigen::Index>(i))));
    }
    const bool exhausted = q.empty();

    if (worst <= 0.5 * opts.tol || exhausted) {
      std::vector<EigenPair> out;
      out.reserve(k);
      double true_worst = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<double> x(dim, 0.0);
        for (Eigen::Index b = 0; b < m; ++b) {
          axpy(y(b, static_cast<Eigen::Index>(i)), basis[static_cast<std::size_t>(b)], x);
        }
        const double nx = norm(x);
        for (auto& v : x) v /= nx;
        fix_sign(x);
        op.apply_into(x, w);
        ++matvecs;
        const double e = dot(x, w);
        axpy(-e, x, w);
        const double res = norm(w);
        true_worst = std::max(true_worst, res);
        out.push_back(EigenPair{e, std::move(x), res});
      }
      best_residual = std::min(best_residual, true_worst);
      if (true_worst <= opts.tol) {
        std::stable_sort(out.begin(), out.end(),
                         [](const EigenPair& a, const EigenPair& b) { return a.energy < b.energy; });
        return out;
      }
      if (exhausted) {
        throw ConvergenceError("Lanczos: full space spanned but residual " +
                                   std::to_string(true_worst) + " above tolerance",
                               true_worst);
      }
    } else {
      best_residual = std::min(best_residual, worst);
    }

    if (matvecs >= opts.max_matvecs) {
      throw ConvergenceError("Lanczos: no convergence after " + std::to_string(matvecs) +
                                 " matrix-vector products",
                             best_residual);
    }

    // Thick restart: keep the lowest Ritz vectors, continue from the residual.
    const auto keep = static_cast<Eigen::Index>(std::min(keep_target, basis.size() - 1));
    std::vector<std::vector<double>> kept(static_cast<std::size_t>(keep),
                                          std::vector<double>(dim, 0.0));
    for (Eigen::Index i = 0; i < keep; ++i) {
      for (Eigen::Index b = 0; b < m; ++b) {
        axpy(y(b, i), basis[static_cast<std::size_t>(b)], kept[static_cast<std::size_t>(i)]);
      }
    }
    basis = std::move(kept);
    proj.setZero();
    for (Eigen::Index i = 0; i < keep; ++i) proj(i, i) = theta(i);
    if (q.empty() || beta == 0.0) {
      q = fresh_direction(basis, dim, rng);
    } else {
      orthogonalize(basis, q);
      const double nq = norm(q);
      for (auto& x : q) x /= nq;
    }
  }
}

std::vector<double> dense_spectrum(const SparseOperator& op) {
  const std::size_t dim = op.dim();
  if (dim > kDenseCap) {
    throw Error(ErrorCode::kRefusal, "dense diagonalization refused for dimension " +
                                         std::to_string(dim) + " (cap " +
                                         std::to_string(kDenseCap) + ")");
  }
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd dense = Eigen::MatrixXd::Zero(n, n);
  const auto rp = op.row_ptr();
  const auto cols = op.cols();
  const auto vals = op.values();
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t idx = rp[r]; idx < rp[r + 1]; ++idx) {
      dense(static_cast<Eigen::Index>(r), cols[idx]) = vals[idx];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace spinchannel
