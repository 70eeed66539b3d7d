// Copyright 2026 The spinchannel Authors
// SPDX-License-Identifier: Apache-2.0

#include "spinchannel/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <numbers>
#include <string>

#include "spinchannel/error.hpp"
#include "spinchannel/krylov.hpp"
#include "spinchannel/scaling.hpp"

namespace spinchannel {

namespace {

constexpr double kSeriesWindow = 1e-6;

Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Eigen::MatrixXcd ckron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// S_x . S_y on three spins (S, A, B) in the {up, down}^3 product basis.
Eigen::MatrixXd heisenberg_pair(int x, int y) {
  Eigen::MatrixXd sz(2, 2), sp(2, 2), id = Eigen::MatrixXd::Identity(2, 2);
  sz << 0.5, 0.0, 0.0, -0.5;
  sp << 0.0, 1.0, 0.0, 0.0;
  const Eigen::MatrixXd sm = sp.transpose();
  auto embed = [&](const Eigen::MatrixXd& ox, const Eigen::MatrixXd& oy) {
    Eigen::MatrixXd ops[3] = {id, id, id};
    ops[x] = ox;
    ops[y] = oy;
    return kron(kron(ops[0], ops[1]), ops[2]);
  };
  return embed(sz, sz) + 0.5 * (embed(sp, sm) + embed(sm, sp));
}

}  // namespace

Frequencies frequencies(double j_eff, double gamma) {
  Frequencies f;
  f.omega = std::sqrt(j_eff * j_eff - j_eff * gamma + gamma * gamma);
  f.omega_plus = f.omega + (j_eff + gamma);
  f.omega_minus = f.omega - (j_eff + gamma);
  return f;
}

EffectiveModel effective_model(const ChainSpec& spec, double gap, double alpha) {
  EffectiveModel m;
  m.j_eff = gap;
  m.gamma = spec.gamma.value_or(gap);
  m.length = spec.length;
  m.jp_over_j = spec.jp / spec.j;
  m.alpha = alpha;
  m.valid = validity_window(spec.jp, spec.j, alpha, spec.length);
  return m;
}

EffectiveModel effective_coupling(const ChainSpec& spec, std::optional<double> alpha,
                                  const LanczosOptions& opts) {
  ChainSpec bare = spec;
  bare.gamma.reset();
  const auto spectral = spectral_data(bare, opts);
  if (!alpha) {
    const int start = std::max(8, spec.length - 6);
    const int lengths[] = {start, start + 2, start + 4, start + 6};
    alpha = fit_power_law(gap_sweep(lengths, spec.jp, spec.j, opts)).alpha;
  }
  auto model = effective_model(spec, spectral.gap, *alpha);
  model.g = std::clamp(spectral.gzz_ground, WernerParameter::kMin, WernerParameter::kMax);
  return model;
}

double closed_form_fidelity(const EffectiveModel& model, double t) {
  const double j = model.j_eff;
  const double gm = model.gamma;
  const double g = model.g;
  const auto w = frequencies(j, gm);
  const double bracket = w.omega_minus * std::cos(t * w.omega_plus / 2.0) +
                         w.omega_plus * std::cos(t * w.omega_minus / 2.0);
  const double num = (22.0 + 4.0 * g) * (j * j + gm * gm) - gm * j * (19.0 + 10.0 * g) -
                     2.0 * (1.0 + g) * w.omega * bracket +
                     3.0 * gm * j * (2.0 * g - 1.0) * std::cos(w.omega * t);
  return num / (36.0 * w.omega * w.omega);
}

bool commensurate(const EffectiveModel& model) {
  return std::abs(model.gamma - model.j_eff) <= 1e-9 * std::abs(model.j_eff);
}

double optimal_time(const EffectiveModel& model) {
  if (!commensurate(model)) {
    throw Error(ErrorCode::kUnsupportedRegime,
                "closed-form optimal time needs gamma = J_eff; use numeric_peak");
  }
  const double g = model.g;
  const double j = model.j_eff;
  if (std::abs(g + 1.0) <= kSeriesWindow) {
    return std::numbers::pi / j + (2.0 / 3.0) * (g + 1.0) / j;
  }
  const double arg = (1.0 - 2.0 * g - std::sqrt(12.0 * g * g + 12.0 * g + 9.0)) / (4.0 * (1.0 + g));
  return 2.0 / j * std::acos(std::clamp(arg, -1.0, 1.0));
}

double max_fidelity(const WernerParameter& gp) {
  const double g = gp.value();
  const double d = g + 1.0;
  if (std::abs(d) <= kSeriesWindow) {
    return 1.0 - (2.0 / 9.0) * d + (1.0 / 18.0) * d * d;
  }
  const double q = 4.0 * g * g + 4.0 * g + 3.0;
  // sqrt(3) q^(3/2) written as q sqrt(3q) so that g = 0 gives 9 exactly.
  return (q * std::sqrt(3.0 * q) + 24.0 * g * g + 66.0 * g + 33.0) / (48.0 * d * d);
}

Peak numeric_peak(const EffectiveModel& model, double t_max) {
  return numeric_peak_of([&](double t) { return closed_form_fidelity(model, t); }, t_max);
}

double three_site_oracle(const EffectiveModel& model, double t, const Eigen::Vector2cd& xi_in) {
  const Eigen::Vector2cd xi = xi_in.normalized();
  const Eigen::MatrixXd h = model.gamma * heisenberg_pair(0, 1) + model.j_eff * heisenberg_pair(1, 2);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);

  const Eigen::Matrix2cd proj = xi * xi.adjoint();
  const Eigen::Matrix4cd rho_ab =
      werner_density_matrix(WernerParameter(model.g)).cast<std::complex<double>>();
  const Eigen::MatrixXcd rho0 = ckron(proj, rho_ab);

  const Eigen::VectorXcd phases =
      (eig.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0.0, -t))
          .array()
          .exp();
  const Eigen::MatrixXcd v = eig.eigenvectors().cast<std::complex<double>>();
  const Eigen::MatrixXcd u = v * phases.asDiagonal() * v.adjoint();
  const Eigen::MatrixXcd rho_t = u * rho0 * u.adjoint();

  const Eigen::MatrixXcd observe = ckron(Eigen::Matrix4cd::Identity(), proj);
  return (rho_t * observe).trace().real();
}

TransferCurve closed_form_curve(const EffectiveModel& model, std::span<const double> times) {
  TransferCurve curve;
  curve.mode = TransferMode::kClosedForm;
  curve.times.assign(times.begin(), times.end());
  for (double t : times) {
    const double f = closed_form_fidelity(model, t);
    curve.fidelities.push_back(f);
    curve.theta.push_back(2.0 * f - 1.0);
  }
  if (!times.empty() && times.back() > 0.0) {
    try {
      const auto peak = numeric_peak(model, times.back());
      curve.t_star = peak.t_star;
      curve.f_star = peak.f_star;
      return curve;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kFlatCurve) throw;
    }
  }
  if (!curve.fidelities.empty()) {
    const auto it = std::max_element(curve.fidelities.begin(), curve.fidelities.end());
    curve.f_star = *it;
    curve.t_star = curve.times[static_cast<std::size_t>(it - curve.fidelities.begin())];
  }
  return curve;
}

namespace {

struct Branch {
  double weight;
  int chain_twice_sz;
  const std::vector<double>* chain_vector;
};

struct BranchResult {
  std::vector<double> sz_b;
  double drift = 0.0;
};

BranchResult evolve_branch(const ChainSpec& spec, const Branch& branch, std::span<const double> times,
                           const FullChainOptions& opts) {
  const int n_chain = spec.length;
  const int sender_twice = opts.sender_up ? 1 : -1;
  const Sector chain_sector(n_chain, branch.chain_twice_sz);
  const Sector sector(n_chain + 1, branch.chain_twice_sz + sender_twice);
  const auto h = build_transfer_hamiltonian(spec, sector);

  ComplexVector psi(sector.dim(), {0.0, 0.0});
  const Config sender_bit = opts.sender_up ? 1 : 0;
  for (std::size_t i = 0; i < chain_sector.dim(); ++i) {
    const Config full = (chain_sector[i] << 1) | sender_bit;
    psi[*sector.index_of(full)] = (*branch.chain_vector)[i];
  }

  const int b_bit = n_chain;  // chain site L, shifted past the sender
  KrylovOptions kopts;
  kopts.max_dim = opts.krylov_dim;
  kopts.step_tol = opts.krylov_tol;
  KrylovPropagator prop(h, kopts);

  BranchResult out;
  out.sz_b.reserve(times.size());
  double now = 0.0;
  for (double t : times) {
    prop.evolve(psi, t - now);
    now = t;
    double sz = 0.0;
    double nrm = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      const double p = std::norm(psi[i]);
      nrm += p;
      sz += ((sector[i] >> b_bit) & 1ULL) ? p : -p;
    }
    out.sz_b.push_back(sz);
    out.drift = std::max(out.drift, std::abs(std::sqrt(nrm) - 1.0));
  }
  return out;
}

}  // namespace

TransferCurve full_chain_transfer(const ChainSpec& spec, const ChainEigenstates& states,
                                  double temperature, std::span<const double> times,
                                  const FullChainOptions& opts) {
  if (!spec.gamma) {
    throw Error(ErrorCode::kConfiguration, "full-chain transfer needs a sender coupling gamma");
  }
  spec.validate();
  if (states.n_sites != spec.length) {
    throw Error(ErrorCode::kDimension, "eigenstates were computed for a different chain length");
  }
  if (!(temperature >= 0.0)) throw Error(ErrorCode::kDomain, "temperature must be >= 0");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 0.0 || (i > 0 && times[i] < times[i - 1])) {
      throw Error(ErrorCode::kDomain, "time grid must be non-negative and ascending");
    }
  }

  double w = 0.0;
  if (temperature > 0.0) w = triplet_weight(states.spectral.gap, temperature);
  const double z = 1.0 + 3.0 * w;
  std::vector<Branch> branches{{1.0 / z, 0, &states.ground}};
  if (w > 0.0) {
    branches.push_back({w / z, 2, &states.triplet_plus});
    branches.push_back({w / z, 0, &states.triplet_zero});
    branches.push_back({w / z, -2, &states.triplet_minus});
  }

  std::vector<std::future<BranchResult>> jobs;
  jobs.reserve(branches.size());
  for (const auto& b : branches) {
    jobs.push_back(std::async(std::launch::async,
                              [&, b] { return evolve_branch(spec, b, times, opts); }));
  }
  std::vector<BranchResult> results;
  for (auto& j : jobs) results.push_back(j.get());

  TransferCurve curve;
  curve.mode = TransferMode::kFullChain;
  curve.times.assign(times.begin(), times.end());
  const double sign = opts.sender_up ? 1.0 : -1.0;
  for (std::size_t k = 0; k < times.size(); ++k) {
    double sz = 0.0;
    for (std::size_t b = 0; b < branches.size(); ++b) sz += branches[b].weight * results[b].sz_b[k];
    curve.sigma_z_b.push_back(sz);
    curve.theta.push_back(sign * sz);
    curve.fidelities.push_back(0.5 * (1.0 + sign * sz));
  }
  for (const auto& r : results) curve.max_norm_drift = std::max(curve.max_norm_drift, r.drift);
  if (!curve.fidelities.empty()) {
    const auto it = std::max_element(curve.fidelities.begin(), curve.fidelities.end());
    curve.f_star = *it;
    curve.t_star = curve.times[static_cast<std::size_t>(it - curve.fidelities.begin())];
  }
  return curve;
}

TransferCurve full_chain_transfer(const ChainSpec& spec, double temperature,
                                  std::span<const double> times, const FullChainOptions& opts) {
  return full_chain_transfer(spec, chain_eigenstates(spec, opts.eigen), temperature, times, opts);
}

}  // namespace spinchannel
