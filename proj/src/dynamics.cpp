// Copyright 2026 The qsl-disturb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsd/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "qsd/kernels.hpp"

namespace qsd {

namespace {

// Positivity check leaves room for round-off from state algebra.
constexpr double kStateTol = 1e-12;

kernels::FactorParams factor_params(const ModelConfig& cfg) {
  kernels::FactorParams p;
  p.sz_a = cfg.dist.sz_a;
  p.omega_s = cfg.omega_s;
  p.disturbed = cfg.dist.active();
  return p;
}

}  // namespace

void QubitState::validate() const {
  if (!(rho_ee >= 0.0 && rho_ee <= 1.0))
    throw std::invalid_argument("QubitState: rho_ee must lie in [0, 1]");
  if (std::norm(rho_eg) > rho_ee * (1.0 - rho_ee) + kStateTol)
    throw std::invalid_argument("QubitState: |rho_eg|^2 exceeds rho_ee (1 - rho_ee)");
}

QubitState QubitState::from_bloch(double r1, double r2, double r3) {
  QubitState s;
  s.rho_ee = 0.5 * (1.0 + r3);
  s.rho_eg = {0.5 * r1, -0.5 * r2};
  s.validate();
  return s;
}

std::array<double, 3> QubitState::bloch() const {
  return {2.0 * rho_eg.real(), -2.0 * rho_eg.imag(), 2.0 * rho_ee - 1.0};
}

QubitState QubitState::maximally_coherent(double phase) {
  QubitState s;
  s.rho_ee = 0.5;
  s.rho_eg = 0.5 * std::complex<double>(std::cos(phase), std::sin(phase));
  return s;
}

void ModelConfig::validate() const {
  qsd::validate(bath);
  dist.validate();
  if (!(omega_s >= 0.0)) throw std::invalid_argument("ModelConfig: omega_s must be >= 0");
}

std::complex<double> dephasing_factor(const ModelConfig& cfg, double t) {
  cfg.validate();
  const double gr = g_real(cfg.bath, t);
  const double gi = g_imag_cross(cfg.bath, cfg.dist, t);
  double re, im, af;
  kernels::active().dephasing_factor(factor_params(cfg), &t, &gr, &gi, &re, &im, &af, 1);
  return {re, im};
}

std::complex<double> dephasing_factor_deriv(const ModelConfig& cfg, double t) {
  cfg.validate();
  const double gr = g_real(cfg.bath, t);
  const double gi = g_imag_cross(cfg.bath, cfg.dist, t);
  double dgr, dpsi_unused, re, im;
  g_derivs_grid(cfg.bath, {&t, 1}, {&dgr, 1}, {&dpsi_unused, 1});
  const double dgi = g_imag_cross_deriv(cfg.bath, cfg.dist, t);
  kernels::active().fdot(factor_params(cfg), &t, &gr, &gi, &dgr, &dgi, &re, &im, 1);
  return {re, im};
}

QubitState evolve_state(const ModelConfig& cfg, const QubitState& initial, double t) {
  initial.validate();
  QubitState out = initial;
  out.rho_eg = initial.rho_eg * dephasing_factor(cfg, t);
  return out;
}

double coherence_l1(const QubitState& state) {
  state.validate();
  return 2.0 * std::abs(state.rho_eg);
}

Trajectory Trajectory::from_samples(std::vector<double> t, std::vector<std::complex<double>> f,
                                    std::vector<double> g_r, std::vector<double> g_i,
                                    std::vector<double> c_l1) {
  if (t.size() < 2) throw std::invalid_argument("Trajectory: need at least two samples");
  if (f.size() != t.size() || g_r.size() != t.size() || g_i.size() != t.size() ||
      c_l1.size() != t.size())
    throw std::invalid_argument("Trajectory: sample arrays must have equal length");
  const double dt = t[1] - t[0];
  if (!(dt > 0.0)) throw std::invalid_argument("Trajectory: grid must be strictly increasing");
  for (std::size_t k = 1; k < t.size(); ++k) {
    const double step = t[k] - t[k - 1];
    if (std::abs(step - dt) > 1e-9 * std::max(1.0, std::abs(dt)))
      throw std::invalid_argument("Trajectory: grid must be uniform");
  }
  Trajectory traj;
  traj.t = std::move(t);
  traj.f = std::move(f);
  traj.g_r = std::move(g_r);
  traj.g_i = std::move(g_i);
  traj.c_l1 = std::move(c_l1);
  return traj;
}

Trajectory coherence_trajectory(const ModelConfig& cfg, const QubitState& initial, double t_max,
                                std::size_t n_steps) {
  cfg.validate();
  initial.validate();
  if (!(t_max > 0.0)) throw std::invalid_argument("coherence_trajectory: t_max must be > 0");
  if (n_steps < 2) throw std::invalid_argument("coherence_trajectory: n_steps must be >= 2");

  const std::size_t n = n_steps + 1;
  Trajectory traj;
  traj.t.resize(n);
  const double dt = t_max / static_cast<double>(n_steps);
  for (std::size_t k = 0; k < n; ++k) traj.t[k] = dt * static_cast<double>(k);
  traj.t.back() = t_max;

  traj.g_r.resize(n);
  traj.g_i.resize(n);
  g_real_grid(cfg.bath, traj.t, traj.g_r);
  g_imag_cross_grid(cfg.bath, cfg.dist, traj.t, traj.g_i);

  std::vector<double> re(n), im(n), af(n);
  kernels::active().dephasing_factor(factor_params(cfg), traj.t.data(), traj.g_r.data(),
                                     traj.g_i.data(), re.data(), im.data(), af.data(), n);

  traj.f.resize(n);
  traj.c_l1.resize(n);
  const double c0 = 2.0 * std::abs(initial.rho_eg);
  for (std::size_t k = 0; k < n; ++k) {
    traj.f[k] = {re[k], im[k]};
    traj.c_l1[k] = c0 * af[k];
  }
  return traj;
}

}  // namespace qsd
