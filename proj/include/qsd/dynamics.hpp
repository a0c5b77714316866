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

#pragma once

#include <array>
#include <complex>
#include <vector>

#include "qsd/spectral.hpp"

namespace qsd {

// Qubit density matrix in the energy basis, stored as the excited-state
// population and the upper off-diagonal element; rho_gg and rho_ge are
// implied by trace one and Hermiticity.
struct QubitState {
  double rho_ee = 0.5;
  std::complex<double> rho_eg = 0.0;

  void validate() const;  // trace-one positivity: |rho_eg|^2 <= rho_ee (1 - rho_ee)

  // Bloch vector r = (2 Re rho_eg, -2 Im rho_eg, 2 rho_ee - 1).
  static QubitState from_bloch(double r1, double r2, double r3);
  std::array<double, 3> bloch() const;

  // Equatorial pure state with |rho_eg| = 1/2 at the given azimuth.
  static QubitState maximally_coherent(double phase = 0.0);
};

struct ModelConfig {
  SpectralDensity bath = OhmicBath{};
  DisturbanceConfig dist{};
  double omega_s = 0.0;  // free system frequency; 0 keeps the pure dephasing factor
  void validate() const;
};

// Dephasing factor multiplying the coherence:
//   f(t) = [cos G_I(t) - i <sigma_z^a> sin G_I(t)] exp(i omega_s t - G_R(t)),
// reducing to exp(i omega_s t - G_R(t)) without disturbance. f(0) = 1.
std::complex<double> dephasing_factor(const ModelConfig& cfg, double t);

// Analytic df/dt.
std::complex<double> dephasing_factor_deriv(const ModelConfig& cfg, double t);

// Pure dephasing channel: populations unchanged, rho_eg(t) = rho_eg(0) f(t).
QubitState evolve_state(const ModelConfig& cfg, const QubitState& initial, double t);

// l1-norm of coherence, 2 |rho_eg|.
double coherence_l1(const QubitState& state);

// Uniform sampling of f, G_R, G_I and C_l1 on [0, t_max].
struct Trajectory {
  std::vector<double> t;
  std::vector<std::complex<double>> f;
  std::vector<double> g_r;
  std::vector<double> g_i;
  std::vector<double> c_l1;

  std::size_t size() const { return t.size(); }
  double dt() const { return t.size() > 1 ? t[1] - t[0] : 0.0; }

  // For trajectories assembled from externally produced samples; rejects
  // non-uniform or non-increasing grids.
  static Trajectory from_samples(std::vector<double> t, std::vector<std::complex<double>> f,
                                 std::vector<double> g_r, std::vector<double> g_i,
                                 std::vector<double> c_l1);
};

Trajectory coherence_trajectory(const ModelConfig& cfg, const QubitState& initial, double t_max,
                                std::size_t n_steps);

}  // namespace qsd
