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
#include <span>
#include <vector>

#include "qsd/dynamics.hpp"

namespace qsd {

// Below this, both bound denominators count as frozen dynamics.
inline constexpr double kFrozenDenominator = 1e-14;

// Closed-system bound max(pi / 2 dE, pi / 2 E) in hbar = 1 units.
double closed_system_bound(double delta_e, double mean_e);

// tr(rho_a rho_b) / tr(rho_a^2).
double relative_purity(const QubitState& rho_a, const QubitState& rho_b);

struct Matrix2c {
  std::complex<double> m00, m01, m10, m11;
  static Matrix2c from_state(const QubitState& s) {
    return {s.rho_ee, s.rho_eg, std::conj(s.rho_eg), 1.0 - s.rho_ee};
  }
};

// Singular values (|eigenvalues|) of a 2x2 Hermitian matrix, sorted
// descending. Rejects matrices that are not Hermitian within herm_tol.
std::array<double, 2> hermitian_singular_values(const Matrix2c& m, double herm_tol = 1e-12);

struct QslResult {
  double tau = 0.0;        // window start
  double tau_d = 0.0;      // driving time
  double tau_qsl = 0.0;    // max(tau_ml, tau_mt)
  double tau_ml = 0.0;
  double tau_mt = 0.0;
  double rel_purity = 1.0;
  bool frozen = false;          // both denominators below kFrozenDenominator
  bool exceeds_window = false;  // tau_qsl > tau_d beyond round-off; never clamped
};

// Relative-purity speed-limit bounds over the window [tau, tau + tau_d]:
// the shared numerator is |R(tau+tau_d) - 1| tr(rho_tau^2); the ML
// denominator averages sum_i sigma_i(drho/dt) sigma_i(rho_tau) with both
// lists sorted descending, the MT denominator averages the rms of the
// drho/dt singular values. Time averages by composite Simpson on n_steps
// panels (rounded up to even); drho/dt uses the analytic df/dt.
QslResult qsl_generic(const ModelConfig& cfg, const QubitState& initial, double tau, double tau_d,
                      std::size_t n_steps);

// Dephasing closed form
//   C_l1(rho(0)) |f(tau) f(tau+tau_d) - f(tau)^2| / avg |df/dt|,
// equal to the ML route of qsl_generic whenever f is real (no disturbance,
// omega_s = 0).
double qsl_dephasing(const ModelConfig& cfg, const QubitState& initial, double tau, double tau_d,
                     std::size_t n_steps);

// Independent evaluations in input order; tau recorded per row.
std::vector<QslResult> qsl_sweep(const ModelConfig& cfg, const QubitState& initial,
                                 std::span<const double> tau_values, double tau_d,
                                 std::size_t n_steps, unsigned jobs = 1);

}  // namespace qsd
