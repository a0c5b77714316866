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

#include <span>
#include <variant>

namespace qsd {

// Ohmic family J(w) = eta w^s / omega_c^{s-1} exp(-w / omega_c), w >= 0.
// s < 1 is sub-Ohmic, s = 1 Ohmic, s > 1 super-Ohmic.
struct OhmicBath {
  double eta = 1.0;
  double s = 1.0;
  double omega_c = 1.0;
  void validate() const;  // throws std::invalid_argument
};

// Lorentzian line J(w) = (gamma / 2 pi) lambda^2 / ((w - delta)^2 + lambda^2),
// centred at delta with width lambda.
struct LorentzianBath {
  double gamma = 1.0;
  double lambda = 1.0;
  double delta = 0.0;
  void validate() const;
};

using SpectralDensity = std::variant<OhmicBath, LorentzianBath>;

void validate(const SpectralDensity& bath);

// J(w); the Ohmic variant is zero for w < 0, the Lorentzian extends over the
// whole real line.
double spectral_density(const SpectralDensity& bath, double omega);

// Auxiliary-qubit disturbance settings: the qubit interacted with the bath
// for a duration t_a before the system qubit attached, and its state enters
// only through sz_a = <sigma_z>. enabled=false (or t_a=0) removes the cross
// term entirely.
struct DisturbanceConfig {
  bool enabled = false;
  double t_a = 0.0;
  double sz_a = 0.0;
  void validate() const;
  bool active() const { return enabled && t_a > 0.0; }
};

// Real decoherence function G_R(t) = int dw J(w) (1 - cos wt) / w^2.
// G_R(0) = 0 and G_R is continuous in t. Throws std::domain_error for t < 0.
double g_real(const SpectralDensity& bath, double t);

// psi(t) = int dw J(w) sin(wt) / w^2, the building block of the disturbance
// cross term. psi(0) = 0.
double psi(const SpectralDensity& bath, double t);

// Imaginary cross term G_I(t) = psi(t + t_a) - psi(t) - psi(t_a) for an
// active disturbance, 0 otherwise. t is elapsed time since the system qubit
// attached.
double g_imag_cross(const SpectralDensity& bath, const DisturbanceConfig& dist, double t);

// Closed-form time derivatives (used by the quantum-speed-limit integrals).
double g_real_deriv(const SpectralDensity& bath, double t);
double psi_deriv(const SpectralDensity& bath, double t);
double g_imag_cross_deriv(const SpectralDensity& bath, const DisturbanceConfig& dist, double t);

// Grid variants; out spans must match t. All samples must be >= 0.
void g_real_grid(const SpectralDensity& bath, std::span<const double> t, std::span<double> out);
void psi_grid(const SpectralDensity& bath, std::span<const double> t, std::span<double> out);
void g_derivs_grid(const SpectralDensity& bath, std::span<const double> t, std::span<double> dg_r,
                   std::span<double> dpsi);
void g_imag_cross_grid(const SpectralDensity& bath, const DisturbanceConfig& dist,
                       std::span<const double> t, std::span<double> out);
void g_imag_cross_deriv_grid(const SpectralDensity& bath, const DisturbanceConfig& dist,
                             std::span<const double> t, std::span<double> out);

}  // namespace qsd
