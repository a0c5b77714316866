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

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace qsd::kernels {

// Grid kernels evaluate the decoherence functions and the dephasing factor
// over arrays of time samples. Every kernel exists as a scalar reference
// implementation and as SIMD variants built from the same element-wise
// template; the dispatch layer selects one table at runtime.

enum class BackendKind { scalar, simd_native, simd_avx2 };

// Precomputed Ohmic bath constants. `eta_gamma_sm1` is eta * Gamma(s - 1)
// (unused when s_is_one), `eta_wc_gamma_s` is eta * omega_c * Gamma(s).
struct OhmicParams {
  double eta;
  double s;
  double omega_c;
  double eta_gamma_sm1;
  double eta_wc_gamma_s;
  bool s_is_one;
};
OhmicParams make_ohmic_params(double eta, double s, double omega_c);

// Precomputed Lorentzian bath constants with kappa = delta / lambda:
// c0 = gamma / (2 lambda (1 + kappa^2)), a = (1 - kappa^2)/(1 + kappa^2),
// b = 2 kappa / (1 + kappa^2).
struct LorentzParams {
  double c0;
  double a;
  double b;
  double lambda;
  double delta;
};
LorentzParams make_lorentz_params(double gamma, double lambda, double delta);

// Inputs for the dephasing-factor and derivative kernels.
struct FactorParams {
  double sz_a = 0.0;
  double omega_s = 0.0;
  bool disturbed = false;
};

struct KernelTable {
  const char* name;
  void (*ohmic_g_real)(const OhmicParams&, const double* t, double* out, std::size_t n);
  void (*ohmic_psi)(const OhmicParams&, const double* t, double* out, std::size_t n);
  // Writes d/dt G_R into dgr and d/dt psi into dpsi.
  void (*ohmic_derivs)(const OhmicParams&, const double* t, double* dgr, double* dpsi, std::size_t n);
  void (*lorentz_g_real)(const LorentzParams&, const double* t, double* out, std::size_t n);
  void (*lorentz_psi)(const LorentzParams&, const double* t, double* out, std::size_t n);
  void (*lorentz_derivs)(const LorentzParams&, const double* t, double* dgr, double* dpsi, std::size_t n);
  // f(t) from sampled G_R and G_I (g_i may be null when !p.disturbed):
  // f = [cos G_I - i sz_a sin G_I] exp(i omega_s t - G_R).
  void (*dephasing_factor)(const FactorParams&, const double* t, const double* g_r,
                           const double* g_i, double* re_f, double* im_f, double* abs_f,
                           std::size_t n);
  // Analytic df/dt from G_R, G_I and their derivatives (g_i/dgi null when
  // !p.disturbed).
  void (*fdot)(const FactorParams&, const double* t, const double* g_r, const double* g_i,
               const double* dgr, const double* dgi, double* re, double* im, std::size_t n);
};

bool backend_available(BackendKind kind);
// Throws std::invalid_argument when the backend was not compiled in or the
// CPU lacks the required features.
const KernelTable& table(BackendKind kind);

// Active-table selection. nullopt restores auto-detection (best available,
// honouring the QSL_DISTURB_BACKEND environment variable: one of
// "auto", "scalar", "simd", "avx2").
void set_active(std::optional<BackendKind> kind);
const KernelTable& active();
BackendKind active_kind();

std::vector<BackendKind> available_backends();
std::string_view backend_name(BackendKind kind);
std::optional<BackendKind> parse_backend(std::string_view name);  // "scalar"/"simd"/"avx2"

}  // namespace qsd::kernels
