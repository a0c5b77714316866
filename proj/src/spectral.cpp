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

#include "qsd/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsd/kernels.hpp"

namespace qsd {

namespace {

void require_nonnegative_times(std::span<const double> t, const char* who) {
  for (double x : t)
    if (!(x >= 0.0)) throw std::domain_error(std::string(who) + ": time must be >= 0");
}

void require_sizes(std::span<const double> t, std::span<const double> out, const char* who) {
  if (t.size() != out.size())
    throw std::invalid_argument(std::string(who) + ": output span size mismatch");
}

kernels::OhmicParams params(const OhmicBath& b) {
  return kernels::make_ohmic_params(b.eta, b.s, b.omega_c);
}

kernels::LorentzParams params(const LorentzianBath& b) {
  return kernels::make_lorentz_params(b.gamma, b.lambda, b.delta);
}

}  // namespace

void OhmicBath::validate() const {
  if (!(eta >= 0.0)) throw std::invalid_argument("OhmicBath: eta must be >= 0");
  if (!(s > 0.0)) throw std::invalid_argument("OhmicBath: s must be > 0");
  if (!(omega_c > 0.0)) throw std::invalid_argument("OhmicBath: omega_c must be > 0");
}

void LorentzianBath::validate() const {
  if (!(gamma >= 0.0)) throw std::invalid_argument("LorentzianBath: gamma must be >= 0");
  if (!(lambda > 0.0)) throw std::invalid_argument("LorentzianBath: lambda must be > 0");
  if (!(delta >= 0.0)) throw std::invalid_argument("LorentzianBath: delta must be >= 0");
}

void validate(const SpectralDensity& bath) {
  std::visit([](const auto& b) { b.validate(); }, bath);
}

void DisturbanceConfig::validate() const {
  if (!(t_a >= 0.0)) throw std::invalid_argument("DisturbanceConfig: t_a must be >= 0");
  if (!(sz_a >= -1.0 && sz_a <= 1.0))
    throw std::invalid_argument("DisturbanceConfig: sz_a must lie in [-1, 1]");
}

double spectral_density(const SpectralDensity& bath, double omega) {
  if (const auto* o = std::get_if<OhmicBath>(&bath)) {
    if (omega <= 0.0) return 0.0;
    return o->eta * std::pow(omega, o->s) * std::pow(o->omega_c, 1.0 - o->s) *
           std::exp(-omega / o->omega_c);
  }
  const auto& l = std::get<LorentzianBath>(bath);
  const double d = omega - l.delta;
  return (l.gamma / (2.0 * std::numbers::pi)) * l.lambda * l.lambda /
         (d * d + l.lambda * l.lambda);
}

void g_real_grid(const SpectralDensity& bath, std::span<const double> t, std::span<double> out) {
  require_sizes(t, out, "g_real");
  require_nonnegative_times(t, "g_real");
  validate(bath);
  const auto& k = kernels::active();
  if (const auto* o = std::get_if<OhmicBath>(&bath))
    k.ohmic_g_real(params(*o), t.data(), out.data(), t.size());
  else
    k.lorentz_g_real(params(std::get<LorentzianBath>(bath)), t.data(), out.data(), t.size());
}

void psi_grid(const SpectralDensity& bath, std::span<const double> t, std::span<double> out) {
  require_sizes(t, out, "psi");
  require_nonnegative_times(t, "psi");
  validate(bath);
  const auto& k = kernels::active();
  if (const auto* o = std::get_if<OhmicBath>(&bath))
    k.ohmic_psi(params(*o), t.data(), out.data(), t.size());
  else
    k.lorentz_psi(params(std::get<LorentzianBath>(bath)), t.data(), out.data(), t.size());
}

void g_derivs_grid(const SpectralDensity& bath, std::span<const double> t, std::span<double> dg_r,
                   std::span<double> dpsi) {
  require_sizes(t, dg_r, "g_derivs");
  require_sizes(t, dpsi, "g_derivs");
  require_nonnegative_times(t, "g_derivs");
  validate(bath);
  const auto& k = kernels::active();
  if (const auto* o = std::get_if<OhmicBath>(&bath))
    k.ohmic_derivs(params(*o), t.data(), dg_r.data(), dpsi.data(), t.size());
  else
    k.lorentz_derivs(params(std::get<LorentzianBath>(bath)), t.data(), dg_r.data(), dpsi.data(),
                     t.size());
}

double g_real(const SpectralDensity& bath, double t) {
  double out;
  g_real_grid(bath, {&t, 1}, {&out, 1});
  return out;
}

double psi(const SpectralDensity& bath, double t) {
  double out;
  psi_grid(bath, {&t, 1}, {&out, 1});
  return out;
}

double g_real_deriv(const SpectralDensity& bath, double t) {
  double dgr, dps;
  g_derivs_grid(bath, {&t, 1}, {&dgr, 1}, {&dps, 1});
  return dgr;
}

double psi_deriv(const SpectralDensity& bath, double t) {
  double dgr, dps;
  g_derivs_grid(bath, {&t, 1}, {&dgr, 1}, {&dps, 1});
  return dps;
}

void g_imag_cross_grid(const SpectralDensity& bath, const DisturbanceConfig& dist,
                       std::span<const double> t, std::span<double> out) {
  require_sizes(t, out, "g_imag_cross");
  dist.validate();
  if (!dist.active()) {
    require_nonnegative_times(t, "g_imag_cross");
    validate(bath);
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  // G_I(t) = psi(t + t_a) - psi(t) - psi(t_a); exact additivity by construction.
  std::vector<double> shifted(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) shifted[i] = t[i] + dist.t_a;
  psi_grid(bath, shifted, out);
  std::vector<double> at_t(t.size());
  psi_grid(bath, t, at_t);
  const double at_ta = psi(bath, dist.t_a);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] -= at_t[i] + at_ta;
}

void g_imag_cross_deriv_grid(const SpectralDensity& bath, const DisturbanceConfig& dist,
                             std::span<const double> t, std::span<double> out) {
  require_sizes(t, out, "g_imag_cross_deriv");
  dist.validate();
  if (!dist.active()) {
    require_nonnegative_times(t, "g_imag_cross_deriv");
    validate(bath);
    std::fill(out.begin(), out.end(), 0.0);
    return;
  }
  std::vector<double> shifted(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) shifted[i] = t[i] + dist.t_a;
  std::vector<double> scratch(t.size());
  g_derivs_grid(bath, shifted, scratch, out);  // out = psi'(t + t_a)
  std::vector<double> dpsi_t(t.size());
  g_derivs_grid(bath, t, scratch, dpsi_t);
  for (std::size_t i = 0; i < t.size(); ++i) out[i] -= dpsi_t[i];
}

double g_imag_cross(const SpectralDensity& bath, const DisturbanceConfig& dist, double t) {
  double out;
  g_imag_cross_grid(bath, dist, {&t, 1}, {&out, 1});
  return out;
}

double g_imag_cross_deriv(const SpectralDensity& bath, const DisturbanceConfig& dist, double t) {
  double out;
  g_imag_cross_deriv_grid(bath, dist, {&t, 1}, {&out, 1});
  return out;
}

}  // namespace qsd
