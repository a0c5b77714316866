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

#include "qsd/qsl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qsd/kernels.hpp"
#include "qsd/parallel.hpp"

namespace qsd {

namespace {

// Window samples shared by the generic and dephasing evaluators.
struct WindowGrid {
  std::vector<double> t;
  std::vector<double> fdot_re, fdot_im;
  std::complex<double> f_start, f_end;
  double h = 0.0;
  std::size_t panels = 0;
};

WindowGrid sample_window(const ModelConfig& cfg, double tau, double tau_d, std::size_t n_steps) {
  cfg.validate();
  if (!(tau >= 0.0)) throw std::invalid_argument("qsl: tau must be >= 0");
  if (!(tau_d > 0.0)) throw std::invalid_argument("qsl: tau_d must be > 0");
  if (n_steps < 8) throw std::invalid_argument("qsl: n_steps must be >= 8");

  WindowGrid w;
  w.panels = n_steps % 2 == 0 ? n_steps : n_steps + 1;  // Simpson needs an even count
  w.h = tau_d / static_cast<double>(w.panels);
  const std::size_t n = w.panels + 1;
  w.t.resize(n);
  for (std::size_t k = 0; k < n; ++k) w.t[k] = tau + w.h * static_cast<double>(k);
  w.t.back() = tau + tau_d;

  std::vector<double> gr(n), gi(n), dgr(n), dpsi(n), dgi(n);
  g_real_grid(cfg.bath, w.t, gr);
  g_imag_cross_grid(cfg.bath, cfg.dist, w.t, gi);
  g_derivs_grid(cfg.bath, w.t, dgr, dpsi);
  g_imag_cross_deriv_grid(cfg.bath, cfg.dist, w.t, dgi);

  kernels::FactorParams fp;
  fp.sz_a = cfg.dist.sz_a;
  fp.omega_s = cfg.omega_s;
  fp.disturbed = cfg.dist.active();

  w.fdot_re.resize(n);
  w.fdot_im.resize(n);
  kernels::active().fdot(fp, w.t.data(), gr.data(), gi.data(), dgr.data(), dgi.data(),
                         w.fdot_re.data(), w.fdot_im.data(), n);

  std::array<double, 2> re, im, af;
  const double ends[2] = {w.t.front(), w.t.back()};
  const double grs[2] = {gr.front(), gr.back()};
  const double gis[2] = {gi.front(), gi.back()};
  kernels::active().dephasing_factor(fp, ends, grs, gis, re.data(), im.data(), af.data(), 2);
  w.f_start = {re[0], im[0]};
  w.f_end = {re[1], im[1]};
  return w;
}

// Composite Simpson average of per-sample values on the window.
template <class F>
double simpson_average(const WindowGrid& w, F&& value_at) {
  double odd = 0.0, even = 0.0;
  for (std::size_t k = 1; k < w.panels; k += 2) odd += value_at(k);
  for (std::size_t k = 2; k < w.panels; k += 2) even += value_at(k);
  const double integral =
      w.h / 3.0 * (value_at(0) + 4.0 * odd + 2.0 * even + value_at(w.panels));
  return integral / (w.h * static_cast<double>(w.panels));
}

double purity(const QubitState& s) {
  const double p = s.rho_ee;
  return p * p + (1.0 - p) * (1.0 - p) + 2.0 * std::norm(s.rho_eg);
}

}  // namespace

double closed_system_bound(double delta_e, double mean_e) {
  if (!(delta_e > 0.0) || !(mean_e > 0.0))
    throw std::domain_error("closed_system_bound: energies must be > 0");
  return std::max(std::numbers::pi / (2.0 * delta_e), std::numbers::pi / (2.0 * mean_e));
}

double relative_purity(const QubitState& rho_a, const QubitState& rho_b) {
  rho_a.validate();
  rho_b.validate();
  const double overlap = rho_a.rho_ee * rho_b.rho_ee +
                         (1.0 - rho_a.rho_ee) * (1.0 - rho_b.rho_ee) +
                          2.0 * (rho_a.rho_eg * std::conj(rho_b.rho_eg)).real();
  return overlap / purity(rho_a);
}

std::array<double, 2> hermitian_singular_values(const Matrix2c& m, double herm_tol) {
  const double scale = std::max({std::abs(m.m00), std::abs(m.m01), std::abs(m.m10),
                                 std::abs(m.m11), 1.0});
  if (std::abs(m.m00.imag()) > herm_tol * scale || std::abs(m.m11.imag()) > herm_tol * scale ||
      std::abs(m.m01 - std::conj(m.m10)) > herm_tol * scale)
    throw std::invalid_argument("hermitian_singular_values: matrix is not Hermitian");
  const double a = m.m00.real();
  const double d = m.m11.real();
  const double mid = 0.5 * (a + d);
  const double rad = std::hypot(0.5 * (a - d), std::abs(m.m01));
  double s1 = std::abs(mid + rad);
  double s2 = std::abs(mid - rad);
  if (s1 < s2) std::swap(s1, s2);
  return {s1, s2};
}

QslResult qsl_generic(const ModelConfig& cfg, const QubitState& initial, double tau, double tau_d,
                      std::size_t n_steps) {
  initial.validate();
  const auto w = sample_window(cfg, tau, tau_d, n_steps);

  QslResult res;
  res.tau = tau;
  res.tau_d = tau_d;

  QubitState rho_tau = initial;
  rho_tau.rho_eg = initial.rho_eg * w.f_start;
  QubitState rho_end = initial;
  rho_end.rho_eg = initial.rho_eg * w.f_end;

  res.rel_purity = relative_purity(rho_tau, rho_end);
  const double numerator = std::abs(res.rel_purity - 1.0) * purity(rho_tau);

  const auto state_sv = hermitian_singular_values(Matrix2c::from_state(rho_tau));
  const std::complex<double> c0 = initial.rho_eg;
  auto drho_sv = [&](std::size_t k) {
    const Matrix2c drho{0.0, c0 * std::complex<double>(w.fdot_re[k], w.fdot_im[k]),
                        std::conj(c0 * std::complex<double>(w.fdot_re[k], w.fdot_im[k])), 0.0};
    return hermitian_singular_values(drho);
  };
  const double ml_den = simpson_average(w, [&](std::size_t k) {
    const auto sv = drho_sv(k);
    return sv[0] * state_sv[0] + sv[1] * state_sv[1];
  });
  const double mt_den = simpson_average(w, [&](std::size_t k) {
    const auto sv = drho_sv(k);
    return std::sqrt(sv[0] * sv[0] + sv[1] * sv[1]);
  });

  if (ml_den < kFrozenDenominator && mt_den < kFrozenDenominator) {
    res.frozen = true;
    return res;
  }
  res.tau_ml = ml_den > 0.0 ? numerator / ml_den : 0.0;
  res.tau_mt = mt_den > 0.0 ? numerator / mt_den : 0.0;
  res.tau_qsl = std::max(res.tau_ml, res.tau_mt);
  res.exceeds_window = res.tau_qsl > tau_d * (1.0 + 1e-9);
  return res;
}

double qsl_dephasing(const ModelConfig& cfg, const QubitState& initial, double tau, double tau_d,
                     std::size_t n_steps) {
  initial.validate();
  const auto w = sample_window(cfg, tau, tau_d, n_steps);

  const double c_l1_0 = 2.0 * std::abs(initial.rho_eg);
  const double numerator = c_l1_0 * std::abs(w.f_start * w.f_end - w.f_start * w.f_start);
  const double denominator = simpson_average(
      w, [&](std::size_t k) { return std::hypot(w.fdot_re[k], w.fdot_im[k]); });
  if (denominator < kFrozenDenominator) return 0.0;
  return numerator / denominator;
}

std::vector<QslResult> qsl_sweep(const ModelConfig& cfg, const QubitState& initial,
                                 std::span<const double> tau_values, double tau_d,
                                 std::size_t n_steps, unsigned jobs) {
  for (double tau : tau_values)
    if (!std::isfinite(tau) || tau < 0.0)
      throw std::invalid_argument("qsl_sweep: tau values must be finite and >= 0");
  std::vector<QslResult> out(tau_values.size());
  parallel_for_ordered(tau_values.size(), jobs, [&](std::size_t i) {
    out[i] = qsl_generic(cfg, initial, tau_values[i], tau_d, n_steps);
  });
  return out;
}

}  // namespace qsd
