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

#include "qsd/kernels.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qsd::kernels {

namespace detail {
const KernelTable& scalar_table();
const KernelTable& native_table();
#if QSD_HAVE_AVX2_TU
const KernelTable& avx2_table();
#endif
}  // namespace detail

namespace {

bool cpu_has_avx2() {
#if QSD_HAVE_AVX2_TU && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

BackendKind detect_best() {
  if (backend_available(BackendKind::simd_avx2)) return BackendKind::simd_avx2;
  return BackendKind::simd_native;
}

BackendKind initial_kind() {
  if (const char* env = std::getenv("QSL_DISTURB_BACKEND")) {
    if (auto k = parse_backend(env); k && backend_available(*k)) return *k;
  }
  return detect_best();
}

std::atomic<BackendKind> g_active{initial_kind()};

}  // namespace

OhmicParams make_ohmic_params(double eta, double s, double omega_c) {
  OhmicParams p{};
  p.eta = eta;
  p.s = s;
  p.omega_c = omega_c;
  // Values of s within 1e-12 of 1 take the logarithmic branch; Gamma(s - 1)
  // has a pole there.
  p.s_is_one = std::abs(s - 1.0) < 1e-12;
  p.eta_gamma_sm1 = p.s_is_one ? 0.0 : eta * std::tgamma(s - 1.0);
  p.eta_wc_gamma_s = eta * omega_c * std::tgamma(s);
  return p;
}

LorentzParams make_lorentz_params(double gamma, double lambda, double delta) {
  LorentzParams p{};
  const double kappa = delta / lambda;
  const double k2 = 1.0 + kappa * kappa;
  p.c0 = gamma / (2.0 * lambda * k2);
  p.a = (1.0 - kappa * kappa) / k2;
  p.b = 2.0 * kappa / k2;
  p.lambda = lambda;
  p.delta = delta;
  return p;
}

bool backend_available(BackendKind kind) {
  switch (kind) {
    case BackendKind::scalar:
    case BackendKind::simd_native:
      return true;
    case BackendKind::simd_avx2:
      return cpu_has_avx2();
  }
  return false;
}

const KernelTable& table(BackendKind kind) {
  switch (kind) {
    case BackendKind::scalar:
      return detail::scalar_table();
    case BackendKind::simd_native:
      return detail::native_table();
    case BackendKind::simd_avx2:
#if QSD_HAVE_AVX2_TU
      if (cpu_has_avx2()) return detail::avx2_table();
#endif
      throw std::invalid_argument("kernel backend 'avx2' is not available on this host");
  }
  throw std::invalid_argument("unknown kernel backend");
}

void set_active(std::optional<BackendKind> kind) {
  if (!kind) {
    g_active.store(initial_kind());
    return;
  }
  if (!backend_available(*kind))
    throw std::invalid_argument("kernel backend '" + std::string(backend_name(*kind)) +
                                "' is not available on this host");
  g_active.store(*kind);
}

const KernelTable& active() { return table(g_active.load()); }

BackendKind active_kind() { return g_active.load(); }

std::vector<BackendKind> available_backends() {
  std::vector<BackendKind> v{BackendKind::scalar, BackendKind::simd_native};
  if (backend_available(BackendKind::simd_avx2)) v.push_back(BackendKind::simd_avx2);
  return v;
}

std::string_view backend_name(BackendKind kind) {
  switch (kind) {
    case BackendKind::scalar:
      return "scalar";
    case BackendKind::simd_native:
      return "simd";
    case BackendKind::simd_avx2:
      return "avx2";
  }
  return "?";
}

std::optional<BackendKind> parse_backend(std::string_view name) {
  if (name == "scalar") return BackendKind::scalar;
  if (name == "simd") return BackendKind::simd_native;
  if (name == "avx2") return BackendKind::simd_avx2;
  return std::nullopt;
}

}  // namespace qsd::kernels
