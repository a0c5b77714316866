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

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsd/spectral.hpp"

namespace qsd {

// Independent validation path for the closed-form decoherence functions:
// adaptive Gauss-Kronrod quadrature of the defining spectral integrals.

enum class OracleKernel {
  gr_kernel,   // int dw J(w) (1 - cos wt) / w^2
  psi_kernel,  // int dw J(w) sin(wt) / w^2
};

// Integration domain for the spectral integral. The Ohmic density lives on
// [0, inf). For the Lorentzian, the closed forms used by the library arise
// from the doubly-infinite integral (full_line); the half-line mode exists
// for the validation audit. Note the half-line Lorentzian psi integral
// diverges logarithmically at w -> 0, which the oracle reports as
// non-convergence.
enum class OracleDomain { half_line, full_line };

OracleDomain adopted_domain(const SpectralDensity& bath);

struct OracleOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  // Adaptive bisection depth budget for the Gauss-Kronrod rule.
  int max_depth = 15;
};

// Quadrature failed to reach the requested tolerance within the subdivision
// budget; distinct from a closed-form mismatch.
struct OracleError : std::runtime_error {
  OracleError(const std::string& msg, double estimate_, double error_estimate_)
      : std::runtime_error(msg), estimate(estimate_), error_estimate(error_estimate_) {}
  double estimate;
  double error_estimate;
};

double oracle_quadrature(const SpectralDensity& bath, OracleKernel kernel, double t,
                         OracleDomain domain, const OracleOptions& opts = {});

// Domain defaults to adopted_domain(bath).
double oracle_quadrature(const SpectralDensity& bath, OracleKernel kernel, double t,
                         const OracleOptions& opts = {});

namespace audit {

// Variant of the Lorentzian closed forms that circulates with an undamped
// sine term (and, before the sign fix applied here, a growing exponential).
// Kept only so the validation suite can show it matches neither integration
// convention; it is never used by the production path. Note psi_variant(0)
// != 0.
double g_real_variant(const LorentzianBath& bath, double t);
double psi_variant(const LorentzianBath& bath, double t);

struct LorentzianAuditRow {
  double t;
  double adopted;        // closed form used by the library
  double variant;        // undamped-sine variant
  std::optional<double> quad_half;  // nullopt: quadrature did not converge
  std::optional<double> quad_full;
};

struct LorentzianAudit {
  OracleKernel kernel;
  LorentzianBath bath;
  std::vector<LorentzianAuditRow> rows;
  // Max relative errors over converged rows (infinity when nothing converged).
  double adopted_vs_full;
  double adopted_vs_half;
  double variant_vs_full;
  double variant_vs_half;
  bool half_line_converged;
  bool full_line_converged;
};

LorentzianAudit run_lorentzian_audit(const LorentzianBath& bath, OracleKernel kernel,
                                     std::span<const double> times,
                                     const OracleOptions& opts = {});

}  // namespace audit

}  // namespace qsd
