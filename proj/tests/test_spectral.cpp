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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qsd/oracle.hpp"
#include "qsd/spectral.hpp"

using namespace qsd;

namespace {
constexpr double kPi = std::numbers::pi;

double rel_err(double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); }
}  // namespace

TEST_CASE("Ohmic closed forms at pinned points") {
  SpectralDensity s1 = OhmicBath{1.0, 1.0, 1.0};
  CHECK(g_real(s1, 1.0) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
  CHECK(psi(s1, 1.0) == doctest::Approx(kPi / 4.0).epsilon(1e-14));

  SpectralDensity s2 = OhmicBath{1.0, 2.0, 1.0};
  CHECK(g_real(s2, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(psi(s2, 1.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("g_real and psi vanish at t = 0 for any valid bath") {
  for (const SpectralDensity& b :
       {SpectralDensity(OhmicBath{2.0, 0.5, 1.3}), SpectralDensity(OhmicBath{1.0, 1.0, 2.0}),
        SpectralDensity(OhmicBath{0.7, 3.0, 0.8}), SpectralDensity(LorentzianBath{10.0, 1.0, 1.0}),
        SpectralDensity(LorentzianBath{3.0, 2.0, 0.0})}) {
    CHECK(g_real(b, 0.0) == 0.0);
    CHECK(psi(b, 0.0) == 0.0);
  }
}

TEST_CASE("negative time raises a domain error") {
  SpectralDensity b = OhmicBath{1.0, 1.0, 1.0};
  CHECK_THROWS_AS(g_real(b, -0.5), std::domain_error);
  CHECK_THROWS_AS(psi(b, -1e-9), std::domain_error);
  CHECK_THROWS_AS(oracle_quadrature(b, OracleKernel::gr_kernel, -1.0), std::domain_error);
}

TEST_CASE("bath parameter validation") {
  CHECK_THROWS_AS(g_real(SpectralDensity(OhmicBath{-0.1, 1.0, 1.0}), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g_real(SpectralDensity(OhmicBath{1.0, 0.0, 1.0}), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g_real(SpectralDensity(OhmicBath{1.0, 1.0, -1.0}), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(g_real(SpectralDensity(LorentzianBath{1.0, 0.0, 1.0}), 1.0),
                  std::invalid_argument);
  DisturbanceConfig d{true, 1.0, 1.5};
  CHECK_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("spectral density is nonnegative") {
  SpectralDensity ohmic = OhmicBath{2.0, 0.5, 1.0};
  SpectralDensity lor = LorentzianBath{10.0, 1.0, 5.0};
  for (double w = 0.0; w <= 50.0; w += 0.25) {
    CHECK(spectral_density(ohmic, w) >= 0.0);
    CHECK(spectral_density(lor, w) >= 0.0);
    CHECK(spectral_density(lor, -w) >= 0.0);
  }
  CHECK(spectral_density(ohmic, -1.0) == 0.0);
}

TEST_CASE("G_R stays nonnegative on a dense grid") {
  for (const SpectralDensity& b :
       {SpectralDensity(OhmicBath{1.0, 0.5, 1.0}), SpectralDensity(OhmicBath{1.0, 1.0, 1.0}),
        SpectralDensity(OhmicBath{1.0, 2.0, 1.0}), SpectralDensity(OhmicBath{1.0, 3.0, 1.0}),
        SpectralDensity(LorentzianBath{10.0, 1.0, 1.0}),
        SpectralDensity(LorentzianBath{10.0, 1.0, 5.0})}) {
    for (double t = 0.0; t <= 20.0; t += 0.01) {
      CAPTURE(t);
      CHECK(g_real(b, t) >= 0.0);
    }
  }
}

TEST_CASE("s -> 1 continuity of the Ohmic forms") {
  for (double eps : {1e-4, -1e-4}) {
    SpectralDensity near = OhmicBath{1.0, 1.0 + eps, 1.0};
    SpectralDensity at = OhmicBath{1.0, 1.0, 1.0};
    for (double t = 0.1; t <= 10.0; t += 0.1) {
      const double a = g_real(near, t);
      const double b = g_real(at, t);
      CHECK(std::abs(a - b) / std::abs(b) < 1e-3);
      CHECK(std::abs(psi(near, t) - psi(at, t)) / std::abs(psi(at, t)) < 1e-3);
    }
  }
}

TEST_CASE("values of s within 1e-12 of 1 route to the logarithmic branch") {
  SpectralDensity hair = OhmicBath{1.0, 1.0 + 5e-13, 1.0};
  CHECK(g_real(hair, 1.0) == 0.5 * std::log(2.0));
  CHECK(psi(hair, 1.0) == std::atan(1.0));
}

TEST_CASE("disturbance cross term") {
  SpectralDensity b = OhmicBath{1.0, 1.0, 1.0};

  SUBCASE("disabled disturbance gives identically zero") {
    DisturbanceConfig off{false, 2.0, 0.3};
    for (double t : {0.0, 0.5, 3.0, 17.0}) CHECK(g_imag_cross(b, off, t) == 0.0);
  }
  SUBCASE("t_a = 0 gives identically zero") {
    DisturbanceConfig zero{true, 0.0, 0.3};
    for (double t : {0.0, 5.0}) CHECK(g_imag_cross(b, zero, t) == 0.0);
  }
  SUBCASE("pinned value for the s = 1 bath") {
    DisturbanceConfig d{true, 1.0, 0.0};
    const double expected = std::atan(2.0) - 2.0 * std::atan(1.0);
    CHECK(g_imag_cross(b, d, 1.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(g_imag_cross(b, d, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
  }
  SUBCASE("additivity identity") {
    for (const SpectralDensity& bath :
         {SpectralDensity(OhmicBath{1.4, 0.7, 1.2}), SpectralDensity(OhmicBath{0.9, 2.4, 0.7}),
          SpectralDensity(LorentzianBath{6.0, 1.0, 2.0})}) {
      DisturbanceConfig d{true, 0.8, 0.0};
      for (double t = 0.0; t <= 12.0; t += 0.37) {
        const double lhs = g_imag_cross(bath, d, t) + psi(bath, t) + psi(bath, d.t_a);
        const double rhs = psi(bath, t + d.t_a);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
      }
    }
  }
}

TEST_CASE("closed forms agree with the quadrature oracle (Ohmic)") {
  for (double s : {0.5, 1.0, 2.0, 3.0}) {
    for (double t : {0.1, 0.5, 1.0, 2.0, 5.0, 10.0}) {
      SpectralDensity b = OhmicBath{1.0, s, 1.0};
      CAPTURE(s);
      CAPTURE(t);
      CHECK(rel_err(g_real(b, t), oracle_quadrature(b, OracleKernel::gr_kernel, t)) < 1e-6);
      CHECK(rel_err(psi(b, t), oracle_quadrature(b, OracleKernel::psi_kernel, t)) < 1e-6);
    }
  }
}

TEST_CASE("oracle pinned values") {
  SpectralDensity s1 = OhmicBath{1.0, 1.0, 1.0};
  CHECK(oracle_quadrature(s1, OracleKernel::gr_kernel, 1.0) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-9));
  CHECK(oracle_quadrature(s1, OracleKernel::gr_kernel, 0.0) == 0.0);
  CHECK(oracle_quadrature(s1, OracleKernel::psi_kernel, 0.0) == 0.0);

  SpectralDensity sub = OhmicBath{2.0, 0.5, 1.0};
  CHECK(rel_err(psi(sub, 1.0), oracle_quadrature(sub, OracleKernel::psi_kernel, 1.0)) < 1e-6);
}

TEST_CASE("Lorentzian closed form matches the full-line oracle") {
  SpectralDensity b = LorentzianBath{10.0, 1.0, 1.0};
  const double q = oracle_quadrature(b, OracleKernel::gr_kernel, 2.0, OracleDomain::full_line);
  CHECK(rel_err(g_real(b, 2.0), q) < 1e-6);
  // Frozen from the same oracle (gamma=10, lambda=1, delta=1, t=2).
  CHECK(q == doctest::Approx(4.6923499382095160).epsilon(1e-9));

  for (double t : {0.1, 0.7, 1.0, 3.0, 10.0}) {
    for (double delta : {0.0, 1.0, 5.0}) {
      SpectralDensity lb = LorentzianBath{10.0, 1.0, delta};
      CAPTURE(t);
      CAPTURE(delta);
      CHECK(rel_err(g_real(lb, t),
                    oracle_quadrature(lb, OracleKernel::gr_kernel, t, OracleDomain::full_line)) <
            1e-6);
      CHECK(rel_err(psi(lb, t),
                    oracle_quadrature(lb, OracleKernel::psi_kernel, t, OracleDomain::full_line)) <
            1e-6);
    }
  }
}

TEST_CASE("half-line Lorentzian psi integral is reported as non-convergent") {
  SpectralDensity b = LorentzianBath{10.0, 1.0, 1.0};
  CHECK_THROWS_AS(oracle_quadrature(b, OracleKernel::psi_kernel, 1.0, OracleDomain::half_line),
                  OracleError);
}

TEST_CASE("full-line oracle rejects the Ohmic density") {
  SpectralDensity b = OhmicBath{1.0, 1.0, 1.0};
  CHECK_THROWS_AS(oracle_quadrature(b, OracleKernel::gr_kernel, 1.0, OracleDomain::full_line),
                  std::invalid_argument);
}

TEST_CASE("closed-form derivatives match central differences") {
  const double h = 1e-6;
  for (const SpectralDensity& b :
       {SpectralDensity(OhmicBath{1.0, 0.5, 1.0}), SpectralDensity(OhmicBath{1.0, 1.0, 1.0}),
        SpectralDensity(OhmicBath{0.8, 2.5, 1.4}), SpectralDensity(LorentzianBath{10.0, 1.0, 1.0}),
        SpectralDensity(LorentzianBath{5.0, 2.0, 4.0})}) {
    for (double t : {0.3, 1.0, 2.7, 6.0}) {
      const double fd_gr = (g_real(b, t + h) - g_real(b, t - h)) / (2.0 * h);
      const double fd_psi = (psi(b, t + h) - psi(b, t - h)) / (2.0 * h);
      CAPTURE(t);
      CHECK(g_real_deriv(b, t) == doctest::Approx(fd_gr).epsilon(1e-6));
      CHECK(psi_deriv(b, t) == doctest::Approx(fd_psi).epsilon(1e-6));
    }
  }
}
