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
#include <random>

#include "qsd/dynamics.hpp"

using namespace qsd;

namespace {

ModelConfig s1_disturbed() {
  ModelConfig cfg;
  cfg.bath = OhmicBath{1.0, 1.0, 1.0};
  cfg.dist = {true, 1.0, 0.0};
  return cfg;
}

QubitState random_state(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
  QubitState s;
  s.rho_ee = u01(rng);
  const double rmax = std::sqrt(s.rho_ee * (1.0 - s.rho_ee));
  const double r = rmax * u01(rng);
  const double phi = ang(rng);
  s.rho_eg = {r * std::cos(phi), r * std::sin(phi)};
  return s;
}

ModelConfig random_config(std::mt19937_64& rng, bool allow_disturbance) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  ModelConfig cfg;
  if (u01(rng) < 0.5)
    cfg.bath = OhmicBath{3.0 * u01(rng), 0.3 + 3.0 * u01(rng), 0.5 + u01(rng)};
  else
    cfg.bath = LorentzianBath{12.0 * u01(rng), 0.5 + 2.0 * u01(rng), 6.0 * u01(rng)};
  if (allow_disturbance && u01(rng) < 0.6)
    cfg.dist = {true, 2.0 * u01(rng), 2.0 * u01(rng) - 1.0};
  return cfg;
}

}  // namespace

TEST_CASE("dephasing factor pinned values") {
  ModelConfig cfg = s1_disturbed();
  SUBCASE("t = 0 gives exactly one") {
    CHECK(dephasing_factor(cfg, 0.0) == std::complex<double>(1.0, 0.0));
  }
  SUBCASE("s = 1 composition") {
    const auto f = dephasing_factor(cfg, 1.0);
    CHECK(f.real() == doctest::Approx(2.0 / std::sqrt(10.0)).epsilon(1e-14));
    CHECK(f.imag() == 0.0);
  }
  SUBCASE("sz_a = +-1 leaves the modulus undisturbed") {
    for (double sz : {1.0, -1.0}) {
      cfg.dist.sz_a = sz;
      for (double t : {0.3, 1.0, 4.0})
        CHECK(std::abs(dephasing_factor(cfg, t)) ==
              doctest::Approx(std::exp(-g_real(cfg.bath, t))).epsilon(1e-14));
    }
  }
}

TEST_CASE("evolve_state") {
  ModelConfig cfg = s1_disturbed();
  SUBCASE("diagonal states are fixed points") {
    QubitState diag{0.73, 0.0};
    const auto out = evolve_state(cfg, diag, 5.0);
    CHECK(out.rho_ee == diag.rho_ee);
    CHECK(out.rho_eg == std::complex<double>(0.0, 0.0));
  }
  SUBCASE("t = 0 is the identity") {
    QubitState st{0.4, {0.2, 0.1}};
    const auto out = evolve_state(cfg, st, 0.0);
    CHECK(out.rho_ee == st.rho_ee);
    CHECK(out.rho_eg == st.rho_eg);
  }
  SUBCASE("pinned off-diagonal decay") {
    QubitState st{0.5, {0.5, 0.0}};
    const auto out = evolve_state(cfg, st, 1.0);
    CHECK(out.rho_eg.real() == doctest::Approx(1.0 / std::sqrt(10.0)).epsilon(1e-14));
  }
}

TEST_CASE("coherence_l1") {
  CHECK(coherence_l1(QubitState{0.5, {0.5, 0.0}}) == 1.0);
  CHECK(coherence_l1(QubitState{0.3, 0.0}) == 0.0);
  const auto bloch = QubitState::from_bloch(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0.0);
  CHECK(coherence_l1(bloch) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("QubitState validation and Bloch round trip") {
  CHECK_THROWS_AS((QubitState{1.2, 0.0}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QubitState{0.1, {0.4, 0.0}}.validate()), std::invalid_argument);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto s = random_state(rng);
    const auto r = s.bloch();
    CHECK(r[0] * r[0] + r[1] * r[1] + r[2] * r[2] <= 1.0 + 1e-12);
    const auto back = QubitState::from_bloch(r[0], r[1], r[2]);
    CHECK(back.rho_ee == doctest::Approx(s.rho_ee).epsilon(1e-15));
    CHECK(std::abs(back.rho_eg - s.rho_eg) < 1e-15);
  }
}

TEST_CASE("trajectory basics") {
  ModelConfig cfg = s1_disturbed();
  cfg.dist.sz_a = 0.05;
  const auto init = QubitState::maximally_coherent();
  const auto traj = coherence_trajectory(cfg, init, 10.0, 500);

  CHECK(traj.size() == 501);
  CHECK(traj.f[0] == std::complex<double>(1.0, 0.0));
  CHECK(traj.c_l1[0] == doctest::Approx(1.0).epsilon(1e-15));
  for (std::size_t k = 0; k < traj.size(); ++k) {
    CHECK(std::abs(traj.f[k]) <= 1.0 + 1e-12);
    CHECK(traj.g_r[k] >= 0.0);
  }
  SUBCASE("identity with evolve_state, pointwise") {
    for (std::size_t k = 0; k < traj.size(); k += 37) {
      const auto st = evolve_state(cfg, init, traj.t[k]);
      CHECK(coherence_l1(st) == doctest::Approx(traj.c_l1[k]).epsilon(1e-12));
    }
  }
  SUBCASE("diagonal initial state gives zero coherence everywhere") {
    const auto diag = coherence_trajectory(cfg, QubitState{0.8, 0.0}, 10.0, 100);
    for (double c : diag.c_l1) CHECK(c == 0.0);
  }
  SUBCASE("input validation") {
    CHECK_THROWS_AS(coherence_trajectory(cfg, init, -1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(coherence_trajectory(cfg, init, 1.0, 1), std::invalid_argument);
  }
}

TEST_CASE("trajectory from_samples rejects bad grids") {
  std::vector<double> t{0.0, 0.1, 0.25};
  std::vector<std::complex<double>> f(3, {1.0, 0.0});
  std::vector<double> z(3, 0.0);
  CHECK_THROWS_AS(Trajectory::from_samples(t, f, z, z, z), std::invalid_argument);
  t = {0.0, 0.1, 0.2};
  CHECK_NOTHROW(Trajectory::from_samples(t, f, z, z, z));
  t = {0.2, 0.1, 0.0};
  CHECK_THROWS_AS(Trajectory::from_samples(t, f, z, z, z), std::invalid_argument);
}

TEST_CASE("special disturbance limits of the coherence") {
  ModelConfig cfg = s1_disturbed();
  const auto init = QubitState::maximally_coherent();
  SUBCASE("sz_a = +-1 matches the undisturbed curve") {
    ModelConfig off = cfg;
    off.dist.enabled = false;
    const auto ref = coherence_trajectory(off, init, 8.0, 400);
    for (double sz : {1.0, -1.0}) {
      cfg.dist.sz_a = sz;
      const auto tr = coherence_trajectory(cfg, init, 8.0, 400);
      for (std::size_t k = 0; k < tr.size(); ++k)
        CHECK(tr.c_l1[k] == doctest::Approx(ref.c_l1[k]).epsilon(1e-13));
    }
  }
  SUBCASE("sz_a = 0 gives |cos G_I| e^{-G_R}") {
    cfg.dist.sz_a = 0.0;
    const auto tr = coherence_trajectory(cfg, init, 8.0, 400);
    for (std::size_t k = 0; k < tr.size(); ++k) {
      const double expect = std::abs(std::cos(tr.g_i[k])) * std::exp(-tr.g_r[k]);
      CHECK(tr.c_l1[k] == doctest::Approx(expect).epsilon(1e-13));
    }
  }
}

TEST_CASE("coherence factorization for random configurations") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 50; ++rep) {
    const auto cfg = random_config(rng, true);
    const auto st = random_state(rng);
    const double c0 = coherence_l1(st);
    for (double t : {0.0, 0.4, 1.7, 6.3}) {
      const auto evolved = evolve_state(cfg, st, t);
      const double expect = c0 * std::abs(dephasing_factor(cfg, t));
      CHECK(coherence_l1(evolved) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("evolved states stay physical (1000 random cases)") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> tdist(0.0, 15.0);
  for (int rep = 0; rep < 1000; ++rep) {
    const auto cfg = random_config(rng, true);
    const auto st = random_state(rng);
    const auto out = evolve_state(cfg, st, tdist(rng));
    CHECK_NOTHROW(out.validate());
    CHECK(out.rho_ee == st.rho_ee);  // populations conserved
  }
}

TEST_CASE("disturbance monotonicity in |sz_a|") {
  ModelConfig cfg = s1_disturbed();
  const auto init = QubitState::maximally_coherent();
  std::vector<double> levels{0.0, 0.2, 0.4, 0.7, 1.0};
  std::vector<Trajectory> trajs;
  for (double sz : levels) {
    cfg.dist.sz_a = sz;
    trajs.push_back(coherence_trajectory(cfg, init, 10.0, 500));
  }
  for (std::size_t j = 1; j < levels.size(); ++j)
    for (std::size_t k = 0; k < trajs[j].size(); ++k)
      CHECK(std::abs(trajs[j].f[k]) >= std::abs(trajs[j - 1].f[k]) - 1e-13);
}

TEST_CASE("omega_s adds a pure phase") {
  ModelConfig cfg = s1_disturbed();
  cfg.dist.sz_a = 0.3;
  ModelConfig spin = cfg;
  spin.omega_s = 2.0;
  for (double t : {0.5, 2.0, 7.0}) {
    CHECK(std::abs(dephasing_factor(spin, t)) ==
          doctest::Approx(std::abs(dephasing_factor(cfg, t))).epsilon(1e-13));
  }
}

TEST_CASE("analytic df/dt matches central differences") {
  std::mt19937_64 rng(31);
  const double h = 1e-6;
  for (int rep = 0; rep < 40; ++rep) {
    auto cfg = random_config(rng, true);
    cfg.omega_s = rep % 4 == 0 ? 1.3 : 0.0;
    for (double t : {0.4, 1.1, 3.7}) {
      const auto fd = (dephasing_factor(cfg, t + h) - dephasing_factor(cfg, t - h)) / (2.0 * h);
      const auto an = dephasing_factor_deriv(cfg, t);
      CAPTURE(rep);
      CAPTURE(t);
      CHECK(std::abs(an - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
    }
  }
}
