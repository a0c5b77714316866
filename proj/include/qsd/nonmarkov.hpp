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
#include <string_view>
#include <utility>
#include <vector>

#include "qsd/dynamics.hpp"

namespace qsd {

// Increments smaller than this are treated as flat when accumulating the
// positive variation of the coherence.
inline constexpr double kRevivalFloor = 1e-12;
// A sweep point counts as non-Markovian once n_value exceeds this.
inline constexpr double kOnsetThreshold = 1e-6;

struct NonMarkovResult {
  double n_value = 0.0;
  // Maximal [t_start, t_end] runs over which the sampled coherence increases.
  std::vector<std::pair<double, double>> revival_intervals;
  double t_max_used = 0.0;
};

// Total positive variation of the sampled coherence: sum over grid steps of
// max(0, c[k+1] - c[k]). Exact for sampled monotone segments and robust at
// the |cos G_I| kinks. Requires at least 3 samples.
NonMarkovResult measure_from_trajectory(const Trajectory& traj,
                                        double noise_floor = kRevivalFloor);

// Coherence measure for a maximally coherent initial state. C_l1(t) = |f(t)|
// is independent of the initial equatorial phase, so the maximization over
// maximally coherent states is a no-op here (asserted by tests, not assumed
// silently).
NonMarkovResult measure(const ModelConfig& cfg, double t_max = 20.0, std::size_t n_steps = 4000);

enum class SweepAxis { eta, gamma, delta_over_lambda, s, sz_a, t_a };

std::optional<SweepAxis> parse_axis(std::string_view name);
std::string_view axis_name(SweepAxis axis);

// Copy of cfg with the axis parameter replaced; throws std::invalid_argument
// when the axis does not apply to the bath variant or the value violates the
// parameter's range. Sweeping sz_a or t_a enables the disturbance.
ModelConfig with_axis_value(const ModelConfig& cfg, SweepAxis axis, double value);

// One measure() per value, evaluated independently (optionally in parallel)
// and returned in input order.
std::vector<std::pair<double, NonMarkovResult>> sweep(const ModelConfig& cfg_template,
                                                      SweepAxis axis,
                                                      std::span<const double> values,
                                                      double t_max, std::size_t n_steps,
                                                      unsigned jobs = 1);

// Smallest axis value with n_value > eps.
std::optional<double> onset(std::span<const std::pair<double, NonMarkovResult>> results,
                            double eps = kOnsetThreshold);

}  // namespace qsd
