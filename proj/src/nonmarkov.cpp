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

#include "qsd/nonmarkov.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qsd/parallel.hpp"

namespace qsd {

NonMarkovResult measure_from_trajectory(const Trajectory& traj, double noise_floor) {
  if (traj.size() < 3)
    throw std::invalid_argument("measure_from_trajectory: need at least 3 samples");
  NonMarkovResult res;
  res.t_max_used = traj.t.back();

  bool in_revival = false;
  double start = 0.0;
  for (std::size_t k = 0; k + 1 < traj.size(); ++k) {
    double d = traj.c_l1[k + 1] - traj.c_l1[k];
    if (std::abs(d) < noise_floor) d = 0.0;
    if (d > 0.0) {
      res.n_value += d;
      if (!in_revival) {
        in_revival = true;
        start = traj.t[k];
      }
    } else if (in_revival) {
      res.revival_intervals.emplace_back(start, traj.t[k]);
      in_revival = false;
    }
  }
  if (in_revival) res.revival_intervals.emplace_back(start, traj.t.back());
  return res;
}

NonMarkovResult measure(const ModelConfig& cfg, double t_max, std::size_t n_steps) {
  const auto traj = coherence_trajectory(cfg, QubitState::maximally_coherent(), t_max, n_steps);
  return measure_from_trajectory(traj);
}

std::optional<SweepAxis> parse_axis(std::string_view name) {
  if (name == "eta") return SweepAxis::eta;
  if (name == "gamma") return SweepAxis::gamma;
  if (name == "delta_over_lambda") return SweepAxis::delta_over_lambda;
  if (name == "s") return SweepAxis::s;
  if (name == "sz_a") return SweepAxis::sz_a;
  if (name == "t_a") return SweepAxis::t_a;
  return std::nullopt;
}

std::string_view axis_name(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::eta: return "eta";
    case SweepAxis::gamma: return "gamma";
    case SweepAxis::delta_over_lambda: return "delta_over_lambda";
    case SweepAxis::s: return "s";
    case SweepAxis::sz_a: return "sz_a";
    case SweepAxis::t_a: return "t_a";
  }
  return "?";
}

ModelConfig with_axis_value(const ModelConfig& cfg, SweepAxis axis, double value) {
  ModelConfig out = cfg;
  auto* ohmic = std::get_if<OhmicBath>(&out.bath);
  auto* lorentz = std::get_if<LorentzianBath>(&out.bath);
  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw std::invalid_argument(std::string("sweep axis '") + std::string(axis_name(axis)) +
                                  "' does not apply to " + what);
  };
  switch (axis) {
    case SweepAxis::eta:
      require(ohmic != nullptr, "a Lorentzian bath");
      ohmic->eta = value;
      break;
    case SweepAxis::s:
      require(ohmic != nullptr, "a Lorentzian bath");
      ohmic->s = value;
      break;
    case SweepAxis::gamma:
      require(lorentz != nullptr, "an Ohmic bath");
      lorentz->gamma = value;
      break;
    case SweepAxis::delta_over_lambda:
      require(lorentz != nullptr, "an Ohmic bath");
      lorentz->delta = value * lorentz->lambda;
      break;
    case SweepAxis::sz_a:
      out.dist.enabled = true;
      out.dist.sz_a = value;
      break;
    case SweepAxis::t_a:
      out.dist.enabled = true;
      out.dist.t_a = value;
      break;
  }
  out.validate();
  return out;
}

std::vector<std::pair<double, NonMarkovResult>> sweep(const ModelConfig& cfg_template,
                                                      SweepAxis axis,
                                                      std::span<const double> values,
                                                      double t_max, std::size_t n_steps,
                                                      unsigned jobs) {
  std::vector<std::pair<double, NonMarkovResult>> out(values.size());
  parallel_for_ordered(values.size(), jobs, [&](std::size_t i) {
    const auto cfg = with_axis_value(cfg_template, axis, values[i]);
    out[i] = {values[i], measure(cfg, t_max, n_steps)};
  });
  return out;
}

std::optional<double> onset(std::span<const std::pair<double, NonMarkovResult>> results,
                            double eps) {
  for (const auto& [value, res] : results)
    if (res.n_value > eps) return value;
  return std::nullopt;
}

}  // namespace qsd
