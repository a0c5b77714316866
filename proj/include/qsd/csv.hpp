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
#include <ostream>
#include <span>
#include <string>
#include <utility>

#include "qsd/dynamics.hpp"
#include "qsd/nonmarkov.hpp"
#include "qsd/qsl.hpp"

namespace qsd {

// 17 significant digits: round-trips doubles exactly and keeps output
// byte-stable for identical inputs.
std::string format_full(double x);

// Columns: t, re_f, im_f, abs_f, g_r, g_i, c_l1.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// Columns: axis_value, n_value, n_revivals, onset_flag
// (+ ref_n_value, ref_n_revivals, ref_onset_flag when a reference is given).
void write_nonmark_csv(std::ostream& os,
                       std::span<const std::pair<double, NonMarkovResult>> rows,
                       std::span<const std::pair<double, NonMarkovResult>> reference = {},
                       double onset_eps = kOnsetThreshold);

// Columns: tau, tau_qsl_disturbed, tau_qsl_reference, tau_ml, tau_mt,
// rel_purity; the reference column is left blank in unpaired mode.
void write_qsl_csv(std::ostream& os, std::span<const QslResult> rows,
                   std::span<const QslResult> reference = {});

}  // namespace qsd
