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

#include "qsd/csv.hpp"

#include <cstdio>
#include <stdexcept>

namespace qsd {

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,re_f,im_f,abs_f,g_r,g_i,c_l1\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    os << format_full(traj.t[k]) << ',' << format_full(traj.f[k].real()) << ','
       << format_full(traj.f[k].imag()) << ',' << format_full(std::abs(traj.f[k])) << ','
       << format_full(traj.g_r[k]) << ',' << format_full(traj.g_i[k]) << ','
       << format_full(traj.c_l1[k]) << '\n';
  }
}

void write_nonmark_csv(std::ostream& os,
                       std::span<const std::pair<double, NonMarkovResult>> rows,
                       std::span<const std::pair<double, NonMarkovResult>> reference,
                       double onset_eps) {
  const bool paired = !reference.empty();
  if (paired && reference.size() != rows.size())
    throw std::invalid_argument("write_nonmark_csv: reference row count mismatch");
  os << "axis_value,n_value,n_revivals,onset_flag";
  if (paired) os << ",ref_n_value,ref_n_revivals,ref_onset_flag";
  os << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& [value, res] = rows[i];
    os << format_full(value) << ',' << format_full(res.n_value) << ','
       << res.revival_intervals.size() << ',' << (res.n_value > onset_eps ? 1 : 0);
    if (paired) {
      const auto& ref = reference[i].second;
      os << ',' << format_full(ref.n_value) << ',' << ref.revival_intervals.size() << ','
         << (ref.n_value > onset_eps ? 1 : 0);
    }
    os << '\n';
  }
}

void write_qsl_csv(std::ostream& os, std::span<const QslResult> rows,
                   std::span<const QslResult> reference) {
  const bool paired = !reference.empty();
  if (paired && reference.size() != rows.size())
    throw std::invalid_argument("write_qsl_csv: reference row count mismatch");
  os << "tau,tau_qsl_disturbed,tau_qsl_reference,tau_ml,tau_mt,rel_purity\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << format_full(r.tau) << ',' << format_full(r.tau_qsl) << ',';
    if (paired) os << format_full(reference[i].tau_qsl);
    os << ',' << format_full(r.tau_ml) << ',' << format_full(r.tau_mt) << ','
       << format_full(r.rel_purity) << '\n';
  }
}

}  // namespace qsd
