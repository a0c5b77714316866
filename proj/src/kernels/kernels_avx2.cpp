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

// AVX2+FMA backend. This TU is compiled with -mavx2 -mfma; dispatch.cpp only
// hands out this table after a cpuid check, so nothing here may be reached
// on older CPUs.

#include <cmath>
#include <cstddef>
#include <experimental/simd>

#include "qsd/kernels.hpp"

namespace {
#include "kernels_body.inc"
}  // namespace

namespace qsd::kernels::detail {

const KernelTable& avx2_table() {
  static const KernelTable t =
      make_table<std::experimental::native_simd<double>>("simd-avx2");
  return t;
}

}  // namespace qsd::kernels::detail
