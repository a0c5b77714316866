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

// SIMD backend built for the baseline target (SSE2 on x86-64, NEON on
// aarch64); always safe to run on the host this binary was built for.

#include <cmath>
#include <cstddef>
#include <experimental/simd>

#include "qsd/kernels.hpp"

namespace {
#include "kernels_body.inc"
}  // namespace

namespace qsd::kernels::detail {

const KernelTable& native_table() {
  static const KernelTable t =
      make_table<std::experimental::native_simd<double>>("simd-native");
  return t;
}

}  // namespace qsd::kernels::detail
