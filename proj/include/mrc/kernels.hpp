// Copyright 2026 The mrc Authors
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

#ifndef MRC_KERNELS_HPP
#define MRC_KERNELS_HPP

#include <cstddef>

namespace mrc::kern {

// Dense double-precision kernels behind the simplex tableau. Every operation
// has a scalar reference implementation and, on x86, an AVX2 variant; the
// active set is resolved once at startup from CPU features and can be forced
// with MRC_KERNEL=scalar|avx2.
//
// axpy and scale are bit-exact across variants (one multiply and one add per
// element, no FMA contraction), so a pivot sequence is identical whichever
// variant runs. dot uses lane-wise accumulation in the AVX2 variant and may
// differ from the scalar sum in the last bits.
struct Ops {
  // y[i] += a * x[i]
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  // y[i] *= a
  void (*scale)(double a, double* y, std::size_t n);
  // sum of x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  // index of the smallest element, lowest index on ties; requires n > 0
  std::size_t (*argmin)(const double* x, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();

// nullptr when AVX2 support was not compiled in.
const Ops* avx2_ops();

bool avx2_runtime_supported();

// Variant selected at startup (env override, then CPU detection).
const Ops& active_ops();

}  // namespace mrc::kern

#endif  // MRC_KERNELS_HPP
