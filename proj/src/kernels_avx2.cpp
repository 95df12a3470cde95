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

#include "mrc/kernels.hpp"

#ifdef MRC_HAVE_AVX2

#include <immintrin.h>

namespace mrc::kern {
namespace {

// Separate mul and add (no FMA) so per-element rounding matches the scalar
// reference bit for bit.
void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vx = _mm256_loadu_pd(x + i);
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_add_pd(vy, _mm256_mul_pd(va, vx));
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_avx2(double a, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] *= a;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc,
                        _mm256_mul_pd(_mm256_loadu_pd(x + i),
                                      _mm256_loadu_pd(y + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

std::size_t argmin_avx2(const double* x, std::size_t n) {
  // Pass 1: vector minimum; pass 2: first index equal to it. Two passes keep
  // the lowest-index tie rule of the scalar reference.
  double lo = x[0];
  std::size_t i = 1;
  if (n >= 8) {
    __m256d vmin = _mm256_loadu_pd(x);
    for (i = 4; i + 4 <= n; i += 4) {
      vmin = _mm256_min_pd(vmin, _mm256_loadu_pd(x + i));
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, vmin);
    lo = lanes[0];
    for (int l = 1; l < 4; ++l) {
      if (lanes[l] < lo) lo = lanes[l];
    }
  }
  for (; i < n; ++i) {
    if (x[i] < lo) lo = x[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] == lo) return j;
  }
  return 0;
}

}  // namespace

const Ops* avx2_ops() {
  static const Ops ops{axpy_avx2, scale_avx2, dot_avx2, argmin_avx2, "avx2"};
  return &ops;
}

}  // namespace mrc::kern

#else

namespace mrc::kern {
const Ops* avx2_ops() { return nullptr; }
}  // namespace mrc::kern

#endif  // MRC_HAVE_AVX2
