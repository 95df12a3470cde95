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

namespace mrc::kern {
namespace {

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double a, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] *= a;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

std::size_t argmin_scalar(const double* x, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] < x[best]) best = i;
  }
  return best;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops ops{axpy_scalar, scale_scalar, dot_scalar, argmin_scalar,
                       "scalar"};
  return ops;
}

}  // namespace mrc::kern
