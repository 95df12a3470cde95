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

#include <cstdlib>
#include <cstring>

namespace mrc::kern {

bool avx2_runtime_supported() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

namespace {

const Ops& resolve() {
  const char* forced = std::getenv("MRC_KERNEL");
  if (forced != nullptr) {
    if (std::strcmp(forced, "scalar") == 0) return scalar_ops();
    if (std::strcmp(forced, "avx2") == 0 && avx2_ops() != nullptr &&
        avx2_runtime_supported()) {
      return *avx2_ops();
    }
    return scalar_ops();
  }
  if (avx2_ops() != nullptr && avx2_runtime_supported()) return *avx2_ops();
  return scalar_ops();
}

}  // namespace

const Ops& active_ops() {
  static const Ops& ops = resolve();
  return ops;
}

}  // namespace mrc::kern
