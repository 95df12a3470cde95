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

#ifndef MRC_GENERATOR_HPP
#define MRC_GENERATOR_HPP

#include <cstdint>

#include "mrc/graph.hpp"

namespace mrc {

// SplitMix64 (Steele, Lea, Flood). Chosen as the instance generator because
// the whole update fits in a dozen lines and reproduces bit-for-bit in any
// language; a seed fully determines every generated instance.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // next() % n; the modulo bias is irrelevant at the ranges used here and
  // keeps the mapping trivially portable.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

  // 53-bit mantissa in [0, 1)
  double next_unit() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

enum class GenModel { kGnp, kGrid, kMultigraph };

struct GenConfig {
  GenModel model = GenModel::kGnp;
  std::uint64_t seed = 1;
  int n = 8;                     // gnp / multigraph vertex count
  double edge_probability = 0.4; // gnp
  int grid_rows = 3;
  int grid_cols = 3;
  int edge_count = 16;           // multigraph
  int cost_min = 1;              // integral costs, uniform inclusive range
  int cost_max = 10;
  int demand_count = 2;
  int k_min = 2;
  int k_max = 2;
  Removal removal = Removal::kEdge;
  Semantics semantics = Semantics::kEdgeDisjoint;
  bool allow_vacuous = false;    // sample pairs regardless of connectivity
};

// Deterministic instance from the config; demands are sampled among pairs
// whose connectivity reaches the drawn threshold unless allow_vacuous is
// set. Throws std::invalid_argument when the parameters cannot be met
// (e.g. more demands than qualifying pairs).
Instance generate_instance(const GenConfig& cfg);

}  // namespace mrc

#endif  // MRC_GENERATOR_HPP
