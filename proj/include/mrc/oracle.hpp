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

#ifndef MRC_ORACLE_HPP
#define MRC_ORACLE_HPP

#include <vector>

#include "mrc/connectivity.hpp"
#include "mrc/graph.hpp"

namespace mrc {

enum class OracleStatus { kOptimal, kInfeasible, kTooLarge };

struct OracleResult {
  OracleStatus status = OracleStatus::kTooLarge;
  double optimal_cost = 0.0;
  std::vector<int> optimal_set;  // edge ids or vertex ids, sorted
  long long optimal_count = 0;   // number of distinct optimal sets
  long long explored = 0;        // subsets popped from the frontier
};

// Exact optimum by best-first search over removal subsets in nondecreasing
// cost order; the first feasible subset popped is optimal. Candidates are
// the removable edges (edge variant) or the non-terminal vertices (vertex
// variant); kTooLarge when there are more than size_cap of them.
OracleResult brute_force_opt(const Instance& inst, int size_cap = 20);

struct PathSetEnumeration {
  std::vector<DisjointPathSet> sets;  // canonical order
  bool partial = false;               // a limit was hit
};

// All sets of k pairwise disjoint simple u-v paths under the given
// semantics, built from exhaustive simple-path enumeration. Test oracle for
// the flow primitives; only sensible on small graphs.
PathSetEnumeration enumerate_disjoint_path_sets(
    const GraphView& view, Semantics sem, int u, int v, int k,
    const std::vector<double>* metric = nullptr, int path_limit = 5000,
    long long set_limit = 500000);

}  // namespace mrc

#endif  // MRC_ORACLE_HPP
