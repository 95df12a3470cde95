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

#ifndef MRC_LP_HPP
#define MRC_LP_HPP

#include <limits>
#include <optional>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

// Fractional cut values, one per edge, with the objective sum(c_e * x_e).
struct FracSolution {
  std::vector<double> x;
  double objective = 0.0;
};

// One LP row: sum_{e in edges} x_e >= 1 where `edges` is the union of k
// disjoint witness paths for the demand. Any integral cut that leaves the
// demand's connectivity at k or above misses all k paths, so every feasible
// integral multi-route cut satisfies the row.
struct CutConstraint {
  int demand_index = -1;
  std::vector<EdgeId> edges;  // sorted, distinct
};

struct LpTolerances {
  double eps_sep = 1e-6;
  double eps_feas = 1e-7;
  int row_cap = 10000;
};

enum class LpStatus { kOptimal, kNonConverged, kNumericalFailure };

struct LpReport {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  int rounds = 0;
  int rows = 0;
  // min disjoint-path-union length minus 1 at termination; +inf for demands
  // that are vacuous (graph connectivity already below the threshold).
  std::vector<double> demand_slack;
  std::vector<char> vacuous;
  std::vector<double> round_objectives;  // master objective after each round
};

struct SeparateOutcome {
  std::optional<CutConstraint> violated;  // empty means satisfied
  double min_union_total = std::numeric_limits<double>::infinity();
};

// Exact separation for one demand: the cheapest union of k disjoint paths
// under the metric x. Returns a violated row when that union is shorter
// than 1 - eps_sep; satisfied when no k paths exist (vacuous demand) or the
// cheapest union is long enough.
//
// On split-transformed instances with edge-disjoint semantics, paths may
// share internal arcs, which the flow objective counts with multiplicity;
// the row returned is still valid but separation is only heuristically
// tight there.
SeparateOutcome separate(const Instance& inst, const FracSolution& frac,
                         int demand_index, double eps_sep);

struct MasterResult {
  LpStatus status = LpStatus::kNumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<double> duals;
};

// min c.x subject to the pooled rows and 0 <= x <= 1. An empty pool yields
// x = 0. Duals are exposed as the optimality certificate for the pool.
MasterResult solve_restricted_master(const std::vector<CutConstraint>& pool,
                                     const std::vector<double>& costs);

struct LpResult {
  FracSolution frac;
  LpReport report;
  std::vector<CutConstraint> pool;
};

// Cutting-plane loop: per round, every unsatisfied demand (ascending index)
// contributes one violated row, then the restricted master is re-solved.
// Terminates when separation finds nothing (optimal for the full
// exponential LP, since separation is exact) or when the row cap is hit.
LpResult solve_lp(const Instance& inst, const LpTolerances& tol = {});

}  // namespace mrc

#endif  // MRC_LP_HPP
