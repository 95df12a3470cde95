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

#ifndef MRC_ROUNDING_HPP
#define MRC_ROUNDING_HPP

#include <optional>
#include <string>
#include <vector>

#include "mrc/graph.hpp"
#include "mrc/lp.hpp"

namespace mrc {

// Ball statistics at one radius. The region is the strict ball {d < r}; on
// directed graphs the boundary holds only out-crossing arcs (tail inside).
struct SweepRow {
  double radius = 0.0;
  std::vector<int> region;
  std::vector<EdgeId> boundary;
  double boundary_cost = 0.0;
  double volume = 0.0;
  double ratio = 0.0;
};

// One region-growing run from a root under the LP metric: shortest-path
// distances, the breakpoint radii (distinct non-root distances below the
// cap), and per-breakpoint ball statistics. Volume at radius r:
//
//   V(r) = F0 + sum_{e inside} c_e x_e + sum_{e crossing} c_e (r - d(tail))
//
// The sweep snapshots everything it needs, so it stays valid if the view
// changes afterwards (the graph itself must outlive it).
struct RegionSweep {
  int root = -1;
  double radius_cap = 0.5;
  double seed_volume = 0.0;
  std::vector<double> dist;
  std::vector<double> breakpoints;
  std::vector<SweepRow> rows;

  // Radii where the qualification test is evaluated: breakpoints plus gap
  // midpoints (including the gap up to the cap), restricted to (0, cap).
  std::vector<double> evaluation_grid() const;
  SweepRow evaluate(double r) const;

  const Graph* graph = nullptr;
  std::vector<char> removed_mask;
  bool directed = false;
  std::vector<double> metric;
  std::vector<double> costs;
};

RegionSweep region_sweep(const GraphView& view, const std::vector<double>& x,
                         const std::vector<double>& costs, int root,
                         double radius_cap, double seed_volume);

// Smallest grid radius whose ball excludes every vertex in `exclusion` and
// satisfies c(boundary) <= (2/R) ln(p+1) V(r). Empty when the exclusion set
// intrudes before any qualifying radius (balls are nested, so the scan stops
// at the first intrusion).
std::optional<double> choose_radius(const RegionSweep& sweep, int pair_count,
                                    const std::vector<int>& exclusion);

struct RoundTraceStep {
  int demand_index = -1;
  int root = -1;
  bool used_fallback = false;
  double radius = -1.0;
  int region_size = 0;
  std::vector<EdgeId> removed;
  std::vector<EdgeId> kept;
};

enum class RoundStatus { kFeasible, kInfeasible };

struct CutSolution {
  RoundStatus status = RoundStatus::kFeasible;
  int infeasible_demand = -1;
  std::vector<int> removed;  // sorted edge ids (vertex ids after pullback)
  double cost = 0.0;
  double beta = 1.0;
  std::vector<RoundTraceStep> trace;

  bool bicriteria() const { return beta != 1.0; }
};

// Region-growing rounding at thresholds ceil(beta * k). While some demand
// still has connectivity >= its effective threshold, grow a ball from its
// first endpoint (R = 1/2, seed volume = LP objective / live demands,
// exclusion = other endpoint) and remove the boundary except its k'-1 most
// expensive edges; when no radius qualifies or the ball step cannot bring
// the demand down (non-removable arcs on split instances), fall back to a
// minimum-cost cut trimmed by the same keep rule. The result is pruned
// before it is returned. Requires an edge-removal instance.
CutSolution round_exact(const Instance& inst, const FracSolution& frac,
                        double beta = 1.0);

// Reverse-delete: restore removed items in decreasing cost order (ties
// toward higher id) whenever every demand stays satisfied at the given
// thresholds. Input must be feasible; output is inclusion-minimal.
CutSolution prune_cut(const Instance& inst, const CutSolution& cut,
                      const std::vector<int>& effective_k);

}  // namespace mrc

#endif  // MRC_ROUNDING_HPP
