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

#include "mrc/lp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mrc/connectivity.hpp"
#include "mrc/simplex.hpp"

namespace mrc {

SeparateOutcome separate(const Instance& inst, const FracSolution& frac,
                         int demand_index, double eps_sep) {
  const Demand& d = inst.demands[static_cast<size_t>(demand_index)];
  GraphView view(inst.graph, inst.directed);
  MinCostKFlowResult flow = min_cost_k_flow(view, inst.semantics,
                                            inst.edge_origin, frac.x, d.u, d.v,
                                            d.k);
  SeparateOutcome out;
  if (!flow.paths.has_value()) return out;  // vacuous: satisfied structurally
  out.min_union_total = flow.paths->total_metric;
  if (out.min_union_total < 1.0 - eps_sep) {
    CutConstraint row;
    row.demand_index = demand_index;
    row.edges = flow.paths->union_edges;
    out.violated = std::move(row);
  }
  return out;
}

MasterResult solve_restricted_master(const std::vector<CutConstraint>& pool,
                                     const std::vector<double>& costs) {
  MasterResult out;
  if (pool.empty()) {
    out.status = LpStatus::kOptimal;
    out.x.assign(costs.size(), 0.0);
    out.objective = 0.0;
    return out;
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(pool.size());
  for (const CutConstraint& c : pool) rows.push_back(c.edges);
  SimplexResult sr = solve_covering_lp(rows, costs);
  switch (sr.status) {
    case SimplexStatus::kOptimal:
      out.status = LpStatus::kOptimal;
      break;
    case SimplexStatus::kIterationLimit:
      out.status = LpStatus::kNonConverged;
      break;
    case SimplexStatus::kNumericalFailure:
      out.status = LpStatus::kNumericalFailure;
      break;
  }
  out.x = std::move(sr.x);
  out.objective = sr.objective;
  out.duals = std::move(sr.row_duals);
  return out;
}

LpResult solve_lp(const Instance& inst, const LpTolerances& tol) {
  inst.validate();
  if (inst.removal != Removal::kEdge) {
    throw std::invalid_argument(
        "solve_lp needs an edge-removal instance (split vertex variants "
        "first)");
  }
  const int q = static_cast<int>(inst.demands.size());

  LpResult res;
  res.frac.x.assign(static_cast<size_t>(inst.graph.edge_count()), 0.0);
  res.frac.objective = 0.0;
  res.report.demand_slack.assign(static_cast<size_t>(q), 0.0);
  res.report.vacuous.assign(static_cast<size_t>(q), 0);

  // Demands the graph already satisfies are excluded once up front.
  GraphView full(inst.graph, inst.directed);
  for (int i = 0; i < q; ++i) {
    const Demand& d = inst.demands[static_cast<size_t>(i)];
    int lambda =
        pair_connectivity(full, inst.semantics, inst.edge_origin, d.u, d.v);
    if (lambda < d.k) {
      res.report.vacuous[static_cast<size_t>(i)] = 1;
      res.report.demand_slack[static_cast<size_t>(i)] =
          std::numeric_limits<double>::infinity();
    }
  }

  std::set<std::vector<EdgeId>> seen_rows;
  res.report.status = LpStatus::kOptimal;
  while (true) {
    int added = 0;
    for (int i = 0; i < q; ++i) {
      if (res.report.vacuous[static_cast<size_t>(i)]) continue;
      SeparateOutcome out = separate(inst, res.frac, i, tol.eps_sep);
      res.report.demand_slack[static_cast<size_t>(i)] =
          out.min_union_total - 1.0;
      if (!out.violated.has_value()) continue;
      if (!seen_rows.insert(out.violated->edges).second) {
        // a repeated row means the master left a pooled row violated
        res.report.status = LpStatus::kNumericalFailure;
        break;
      }
      res.pool.push_back(std::move(*out.violated));
      ++added;
    }
    if (res.report.status == LpStatus::kNumericalFailure) break;
    if (added == 0) break;
    if (static_cast<int>(res.pool.size()) > tol.row_cap) {
      res.report.status = LpStatus::kNonConverged;
      break;
    }
    MasterResult master = solve_restricted_master(res.pool, inst.edge_costs);
    if (master.status != LpStatus::kOptimal) {
      res.report.status = master.status;
      break;
    }
    res.frac.x = std::move(master.x);
    for (double& v : res.frac.x) {
      if (v < 0.0) v = 0.0;
      if (v > 1.0) v = 1.0;
    }
    res.frac.objective = master.objective;
    res.report.round_objectives.push_back(master.objective);
    ++res.report.rounds;
  }

  res.report.objective = res.frac.objective;
  res.report.rows = static_cast<int>(res.pool.size());
  return res;
}

}  // namespace mrc
