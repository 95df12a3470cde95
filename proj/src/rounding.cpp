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

#include "mrc/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "mrc/connectivity.hpp"

namespace mrc {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

RegionSweep region_sweep(const GraphView& view, const std::vector<double>& x,
                         const std::vector<double>& costs, int root,
                         double radius_cap, double seed_volume) {
  const Graph& g = view.graph();
  if (root < 0 || root >= g.vertex_count()) {
    throw std::out_of_range("invalid root vertex");
  }
  if (!(radius_cap > 0) || !(seed_volume > 0)) {
    throw std::invalid_argument("radius cap and seed volume must be positive");
  }

  RegionSweep sweep;
  sweep.root = root;
  sweep.radius_cap = radius_cap;
  sweep.seed_volume = seed_volume;
  sweep.graph = &g;
  sweep.directed = view.directed();
  sweep.metric = x;
  sweep.costs = costs;
  sweep.removed_mask.assign(static_cast<size_t>(g.edge_count()), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (view.removed(e)) sweep.removed_mask[static_cast<size_t>(e)] = 1;
  }

  sweep.dist.assign(static_cast<size_t>(g.vertex_count()), kInf);
  sweep.dist[static_cast<size_t>(root)] = 0.0;
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  heap.emplace(0.0, root);
  std::vector<char> done(static_cast<size_t>(g.vertex_count()), 0);
  while (!heap.empty()) {
    auto [d, w] = heap.top();
    heap.pop();
    if (done[static_cast<size_t>(w)]) continue;
    done[static_cast<size_t>(w)] = 1;
    for (const auto& [nb, e] : g.incident(w)) {
      if (view.removed(e)) continue;
      if (view.directed() && g.edge(e).a != w) continue;
      double nd = d + x[static_cast<size_t>(e)];
      if (nd < sweep.dist[static_cast<size_t>(nb)]) {
        sweep.dist[static_cast<size_t>(nb)] = nd;
        heap.emplace(nd, nb);
      }
    }
  }

  std::set<double> marks;
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == root) continue;
    double d = sweep.dist[static_cast<size_t>(w)];
    if (d < radius_cap) marks.insert(d);
  }
  sweep.breakpoints.assign(marks.begin(), marks.end());
  for (double b : sweep.breakpoints) sweep.rows.push_back(sweep.evaluate(b));
  return sweep;
}

SweepRow RegionSweep::evaluate(double r) const {
  SweepRow row;
  row.radius = r;
  const Graph& g = *graph;
  std::vector<char> inside(static_cast<size_t>(g.vertex_count()), 0);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (dist[static_cast<size_t>(w)] < r) {
      inside[static_cast<size_t>(w)] = 1;
      row.region.push_back(w);
    }
  }
  row.volume = seed_volume;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (removed_mask[static_cast<size_t>(e)]) continue;
    const Graph::Edge& ed = g.edge(e);
    bool ina = inside[static_cast<size_t>(ed.a)] != 0;
    bool inb = inside[static_cast<size_t>(ed.b)] != 0;
    double ce = costs[static_cast<size_t>(e)];
    double xe = metric[static_cast<size_t>(e)];
    if (ina && inb) {
      row.volume += ce * xe;
      continue;
    }
    if (directed) {
      if (ina && !inb) {
        row.boundary.push_back(e);
        row.boundary_cost += ce;
        row.volume +=
            ce * std::min(xe, r - dist[static_cast<size_t>(ed.a)]);
      }
      // arcs entering the ball contribute no inside length
    } else if (ina != inb) {
      int near = ina ? ed.a : ed.b;
      row.boundary.push_back(e);
      row.boundary_cost += ce;
      row.volume += ce * std::min(xe, r - dist[static_cast<size_t>(near)]);
    }
  }
  row.ratio = row.boundary_cost / row.volume;
  return row;
}

std::vector<double> RegionSweep::evaluation_grid() const {
  std::vector<double> grid;
  for (size_t i = 0; i < breakpoints.size(); ++i) {
    double b = breakpoints[i];
    if (b > 0.0 && b < radius_cap) grid.push_back(b);
    double next = (i + 1 < breakpoints.size()) ? breakpoints[i + 1]
                                               : radius_cap;
    double mid = (b + next) / 2.0;
    if (mid > 0.0 && mid < radius_cap) grid.push_back(mid);
  }
  if (breakpoints.empty()) grid.push_back(radius_cap / 2.0);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::optional<double> choose_radius(const RegionSweep& sweep, int pair_count,
                                    const std::vector<int>& exclusion) {
  const double factor =
      (2.0 / sweep.radius_cap) * std::log(static_cast<double>(pair_count) + 1.0);
  for (double r : sweep.evaluation_grid()) {
    bool intruded = false;
    for (int w : exclusion) {
      if (sweep.dist[static_cast<size_t>(w)] < r) {
        intruded = true;
        break;
      }
    }
    if (intruded) return std::nullopt;  // balls are nested; no later radius works
    SweepRow row = sweep.evaluate(r);
    if (row.boundary_cost <= factor * row.volume + 1e-12) return r;
  }
  return std::nullopt;
}

namespace {

// True when the edge can carry at most one disjoint path for the (u, v)
// query, so keeping it consumes exactly one unit of the k'-1 budget. Plain
// edges and traversal arcs are unit; internal arcs of split instances are
// uncapacitated under edge-disjoint semantics (paths share vertices) and
// for the query endpoints' own gadgets.
bool unit_lambda_capacity(const Instance& inst, EdgeId e, int u, int v) {
  if (!inst.directed || inst.edge_origin.empty()) return true;
  if (inst.edge_origin[static_cast<size_t>(e)] < 0) return true;
  if (inst.semantics == Semantics::kEdgeDisjoint) return false;
  const Graph::Edge& ed = inst.graph.edge(e);
  return !(ed.a == u || ed.b == u || ed.a == v || ed.b == v);
}

// Splits a crossing edge set into a keep set and a removal set. The keep
// budget is k'-1 surviving path slots; non-removable crossing edges consume
// it first (an uncapacitated one exhausts it), then the most expensive
// removable unit edges are kept (ties toward the lowest id). Everything
// else removable is removed. On plain instances this is exactly "keep the
// k'-1 highest-cost boundary edges".
struct BoundarySplit {
  std::vector<EdgeId> removal;
  std::vector<EdgeId> kept;
};

BoundarySplit split_boundary(const Instance& inst,
                             const std::vector<EdgeId>& crossing, int kp,
                             int u, int v) {
  BoundarySplit out;
  long long budget = kp - 1;
  std::vector<EdgeId> removable;
  for (EdgeId e : crossing) {
    if (inst.removable(e)) {
      removable.push_back(e);
    } else {
      budget -= unit_lambda_capacity(inst, e, u, v) ? 1 : kp;
    }
  }
  std::sort(removable.begin(), removable.end(), [&](EdgeId a, EdgeId b) {
    double ca = inst.edge_costs[static_cast<size_t>(a)];
    double cb = inst.edge_costs[static_cast<size_t>(b)];
    if (ca != cb) return ca > cb;
    return a < b;
  });
  for (EdgeId e : removable) {
    if (budget > 0 && unit_lambda_capacity(inst, e, u, v)) {
      out.kept.push_back(e);
      --budget;
    } else {
      out.removal.push_back(e);
    }
  }
  std::sort(out.removal.begin(), out.removal.end());
  std::sort(out.kept.begin(), out.kept.end());
  return out;
}

std::vector<int> effective_thresholds(const Instance& inst, double beta) {
  std::vector<int> k;
  k.reserve(inst.demands.size());
  for (const Demand& d : inst.demands) {
    k.push_back(effective_threshold(d.k, beta));
  }
  return k;
}

int demand_lambda(const Instance& inst, const GraphView& view, int i) {
  const Demand& d = inst.demands[static_cast<size_t>(i)];
  return pair_connectivity(view, inst.semantics, inst.edge_origin, d.u, d.v);
}

}  // namespace

CutSolution round_exact(const Instance& inst, const FracSolution& frac,
                        double beta) {
  inst.validate();
  if (inst.removal != Removal::kEdge) {
    throw std::invalid_argument(
        "round_exact needs an edge-removal instance (split vertex variants "
        "first)");
  }
  if (beta < 1.0) throw std::invalid_argument("beta must be >= 1");
  const int q = static_cast<int>(inst.demands.size());
  const std::vector<int> keff = effective_thresholds(inst, beta);

  CutSolution cut;
  cut.beta = beta;

  // A demand is unreachable below k' only if even removing every removable
  // edge leaves its connectivity at k' or above (split instances with
  // adjacent terminals). Detected once so the main loop cannot stall.
  {
    GraphView bare(inst.graph, inst.directed);
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      if (inst.removable(e)) bare.remove(e);
    }
    for (int i = 0; i < q; ++i) {
      if (demand_lambda(inst, bare, i) >= keff[static_cast<size_t>(i)]) {
        cut.status = RoundStatus::kInfeasible;
        cut.infeasible_demand = i;
        return cut;
      }
    }
  }

  GraphView view(inst.graph, inst.directed);
  std::set<EdgeId> removed;
  const int pair_count = q;
  auto apply = [&](const std::vector<EdgeId>& removal, RoundTraceStep& step) {
    for (EdgeId e : removal) {
      view.remove(e);
      if (removed.insert(e).second) step.removed.push_back(e);
    }
  };

  long long guard = 0;
  const long long guard_cap =
      (static_cast<long long>(q) + 2) * (inst.graph.edge_count() + 4) + 64;
  while (true) {
    if (++guard > guard_cap) {
      throw std::logic_error("rounding made no progress");
    }
    std::vector<int> live;
    for (int i = 0; i < q; ++i) {
      if (demand_lambda(inst, view, i) >= keff[static_cast<size_t>(i)]) {
        live.push_back(i);
      }
    }
    if (live.empty()) break;
    const int i = live.front();
    const Demand& d = inst.demands[static_cast<size_t>(i)];
    const int kp = keff[static_cast<size_t>(i)];

    double seed = frac.objective > 0
                      ? frac.objective / static_cast<double>(live.size())
                      : 1e-9;
    RegionSweep sweep =
        region_sweep(view, frac.x, inst.edge_costs, d.u, 0.5, seed);
    std::optional<double> radius = choose_radius(sweep, pair_count, {d.v});

    RoundTraceStep step;
    step.demand_index = i;
    step.root = d.u;

    if (radius.has_value()) {
      SweepRow row = sweep.evaluate(*radius);
      step.radius = *radius;
      step.region_size = static_cast<int>(row.region.size());
      BoundarySplit split = split_boundary(inst, row.boundary, kp, d.u, d.v);
      step.kept = split.kept;
      apply(split.removal, step);
    }

    if (demand_lambda(inst, view, i) >= kp) {
      // ball step unavailable or insufficient: cut this pair directly
      step.used_fallback = true;
      std::vector<double> caps(inst.edge_costs);
      for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
        if (!inst.removable(e)) caps[static_cast<size_t>(e)] = 1e30;
      }
      std::vector<EdgeId> mincut = min_cost_cut(view, caps, d.u, d.v);
      BoundarySplit split = split_boundary(inst, mincut, kp, d.u, d.v);
      if (split.removal.empty()) {
        // no keepable slack left in this cut; fall through to raw pressure
        for (EdgeId e : mincut) {
          if (inst.removable(e)) split.removal.push_back(e);
        }
      }
      if (split.removal.empty()) {
        // last resort, guaranteed by the up-front check to finish the
        // demand: drop every removable edge still present
        for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
          if (inst.removable(e) && !view.removed(e)) {
            split.removal.push_back(e);
          }
        }
      }
      for (EdgeId e : split.kept) step.kept.push_back(e);
      apply(split.removal, step);
    }
    cut.trace.push_back(std::move(step));
  }

  cut.removed.assign(removed.begin(), removed.end());
  cut.cost = 0.0;
  for (EdgeId e : cut.removed) {
    cut.cost += inst.edge_costs[static_cast<size_t>(e)];
  }
  return prune_cut(inst, cut, keff);
}

CutSolution prune_cut(const Instance& inst, const CutSolution& cut,
                      const std::vector<int>& effective_k) {
  if (cut.status != RoundStatus::kFeasible) {
    throw std::invalid_argument("prune_cut needs a feasible cut");
  }
  if (!verify_cut(inst, cut.removed, effective_k).feasible) {
    throw std::invalid_argument("prune_cut needs a feasible cut");
  }
  std::vector<int> order(cut.removed);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    double ca = inst.item_cost(a);
    double cb = inst.item_cost(b);
    if (ca != cb) return ca > cb;
    return a > b;
  });
  std::vector<int> current(cut.removed);
  for (int item : order) {
    std::vector<int> tentative;
    tentative.reserve(current.size() - 1);
    for (int x : current) {
      if (x != item) tentative.push_back(x);
    }
    if (verify_cut(inst, tentative, effective_k).feasible) {
      current = std::move(tentative);
    }
  }
  CutSolution out(cut);
  std::sort(current.begin(), current.end());
  out.removed = std::move(current);
  out.cost = 0.0;
  for (int item : out.removed) out.cost += inst.item_cost(item);
  return out;
}

}  // namespace mrc
