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

#include <algorithm>
#include <set>

#include <doctest.h>

#include "mrc/connectivity.hpp"
#include "mrc/generator.hpp"
#include "mrc/lp.hpp"
#include "mrc/oracle.hpp"
#include "mrc/rounding.hpp"

using namespace mrc;

namespace {

// star: center 0, leaves 1..3, one spoke each
Graph star3() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}}); }

Instance triangle_instance() {
  Instance inst;
  inst.graph = Graph(3, {{0, 1}, {0, 2}, {2, 1}});
  inst.edge_costs = {3, 1, 1};
  inst.demands = {{0, 1, 2}};
  return inst;
}

std::vector<int> thresholds(const Instance& inst, double beta) {
  std::vector<int> k;
  for (const Demand& d : inst.demands) {
    k.push_back(effective_threshold(d.k, beta));
  }
  return k;
}

}  // namespace

TEST_CASE("region_sweep matches the hand-computed star") {
  Graph g = star3();
  GraphView view(g);
  std::vector<double> x{0.3, 0.3, 0.3};
  std::vector<double> costs{1, 1, 1};
  RegionSweep sweep = region_sweep(view, x, costs, 0, 0.5, 0.1);
  REQUIRE(sweep.breakpoints.size() == 1);
  CHECK(sweep.breakpoints[0] == doctest::Approx(0.3));
  const SweepRow& row = sweep.rows[0];
  CHECK(row.region == std::vector<int>{0});
  CHECK(row.boundary.size() == 3);
  CHECK(row.boundary_cost == doctest::Approx(3.0));
  CHECK(row.volume == doctest::Approx(0.1 + 3 * 0.3));

  // just past the breakpoint the leaves are inside and the boundary is gone
  SweepRow past = sweep.evaluate(0.4);
  CHECK(past.region.size() == 4);
  CHECK(past.boundary.empty());
  CHECK(past.volume == doctest::Approx(0.1 + 3 * 0.3));
}

TEST_CASE("zero metric collapses to a single breakpoint at 0") {
  Graph g = star3();
  GraphView view(g);
  std::vector<double> x{0, 0, 0};
  std::vector<double> costs{1, 1, 1};
  RegionSweep sweep = region_sweep(view, x, costs, 0, 0.5, 0.1);
  REQUIRE(sweep.breakpoints.size() == 1);
  CHECK(sweep.breakpoints[0] == 0.0);
  SweepRow any = sweep.evaluate(0.25);
  CHECK(any.region.size() == 4);  // whole component inside at any r > 0
  CHECK(any.boundary.empty());
}

TEST_CASE("regions are nested across the evaluation grid") {
  GenConfig cfg;
  cfg.model = GenModel::kGnp;
  cfg.n = 9;
  cfg.edge_probability = 0.4;
  cfg.demand_count = 0;
  for (std::uint64_t seed = 11; seed < 31; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    GraphView view(inst.graph);
    SplitMix64 rng(seed);
    std::vector<double> x(inst.graph.edge_count());
    for (double& v : x) v = rng.next_unit() * 0.4;
    RegionSweep sweep =
        region_sweep(view, x, inst.edge_costs, 0, 0.5, 0.05);
    std::vector<int> prev;
    for (double r : sweep.evaluation_grid()) {
      SweepRow row = sweep.evaluate(r);
      CHECK(row.volume > 0);
      CHECK(std::includes(row.region.begin(), row.region.end(), prev.begin(),
                          prev.end()));
      prev = row.region;
    }
  }
}

TEST_CASE("choose_radius solves the star inequality on the grid") {
  Graph g = star3();
  GraphView view(g);
  std::vector<double> x{0.3, 0.3, 0.3};
  std::vector<double> costs{1, 1, 1};
  RegionSweep sweep = region_sweep(view, x, costs, 0, 0.5, 0.1);
  // at r = 0.3: 3 > 4 ln 2 * 1.0; the next grid point 0.4 has an empty
  // boundary and qualifies (the continuous crossover sits near 0.327)
  std::optional<double> r = choose_radius(sweep, 1, {});
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(0.4));
}

TEST_CASE("empty boundary qualifies immediately") {
  Graph g = star3();
  GraphView view(g);
  std::vector<double> x{0, 0, 0};
  std::vector<double> costs{1, 1, 1};
  RegionSweep sweep = region_sweep(view, x, costs, 0, 0.5, 0.1);
  std::optional<double> r = choose_radius(sweep, 3, {});
  REQUIRE(r.has_value());
  CHECK(*r == doctest::Approx(0.25));  // the only grid radius, boundary empty
}

TEST_CASE("exclusion at distance zero yields no valid radius") {
  Graph g = star3();
  GraphView view(g);
  std::vector<double> x{0.0, 0.3, 0.3};
  std::vector<double> costs{1, 1, 1};
  RegionSweep sweep = region_sweep(view, x, costs, 0, 0.5, 0.1);
  CHECK_FALSE(choose_radius(sweep, 1, {1}).has_value());
}

TEST_CASE("round_exact solves the triangle fixture at cost 1") {
  Instance inst = triangle_instance();
  LpResult lp = solve_lp(inst);
  CutSolution cut = round_exact(inst, lp.frac);
  REQUIRE(cut.status == RoundStatus::kFeasible);
  CHECK(cut.cost == doctest::Approx(1.0));
  REQUIRE(cut.removed.size() == 1);
  CHECK((cut.removed[0] == 1 || cut.removed[0] == 2));
  VerificationReport ver = verify_cut(inst, cut.removed);
  CHECK(ver.feasible);
  CHECK(ver.pairs[0].achieved == 1);
}

TEST_CASE("threshold-1 demands cut the whole boundary (multicut regression)") {
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}});
  inst.edge_costs = {4, 2, 3};
  inst.demands = {{0, 3, 1}};
  LpResult lp = solve_lp(inst);
  CutSolution cut = round_exact(inst, lp.frac);
  REQUIRE(cut.status == RoundStatus::kFeasible);
  OracleResult oracle = brute_force_opt(inst);
  CHECK(cut.cost == doctest::Approx(oracle.optimal_cost));  // single cheapest edge
  CHECK(verify_cut(inst, cut.removed).feasible);
}

TEST_CASE("4-cycle opposite corners at threshold 2 cost one edge") {
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  inst.edge_costs = {1, 1, 1, 1};
  inst.demands = {{0, 2, 2}};
  LpResult lp = solve_lp(inst);
  CutSolution cut = round_exact(inst, lp.frac);
  REQUIRE(cut.status == RoundStatus::kFeasible);
  CHECK(cut.cost == doctest::Approx(1.0));
  CHECK(brute_force_opt(inst).optimal_cost == doctest::Approx(1.0));
}

TEST_CASE("prune_cut drops redundant removals and never raises cost") {
  Instance inst = triangle_instance();
  CutSolution fat;
  fat.removed = {1, 2};
  fat.cost = 2;
  CutSolution pruned = prune_cut(inst, fat, thresholds(inst, 1.0));
  CHECK(pruned.removed.size() == 1);
  CHECK(pruned.cost == doctest::Approx(1.0));

  CutSolution again = prune_cut(inst, pruned, thresholds(inst, 1.0));
  CHECK(again.removed == pruned.removed);  // already minimal

  CutSolution bad;
  bad.removed = {};
  CHECK_THROWS_AS(prune_cut(inst, bad, thresholds(inst, 1.0)),
                  std::invalid_argument);
}

TEST_CASE("sandwich and feasibility over a seeded suite") {
  GenConfig cfg;
  cfg.model = GenModel::kMultigraph;
  cfg.n = 6;
  cfg.edge_count = 11;
  cfg.demand_count = 2;
  cfg.k_min = 1;
  cfg.k_max = 3;
  for (std::uint64_t seed = 1000; seed < 1040; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    LpResult lp = solve_lp(inst);
    CutSolution cut = round_exact(inst, lp.frac);
    REQUIRE(cut.status == RoundStatus::kFeasible);
    CHECK(verify_cut(inst, cut.removed).feasible);
    OracleResult oracle = brute_force_opt(inst);
    REQUIRE(oracle.status == OracleStatus::kOptimal);
    CHECK(lp.frac.objective <= oracle.optimal_cost + 1e-6);
    CHECK(cut.cost >= oracle.optimal_cost - 1e-9);
    // pruning keeps the cut inclusion-minimal
    for (int e : cut.removed) {
      std::vector<int> smaller;
      for (int o : cut.removed) {
        if (o != e) smaller.push_back(o);
      }
      CHECK_FALSE(verify_cut(inst, smaller).feasible);
    }
  }
}

TEST_CASE("bicriteria outputs verify at relaxed thresholds") {
  GenConfig cfg;
  cfg.model = GenModel::kGnp;
  cfg.n = 8;
  cfg.edge_probability = 0.55;
  cfg.demand_count = 2;
  cfg.k_min = 2;
  cfg.k_max = 4;
  for (std::uint64_t seed = 1100; seed < 1120; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    LpResult lp = solve_lp(inst);
    double prev_cost = -1;
    bool first = true;
    for (double beta : {1.0, 1.5, 2.0}) {
      CutSolution cut = round_exact(inst, lp.frac, beta);
      REQUIRE(cut.status == RoundStatus::kFeasible);
      CHECK(verify_cut(inst, cut.removed, thresholds(inst, beta)).feasible);
      if (!first) CHECK(cut.cost <= prev_cost + 1e-9);
      prev_cost = cut.cost;
      first = false;
    }
  }
}

TEST_CASE("rounding is deterministic") {
  GenConfig cfg;
  cfg.model = GenModel::kGnp;
  cfg.n = 9;
  cfg.edge_probability = 0.5;
  cfg.demand_count = 3;
  cfg.k_min = 1;
  cfg.k_max = 3;
  cfg.seed = 4242;
  Instance inst = generate_instance(cfg);
  LpResult lp = solve_lp(inst);
  CutSolution a = round_exact(inst, lp.frac);
  CutSolution b = round_exact(inst, lp.frac);
  CHECK(a.removed == b.removed);
  CHECK(a.cost == b.cost);
}

TEST_CASE("vertex-variant rounding via the split transform") {
  // diamond: u - {a | b} - v with cheap a, demand needs both midpoints gone
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  inst.removal = Removal::kVertex;
  inst.vertex_costs = {10, 2, 3, 10};
  inst.demands = {{0, 3, 1}};
  SplitResult split = vertex_split_transform(inst);
  LpResult lp = solve_lp(split.instance);
  CutSolution cut = round_exact(split.instance, lp.frac);
  REQUIRE(cut.status == RoundStatus::kFeasible);
  std::vector<int> vertices = split.map.cut_to_vertices(cut.removed);
  CHECK(vertices == std::vector<int>{1, 2});
  CHECK(verify_cut(inst, vertices).feasible);
  CHECK(cut.cost == doctest::Approx(5.0));
}

TEST_CASE("adjacent vertex terminals report infeasible") {
  Instance inst;
  inst.graph = Graph(2, {{0, 1}});
  inst.removal = Removal::kVertex;
  inst.vertex_costs = {1, 1};
  inst.demands = {{0, 1, 1}};
  SplitResult split = vertex_split_transform(inst);
  LpResult lp = solve_lp(split.instance);
  CutSolution cut = round_exact(split.instance, lp.frac);
  CHECK(cut.status == RoundStatus::kInfeasible);
  CHECK(cut.infeasible_demand == 0);
}
