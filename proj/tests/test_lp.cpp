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
#include <limits>
#include <set>

#include <doctest.h>

#include "mrc/generator.hpp"
#include "mrc/graph.hpp"
#include "mrc/lp.hpp"
#include "mrc/oracle.hpp"

using namespace mrc;

namespace {

Instance triangle_instance(double cst, double csa, double cat, int k) {
  Instance inst;
  inst.graph = Graph(3, {{0, 1}, {0, 2}, {2, 1}});
  inst.edge_costs = {cst, csa, cat};
  inst.demands = {{0, 1, k}};
  return inst;
}

FracSolution frac_of(const Instance& inst, std::vector<double> x) {
  FracSolution f;
  f.x = std::move(x);
  f.objective = 0;
  for (size_t e = 0; e < f.x.size(); ++e) {
    f.objective += inst.edge_costs[e] * f.x[e];
  }
  return f;
}

}  // namespace

TEST_CASE("separate finds the two-path union on the zero metric") {
  Instance inst = triangle_instance(3, 1, 1, 2);
  SeparateOutcome out = separate(inst, frac_of(inst, {0, 0, 0}), 0, 1e-6);
  REQUIRE(out.violated.has_value());
  CHECK(out.violated->edges == std::vector<EdgeId>{0, 1, 2});
  CHECK(out.min_union_total == doctest::Approx(0.0));
}

TEST_CASE("separate reports satisfaction at unit union length") {
  Instance inst = triangle_instance(3, 1, 1, 2);
  SeparateOutcome out = separate(inst, frac_of(inst, {0, 1, 0}), 0, 1e-6);
  CHECK_FALSE(out.violated.has_value());
  CHECK(out.min_union_total == doctest::Approx(1.0));
}

TEST_CASE("separate treats structurally satisfied demands as vacuous") {
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {1, 2}, {2, 3}});
  inst.edge_costs = {1, 1, 1};
  inst.demands = {{0, 3, 2}};  // a path has connectivity 1
  SeparateOutcome out = separate(inst, frac_of(inst, {0, 0, 0}), 0, 1e-6);
  CHECK_FALSE(out.violated.has_value());
  CHECK(out.min_union_total == std::numeric_limits<double>::infinity());
}

TEST_CASE("solve_lp triangle fixture reaches objective 1") {
  Instance inst = triangle_instance(3, 1, 1, 2);
  LpResult res = solve_lp(inst);
  CHECK(res.report.status == LpStatus::kOptimal);
  CHECK(res.frac.objective == doctest::Approx(1.0).epsilon(1e-6));
  for (double slack : res.report.demand_slack) CHECK(slack >= -1e-6);
}

TEST_CASE("solve_lp single mandatory edge") {
  Instance inst;
  inst.graph = Graph(2, {{0, 1}});
  inst.edge_costs = {5};
  inst.demands = {{0, 1, 1}};
  LpResult res = solve_lp(inst);
  CHECK(res.frac.objective == doctest::Approx(5.0));
  CHECK(res.frac.x[0] == doctest::Approx(1.0));
}

TEST_CASE("lp objective lower-bounds the oracle optimum") {
  GenConfig cfg;
  cfg.model = GenModel::kMultigraph;
  cfg.n = 6;
  cfg.edge_count = 11;
  cfg.demand_count = 2;
  cfg.k_min = 1;
  cfg.k_max = 3;
  int solved = 0;
  for (std::uint64_t seed = 300; seed < 340; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    LpResult lp = solve_lp(inst);
    OracleResult oracle = brute_force_opt(inst);
    REQUIRE(oracle.status == OracleStatus::kOptimal);
    CHECK(lp.frac.objective <= oracle.optimal_cost + 1e-6);
    ++solved;
  }
  CHECK(solved == 40);
}

TEST_CASE("master objective is monotone over cutting-plane rounds") {
  GenConfig cfg;
  cfg.model = GenModel::kGnp;
  cfg.n = 8;
  cfg.edge_probability = 0.5;
  cfg.demand_count = 3;
  cfg.k_min = 1;
  cfg.k_max = 2;
  for (std::uint64_t seed = 41; seed < 61; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    LpResult lp = solve_lp(inst);
    const auto& objs = lp.report.round_objectives;
    for (size_t i = 1; i < objs.size(); ++i) {
      CHECK(objs[i] >= objs[i - 1] - 1e-9);
    }
  }
}

TEST_CASE("pool rows are satisfied by oracle-optimal cuts") {
  GenConfig cfg;
  cfg.model = GenModel::kMultigraph;
  cfg.n = 5;
  cfg.edge_count = 10;
  cfg.demand_count = 2;
  cfg.k_min = 1;
  cfg.k_max = 2;
  for (std::uint64_t seed = 500; seed < 520; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    LpResult lp = solve_lp(inst);
    OracleResult oracle = brute_force_opt(inst);
    if (oracle.status != OracleStatus::kOptimal) continue;
    std::set<int> cut(oracle.optimal_set.begin(), oracle.optimal_set.end());
    for (const CutConstraint& row : lp.pool) {
      int hit = 0;
      for (EdgeId e : row.edges) hit += cut.count(e) ? 1 : 0;
      CHECK(hit >= 1);
    }
  }
}

TEST_CASE("solve_lp is deterministic") {
  GenConfig cfg;
  cfg.model = GenModel::kGnp;
  cfg.n = 9;
  cfg.edge_probability = 0.45;
  cfg.demand_count = 3;
  cfg.k_min = 1;
  cfg.k_max = 3;
  cfg.seed = 777;
  Instance inst = generate_instance(cfg);
  LpResult a = solve_lp(inst);
  LpResult b = solve_lp(inst);
  CHECK(a.frac.x == b.frac.x);
  CHECK(a.pool.size() == b.pool.size());
  for (size_t i = 0; i < a.pool.size(); ++i) {
    CHECK(a.pool[i].demand_index == b.pool[i].demand_index);
    CHECK(a.pool[i].edges == b.pool[i].edges);
  }
}

TEST_CASE("separation completeness against enumeration") {
  GenConfig cfg;
  cfg.model = GenModel::kMultigraph;
  cfg.n = 5;
  cfg.edge_count = 8;
  cfg.demand_count = 0;
  int violated_seen = 0;
  for (std::uint64_t seed = 900; seed < 950; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    GraphView view(inst.graph);
    SplitMix64 rng(seed * 3 + 1);
    std::vector<double> x(inst.graph.edge_count());
    for (double& v : x) v = rng.next_unit() * 0.6;
    inst.edge_costs.assign(static_cast<size_t>(inst.graph.edge_count()), 1.0);
    int k = 1 + static_cast<int>(rng.next_below(3));
    inst.demands = {{0, 1, k}};
    FracSolution frac;
    frac.x = x;
    SeparateOutcome out = separate(inst, frac, 0, 1e-6);
    auto sets = enumerate_disjoint_path_sets(view, Semantics::kEdgeDisjoint, 0,
                                             1, k, &x);
    if (sets.sets.empty()) {
      CHECK_FALSE(out.violated.has_value());
      continue;
    }
    double best = 1e18;
    for (const auto& s : sets.sets) best = std::min(best, s.total_metric);
    CHECK(out.min_union_total == doctest::Approx(best).epsilon(1e-9));
    if (best < 1.0 - 1e-6) {
      REQUIRE(out.violated.has_value());
      ++violated_seen;
    } else if (best > 1.0 + 1e-6) {
      CHECK_FALSE(out.violated.has_value());
    }
  }
  CHECK(violated_seen > 5);
}
