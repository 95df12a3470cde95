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
#include <functional>
#include <set>

#include <doctest.h>

#include "mrc/connectivity.hpp"
#include "mrc/generator.hpp"
#include "mrc/oracle.hpp"

using namespace mrc;

namespace {

Instance triangle(int k) {
  Instance inst;
  inst.graph = Graph(3, {{0, 1}, {0, 2}, {2, 1}});
  inst.edge_costs = {3, 1, 1};
  inst.demands = {{0, 1, k}};
  return inst;
}

// independent recursive search over index combinations, used to cross-check
// the enumerator's set count
long long count_disjoint_pairs(const std::vector<std::set<EdgeId>>& paths) {
  long long count = 0;
  for (size_t i = 0; i < paths.size(); ++i) {
    for (size_t j = i + 1; j < paths.size(); ++j) {
      bool disjoint = true;
      for (EdgeId e : paths[i]) {
        if (paths[j].count(e)) {
          disjoint = false;
          break;
        }
      }
      if (disjoint) ++count;
    }
  }
  return count;
}

}  // namespace

TEST_CASE("oracle on the triangle at both thresholds") {
  OracleResult two = brute_force_opt(triangle(2));
  REQUIRE(two.status == OracleStatus::kOptimal);
  CHECK(two.optimal_cost == 1);
  CHECK(two.optimal_count == 2);  // either cheap edge works

  OracleResult one = brute_force_opt(triangle(1));
  REQUIRE(one.status == OracleStatus::kOptimal);
  CHECK(one.optimal_cost == 4);  // direct edge plus one of the cheap pair
  CHECK(one.optimal_count == 2);
  VerificationReport rep = verify_cut(triangle(1), one.optimal_set);
  CHECK(rep.feasible);
  CHECK(rep.total_cost == one.optimal_cost);
}

TEST_CASE("oracle trivial and limit cases") {
  Instance none = triangle(2);
  none.demands.clear();
  OracleResult empty = brute_force_opt(none);
  REQUIRE(empty.status == OracleStatus::kOptimal);
  CHECK(empty.optimal_cost == 0);
  CHECK(empty.optimal_set.empty());

  OracleResult capped = brute_force_opt(triangle(2), 2);
  CHECK(capped.status == OracleStatus::kTooLarge);
}

TEST_CASE("oracle handles the vertex variant") {
  Instance inst;
  inst.graph = Graph(3, {{0, 1}, {1, 2}});
  inst.removal = Removal::kVertex;
  inst.vertex_costs = {5, 2, 5};
  inst.demands = {{0, 2, 1}};
  OracleResult res = brute_force_opt(inst);
  REQUIRE(res.status == OracleStatus::kOptimal);
  CHECK(res.optimal_cost == 2);
  CHECK(res.optimal_set == std::vector<int>{1});

  Instance adjacent;
  adjacent.graph = Graph(2, {{0, 1}});
  adjacent.removal = Removal::kVertex;
  adjacent.vertex_costs = {1, 1};
  adjacent.demands = {{0, 1, 1}};
  CHECK(brute_force_opt(adjacent).status == OracleStatus::kInfeasible);
}

TEST_CASE("path-set enumeration on the named fixtures") {
  Graph tri(3, {{0, 1}, {0, 2}, {2, 1}});
  GraphView tv(tri);
  auto tri_sets =
      enumerate_disjoint_path_sets(tv, Semantics::kEdgeDisjoint, 0, 1, 2);
  REQUIRE(tri_sets.sets.size() == 1);
  CHECK(tri_sets.sets[0].union_edges == std::vector<EdgeId>{0, 1, 2});

  Graph path3(3, {{0, 1}, {1, 2}});
  GraphView pv(path3);
  CHECK(enumerate_disjoint_path_sets(pv, Semantics::kEdgeDisjoint, 0, 2, 2)
            .sets.empty());

  // K4: five simple u-v paths, five edge-disjoint pairs among them
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  GraphView kv(k4);
  auto pairs =
      enumerate_disjoint_path_sets(kv, Semantics::kEdgeDisjoint, 0, 1, 2);
  std::vector<std::set<EdgeId>> paths;
  for (const auto& set1 :
       enumerate_disjoint_path_sets(kv, Semantics::kEdgeDisjoint, 0, 1, 1)
           .sets) {
    paths.emplace_back(set1.union_edges.begin(), set1.union_edges.end());
  }
  CHECK(paths.size() == 5);
  CHECK(static_cast<long long>(pairs.sets.size()) ==
        count_disjoint_pairs(paths));
  CHECK(pairs.sets.size() == 5);
}

TEST_CASE("enumeration flags a hit limit as partial") {
  Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  GraphView kv(k4);
  auto limited = enumerate_disjoint_path_sets(kv, Semantics::kEdgeDisjoint, 0,
                                              1, 1, nullptr, 3);
  CHECK(limited.partial);
}

TEST_CASE("oracle optimum is the frontier minimum on random instances") {
  GenConfig cfg;
  cfg.model = GenModel::kMultigraph;
  cfg.n = 5;
  cfg.edge_count = 9;
  cfg.demand_count = 2;
  cfg.k_min = 1;
  cfg.k_max = 2;
  for (std::uint64_t seed = 2000; seed < 2020; ++seed) {
    cfg.seed = seed;
    Instance inst = generate_instance(cfg);
    OracleResult res = brute_force_opt(inst);
    REQUIRE(res.status == OracleStatus::kOptimal);
    // exhaustive re-check over every subset (m <= 9)
    const int m = inst.graph.edge_count();
    double best = 1e18;
    for (int mask = 0; mask < (1 << m); ++mask) {
      std::vector<int> items;
      double cost = 0;
      for (int e = 0; e < m; ++e) {
        if (mask & (1 << e)) {
          items.push_back(e);
          cost += inst.edge_costs[static_cast<size_t>(e)];
        }
      }
      if (cost < best && verify_cut(inst, items).feasible) best = cost;
    }
    CHECK(res.optimal_cost == doctest::Approx(best));
  }
}
