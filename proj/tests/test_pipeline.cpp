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

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "mrc/generator.hpp"
#include "mrc/graph.hpp"
#include "mrc/pipeline.hpp"

using namespace mrc;
using nlohmann::json;

namespace {

Instance triangle_fixture() {
  return parse_instance(
      "p mrc 3 3 1\nvariant edge edge\ne 0 1 3\ne 0 2 1\ne 2 1 1\nq 0 1 2\n");
}

}  // namespace

TEST_CASE("pipeline report on the triangle fixture") {
  RunConfig cfg;
  cfg.oracle_cap = 12;
  int code = -1;
  json rep = run_pipeline(triangle_fixture(), cfg, code);
  CHECK(code == kExitOk);
  CHECK(rep["schema"] == "mrc-report/1");
  CHECK(rep["lp"]["objective"].get<double>() == doctest::Approx(1.0));
  CHECK(rep["cut"]["cost"].get<double>() == doctest::Approx(1.0));
  CHECK(rep["ratio"].get<double>() == doctest::Approx(1.0));
  CHECK(rep["oracle"]["cost"].get<double>() == doctest::Approx(1.0));
  CHECK(rep["verify"]["feasible"].get<bool>());
  CHECK(rep["instance"]["digest"] ==
        instance_digest(triangle_fixture()));
}

TEST_CASE("bicriteria run relaxes thresholds and never costs more") {
  // five parallel edges, threshold 4: exact mode must drop two edges
  Instance inst;
  inst.graph = Graph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}});
  inst.edge_costs = {5, 4, 3, 2, 1};
  inst.demands = {{0, 1, 4}};

  RunConfig exact;
  int code_exact = -1;
  json exact_rep = run_pipeline(inst, exact, code_exact);
  CHECK(code_exact == kExitOk);
  double exact_cost = exact_rep["cut"]["cost"].get<double>();
  CHECK(exact_cost == doctest::Approx(3.0));  // the two cheapest edges

  RunConfig relaxed;
  relaxed.bicriteria = true;
  relaxed.beta = 2.0;
  int code_relaxed = -1;
  json relaxed_rep = run_pipeline(inst, relaxed, code_relaxed);
  CHECK(code_relaxed == kExitOk);
  for (const auto& pair : relaxed_rep["verify"]["pairs"]) {
    CHECK(pair["k_eff"].get<int>() == 8);
    CHECK(pair["satisfied"].get<bool>());
  }
  CHECK(relaxed_rep["cut"]["cost"].get<double>() <= exact_cost);
}

TEST_CASE("reports are byte-identical modulo timings") {
  GenConfig gen;
  gen.model = GenModel::kGnp;
  gen.n = 9;
  gen.edge_probability = 0.45;
  gen.demand_count = 3;
  gen.k_min = 1;
  gen.k_max = 3;
  gen.seed = 31337;
  Instance inst = generate_instance(gen);
  RunConfig cfg;
  cfg.oracle_cap = 14;
  int code_a = -1, code_b = -1;
  json a = run_pipeline(inst, cfg, code_a);
  json b = run_pipeline(inst, cfg, code_b);
  CHECK(code_a == code_b);
  CHECK(report_determinism_key(a) == report_determinism_key(b));
  CHECK(a.contains("timings"));
}

TEST_CASE("infeasible vertex instances exit with code 2") {
  Instance inst;
  inst.graph = Graph(2, {{0, 1}});
  inst.removal = Removal::kVertex;
  inst.vertex_costs = {1, 1};
  inst.demands = {{0, 1, 1}};
  RunConfig cfg;
  int code = -1;
  json rep = run_pipeline(inst, cfg, code);
  CHECK(code == kExitInfeasible);
  CHECK(rep["error"]["code"] == "infeasible");
  CHECK(rep["error"]["demand"].get<int>() == 0);
}

TEST_CASE("row cap exhaustion reports non-convergence") {
  Instance inst = triangle_fixture();
  RunConfig cfg;
  cfg.tol.row_cap = 0;
  int code = -1;
  json rep = run_pipeline(inst, cfg, code);
  CHECK(code == kExitLpNonConverged);
  CHECK(rep["lp"]["status"] == "non_converged");
}

TEST_CASE("vertex pipeline returns vertex ids") {
  Instance inst;
  inst.graph = Graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}});
  inst.removal = Removal::kVertex;
  inst.vertex_costs = {10, 2, 3, 10};
  inst.demands = {{0, 3, 1}};
  RunConfig cfg;
  cfg.oracle_cap = 10;
  int code = -1;
  json rep = run_pipeline(inst, cfg, code);
  CHECK(code == kExitOk);
  CHECK(rep["cut"]["kind"] == "vertices");
  CHECK(rep["cut"]["items"].get<std::vector<int>>() ==
        std::vector<int>{1, 2});
  CHECK(rep["cut"]["cost"].get<double>() == doctest::Approx(5.0));
  CHECK(rep["oracle"]["cost"].get<double>() == doctest::Approx(5.0));
}

TEST_CASE("bench emits rows, aggregates and csv") {
  BenchConfig cfg;
  cfg.count = 6;
  cfg.oracle_cap = 0;
  std::string csv;
  json out = run_bench(cfg, &csv);
  CHECK(out["schema"] == "mrc-bench/1");
  CHECK(out["runs"].size() == 6 * 3);  // three betas per instance
  CHECK(out["by_beta"].size() == 3);
  for (const auto& agg : out["by_beta"]) {
    CHECK(agg["feasible"].get<int>() == agg["runs"].get<int>());
  }
  // csv: header plus one line per run
  size_t lines = std::count(csv.begin(), csv.end(), '\n');
  CHECK(lines == 1 + 6 * 3);

  std::string csv2;
  json out2 = run_bench(cfg, &csv2);
  CHECK(out.dump() == out2.dump());
  CHECK(csv == csv2);
}
