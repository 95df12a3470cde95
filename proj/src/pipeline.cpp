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

#include "mrc/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mrc/connectivity.hpp"
#include "mrc/generator.hpp"
#include "mrc/oracle.hpp"
#include "mrc/rounding.hpp"

namespace mrc {

using nlohmann::json;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  auto dt = std::chrono::steady_clock::now() - t0;
  return std::chrono::duration<double, std::milli>(dt).count();
}

const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kNonConverged:
      return "non_converged";
    case LpStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

int oracle_candidate_count(const Instance& inst) {
  int count = 0;
  if (inst.removal == Removal::kEdge) {
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      if (inst.removable(e)) ++count;
    }
  } else {
    for (int w = 0; w < inst.graph.vertex_count(); ++w) {
      if (!inst.is_terminal(w)) ++count;
    }
  }
  return count;
}

json trace_json(const CutSolution& cut) {
  json steps = json::array();
  for (const RoundTraceStep& st : cut.trace) {
    json s;
    s["demand"] = st.demand_index;
    s["root"] = st.root;
    s["fallback"] = st.used_fallback;
    if (st.radius >= 0) s["radius"] = st.radius;
    s["region_size"] = st.region_size;
    s["removed"] = st.removed;
    s["kept"] = st.kept;
    steps.push_back(std::move(s));
  }
  return steps;
}

}  // namespace

json run_pipeline(const Instance& inst, const RunConfig& cfg,
                  int& exit_code) {
  const auto t_start = std::chrono::steady_clock::now();
  inst.validate();

  json rep;
  rep["schema"] = "mrc-report/1";
  rep["instance"] = {
      {"digest", instance_digest(inst)},
      {"n", inst.graph.vertex_count()},
      {"m", inst.graph.edge_count()},
      {"demands", inst.demands.size()},
      {"removal", inst.removal == Removal::kEdge ? "edge" : "vertex"},
      {"semantics",
       inst.semantics == Semantics::kEdgeDisjoint ? "edge" : "vertex"},
  };
  const double beta = cfg.bicriteria ? cfg.beta : 1.0;
  rep["mode"] = cfg.bicriteria ? "bicriteria" : "exact";
  rep["beta"] = beta;

  // vertex variants run through the split reduction
  const bool split_used = inst.removal == Removal::kVertex;
  SplitResult split;
  if (split_used) split = vertex_split_transform(inst);
  const Instance& work = split_used ? split.instance : inst;

  const auto t_lp = std::chrono::steady_clock::now();
  LpResult lp = solve_lp(work, cfg.tol);
  const double lp_ms = ms_since(t_lp);

  int vacuous = 0;
  for (char v : lp.report.vacuous) vacuous += v;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < lp.report.demand_slack.size(); ++i) {
    if (!lp.report.vacuous[i]) {
      worst_slack = std::min(worst_slack, lp.report.demand_slack[i]);
    }
  }
  rep["lp"] = {
      {"status", lp_status_name(lp.report.status)},
      {"objective", lp.report.objective},
      {"rounds", lp.report.rounds},
      {"rows", lp.report.rows},
      {"vacuous_demands", vacuous},
  };
  if (std::isfinite(worst_slack)) rep["lp"]["min_slack"] = worst_slack;

  const auto t_round = std::chrono::steady_clock::now();
  CutSolution cut = round_exact(work, lp.frac, beta);
  const double round_ms = ms_since(t_round);

  if (cut.status == RoundStatus::kInfeasible) {
    const Demand& d = inst.demands[static_cast<size_t>(cut.infeasible_demand)];
    rep["error"] = {
        {"code", "infeasible"},
        {"demand", cut.infeasible_demand},
        {"u", d.u},
        {"v", d.v},
    };
    exit_code = kExitInfeasible;
    if (cfg.with_timings) {
      rep["timings"] = {{"lp_ms", lp_ms},
                        {"round_ms", round_ms},
                        {"total_ms", ms_since(t_start)}};
    }
    return rep;
  }

  std::vector<int> items = split_used
                               ? split.map.cut_to_vertices(cut.removed)
                               : cut.removed;
  std::vector<int> keff;
  keff.reserve(inst.demands.size());
  for (const Demand& d : inst.demands) {
    keff.push_back(effective_threshold(d.k, beta));
  }
  const auto t_verify = std::chrono::steady_clock::now();
  VerificationReport ver = verify_cut(inst, items, keff);
  const double verify_ms = ms_since(t_verify);

  rep["cut"] = {
      {"items", items},
      {"kind", split_used ? "vertices" : "edges"},
      {"cost", ver.total_cost},
  };
  json pairs = json::array();
  for (const PairVerification& pv : ver.pairs) {
    pairs.push_back({{"u", pv.demand.u},
                     {"v", pv.demand.v},
                     {"k", pv.demand.k},
                     {"k_eff", pv.effective_k},
                     {"achieved", pv.achieved},
                     {"satisfied", pv.satisfied}});
  }
  rep["verify"] = {{"feasible", ver.feasible}, {"pairs", std::move(pairs)}};

  if (lp.report.objective > 0) {
    rep["ratio"] = ver.total_cost / lp.report.objective;
  } else if (ver.total_cost == 0.0) {
    rep["ratio"] = 1.0;
  } else {
    rep["ratio"] = nullptr;
  }

  double oracle_ms = 0.0;
  if (cfg.oracle_cap > 0 && oracle_candidate_count(inst) <= cfg.oracle_cap) {
    const auto t_oracle = std::chrono::steady_clock::now();
    OracleResult oracle = brute_force_opt(inst, cfg.oracle_cap);
    oracle_ms = ms_since(t_oracle);
    json o;
    switch (oracle.status) {
      case OracleStatus::kOptimal:
        o = {{"status", "optimal"},
             {"cost", oracle.optimal_cost},
             {"optimal_set", oracle.optimal_set},
             {"optimal_count", oracle.optimal_count},
             {"explored", oracle.explored}};
        break;
      case OracleStatus::kInfeasible:
        o = {{"status", "infeasible"}, {"explored", oracle.explored}};
        break;
      case OracleStatus::kTooLarge:
        o = {{"status", "too_large"}};
        break;
    }
    rep["oracle"] = std::move(o);
  }

  if (cfg.with_trace) rep["trace"] = trace_json(cut);
  if (cfg.with_timings) {
    rep["timings"] = {{"lp_ms", lp_ms},
                      {"round_ms", round_ms},
                      {"verify_ms", verify_ms},
                      {"oracle_ms", oracle_ms},
                      {"total_ms", ms_since(t_start)}};
  }

  if (!ver.feasible) {
    exit_code = kExitInfeasible;
  } else if (lp.report.status != LpStatus::kOptimal) {
    exit_code = kExitLpNonConverged;
  } else {
    exit_code = kExitOk;
  }
  return rep;
}

namespace {

// Deterministic instance family for the benchmark sweep: cycle through the
// three generator models, lowering a drawn threshold until the model can
// satisfy it.
Instance bench_instance(std::uint64_t seed, int index, int k_min, int k_max) {
  GenConfig cfg;
  cfg.seed = seed + static_cast<std::uint64_t>(index) * 1000003ull;
  cfg.cost_min = 1;
  cfg.cost_max = 10;
  cfg.demand_count = 2 + index % 2;
  switch (index % 3) {
    case 0:
      cfg.model = GenModel::kGnp;
      cfg.n = 8;
      cfg.edge_probability = 0.5;
      break;
    case 1:
      cfg.model = GenModel::kGrid;
      cfg.grid_rows = 3;
      cfg.grid_cols = 3;
      break;
    default:
      cfg.model = GenModel::kMultigraph;
      cfg.n = 7;
      cfg.edge_count = 18;
      break;
  }
  for (int hi = k_max; hi >= k_min; --hi) {
    cfg.k_min = k_min;
    cfg.k_max = hi;
    try {
      return generate_instance(cfg);
    } catch (const std::invalid_argument&) {
      // threshold too demanding for this topology; relax and retry
    }
  }
  cfg.k_min = 1;
  cfg.k_max = 1;
  return generate_instance(cfg);
}

const char* model_name(int index) {
  switch (index % 3) {
    case 0:
      return "gnp";
    case 1:
      return "grid";
    default:
      return "multi";
  }
}

}  // namespace

json run_bench(const BenchConfig& cfg, std::string* csv) {
  json rows = json::array();
  std::ostringstream table;
  table << "seed,model,n,m,q,beta,lp_objective,cut_cost,ratio,feasible\n";

  struct BetaAgg {
    double beta;
    double cost_sum = 0;
    int feasible = 0;
    int runs = 0;
  };
  std::vector<BetaAgg> aggs;
  for (double b : cfg.betas) aggs.push_back({b});
  std::vector<double> ratios;

  for (int i = 0; i < cfg.count; ++i) {
    Instance inst = bench_instance(cfg.seed, i, cfg.k_min, cfg.k_max);
    for (size_t bi = 0; bi < cfg.betas.size(); ++bi) {
      RunConfig rc;
      rc.bicriteria = cfg.betas[bi] != 1.0;
      rc.beta = cfg.betas[bi];
      rc.tol = cfg.tol;
      rc.oracle_cap = cfg.oracle_cap;
      rc.with_timings = false;
      rc.with_trace = false;
      int code = kExitOk;
      json rep = run_pipeline(inst, rc, code);

      json row;
      row["index"] = i;
      row["seed"] = cfg.seed + static_cast<std::uint64_t>(i) * 1000003ull;
      row["model"] = model_name(i);
      row["beta"] = cfg.betas[bi];
      row["lp_objective"] = rep["lp"]["objective"];
      row["exit_code"] = code;
      bool feasible = false;
      double cost = 0.0;
      if (rep.contains("verify")) {
        feasible = rep["verify"]["feasible"].get<bool>();
        cost = rep["cut"]["cost"].get<double>();
        row["cut_cost"] = cost;
        row["feasible"] = feasible;
        row["ratio"] = rep["ratio"];
      }
      if (rep.contains("oracle")) row["oracle"] = rep["oracle"];
      rows.push_back(row);

      BetaAgg& agg = aggs[bi];
      agg.cost_sum += cost;
      agg.feasible += feasible ? 1 : 0;
      agg.runs += 1;
      if (cfg.betas[bi] == 1.0 && rep.contains("ratio") &&
          rep["ratio"].is_number()) {
        ratios.push_back(rep["ratio"].get<double>());
      }

      table << row["seed"] << ',' << model_name(i) << ','
            << inst.graph.vertex_count() << ',' << inst.graph.edge_count()
            << ',' << inst.demands.size() << ',' << cfg.betas[bi] << ','
            << rep["lp"]["objective"].get<double>() << ',' << cost << ','
            << (row.contains("ratio") && row["ratio"].is_number()
                    ? std::to_string(row["ratio"].get<double>())
                    : "nan")
            << ',' << (feasible ? 1 : 0) << '\n';
    }
  }

  json by_beta = json::array();
  for (const BetaAgg& a : aggs) {
    by_beta.push_back({{"beta", a.beta},
                       {"mean_cost", a.runs > 0 ? a.cost_sum / a.runs : 0.0},
                       {"feasible", a.feasible},
                       {"runs", a.runs}});
  }
  json ratio_stats;
  if (!ratios.empty()) {
    std::vector<double> sorted(ratios);
    std::sort(sorted.begin(), sorted.end());
    double sum = 0;
    for (double r : sorted) sum += r;
    ratio_stats = {{"count", sorted.size()},
                   {"min", sorted.front()},
                   {"max", sorted.back()},
                   {"mean", sum / static_cast<double>(sorted.size())},
                   {"median", sorted[sorted.size() / 2]}};
  }

  json out;
  out["schema"] = "mrc-bench/1";
  out["seed"] = cfg.seed;
  out["count"] = cfg.count;
  out["runs"] = std::move(rows);
  out["by_beta"] = std::move(by_beta);
  if (!ratio_stats.is_null()) out["ratio"] = std::move(ratio_stats);
  if (csv != nullptr) *csv = table.str();
  return out;
}

std::string report_determinism_key(const json& report) {
  json stripped = report;
  stripped.erase("timings");
  return stripped.dump(2);
}

}  // namespace mrc
