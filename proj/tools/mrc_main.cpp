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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mrc/connectivity.hpp"
#include "mrc/generator.hpp"
#include "mrc/graph.hpp"
#include "mrc/oracle.hpp"
#include "mrc/pipeline.hpp"

namespace {

using mrc::ExitCode;
using nlohmann::json;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path);
  out << text;
}

mrc::Instance load_instance(const std::string& path) {
  return mrc::parse_instance(read_input(path));
}

std::vector<int> load_cut_items(const std::string& path) {
  json j = json::parse(read_input(path));
  const json* source = &j;
  if (j.contains("cut")) source = &j["cut"];
  if (source->contains("items")) {
    return (*source)["items"].get<std::vector<int>>();
  }
  for (const char* key : {"edges", "vertices"}) {
    if (source->contains(key)) return (*source)[key].get<std::vector<int>>();
  }
  throw std::runtime_error("cut file has no items/edges/vertices array");
}

int cmd_gen(const mrc::GenConfig& cfg, const std::string& out_path) {
  mrc::Instance inst = mrc::generate_instance(cfg);
  write_output(out_path, mrc::serialize_instance(inst));
  return mrc::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mrc: multi-route cut solver"};
  app.require_subcommand(1);

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  mrc::GenConfig gen_cfg;
  std::string gen_model = "gnp";
  std::string gen_variant = "edge";
  std::string gen_semantics = "edge";
  std::string gen_out;
  gen->add_option("--model", gen_model, "gnp|grid|multi")
      ->check(CLI::IsMember({"gnp", "grid", "multi"}));
  gen->add_option("--n", gen_cfg.n, "vertex count (gnp, multi)");
  gen->add_option("--p", gen_cfg.edge_probability, "edge probability (gnp)");
  gen->add_option("--rows", gen_cfg.grid_rows, "grid rows");
  gen->add_option("--cols", gen_cfg.grid_cols, "grid columns");
  gen->add_option("--m", gen_cfg.edge_count, "edge count (multi)");
  gen->add_option("--cost-min", gen_cfg.cost_min, "minimum integral cost");
  gen->add_option("--cost-max", gen_cfg.cost_max, "maximum integral cost");
  gen->add_option("--demands", gen_cfg.demand_count, "demand count");
  gen->add_option("--kmin", gen_cfg.k_min, "minimum threshold");
  gen->add_option("--kmax", gen_cfg.k_max, "maximum threshold");
  gen->add_option("--seed", gen_cfg.seed, "generator seed");
  gen->add_option("--variant", gen_variant, "removal variant: edge|vertex")
      ->check(CLI::IsMember({"edge", "vertex"}));
  gen->add_option("--semantics", gen_semantics,
                  "connectivity semantics: edge|vertex")
      ->check(CLI::IsMember({"edge", "vertex"}));
  gen->add_flag("--allow-vacuous", gen_cfg.allow_vacuous,
                "sample demand pairs regardless of connectivity");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // --- solve ---
  auto* solve = app.add_subcommand("solve", "run the full pipeline");
  std::string solve_in, solve_out;
  std::string solve_mode = "exact";
  mrc::RunConfig run_cfg;
  bool no_trace = false;
  bool no_timings = false;
  solve->add_option("--in", solve_in, "instance file ('-' for stdin)")
      ->required();
  solve->add_option("--mode", solve_mode, "exact|bicriteria")
      ->check(CLI::IsMember({"exact", "bicriteria"}));
  solve->add_option("--beta", run_cfg.beta, "threshold relaxation (>= 1)");
  solve->add_option("--tol-sep", run_cfg.tol.eps_sep, "separation tolerance");
  solve->add_option("--tol-feas", run_cfg.tol.eps_feas,
                    "feasibility tolerance");
  solve->add_option("--row-cap", run_cfg.tol.row_cap, "cutting-plane row cap");
  solve->add_option("--oracle-cap", run_cfg.oracle_cap,
                    "run the exact oracle when candidate items <= cap");
  solve->add_flag("--no-trace", no_trace, "omit the rounding trace");
  solve->add_flag("--no-timings", no_timings, "omit timing fields");
  solve->add_option("--out", solve_out, "report path (default stdout)");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "verify a cut against an instance");
  std::string verify_in, verify_cut_path, verify_out;
  double verify_beta = 1.0;
  verify->add_option("--in", verify_in, "instance file")->required();
  verify->add_option("--cut", verify_cut_path,
                     "cut JSON ({\"items\": [...]} or a solve report)")
      ->required();
  verify->add_option("--beta", verify_beta,
                     "verify at thresholds ceil(beta*k)");
  verify->add_option("--out", verify_out, "output path (default stdout)");

  // --- oracle ---
  auto* oracle = app.add_subcommand("oracle", "exact brute-force optimum");
  std::string oracle_in, oracle_out;
  int oracle_cap = 20;
  oracle->add_option("--in", oracle_in, "instance file")->required();
  oracle->add_option("--cap", oracle_cap, "candidate-count cap");
  oracle->add_option("--out", oracle_out, "output path (default stdout)");

  // --- bench ---
  auto* bench = app.add_subcommand("bench", "fixed seeded benchmark sweep");
  mrc::BenchConfig bench_cfg;
  std::string bench_out, bench_csv;
  bench->add_option("--seed", bench_cfg.seed, "suite seed");
  bench->add_option("--count", bench_cfg.count, "instances in the suite");
  bench->add_option("--kmin", bench_cfg.k_min, "minimum threshold");
  bench->add_option("--kmax", bench_cfg.k_max, "maximum threshold");
  bench->add_option("--oracle-cap", bench_cfg.oracle_cap,
                    "oracle candidate cap (0 disables)");
  bench->add_option("--out", bench_out, "JSON output path (default stdout)");
  bench->add_option("--csv", bench_csv, "also write a CSV summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : mrc::kExitParseError;
  }

  try {
    if (gen->parsed()) {
      gen_cfg.model = gen_model == "gnp"    ? mrc::GenModel::kGnp
                      : gen_model == "grid" ? mrc::GenModel::kGrid
                                            : mrc::GenModel::kMultigraph;
      gen_cfg.removal = gen_variant == "edge" ? mrc::Removal::kEdge
                                              : mrc::Removal::kVertex;
      gen_cfg.semantics = gen_semantics == "edge"
                              ? mrc::Semantics::kEdgeDisjoint
                              : mrc::Semantics::kVertexDisjoint;
      return cmd_gen(gen_cfg, gen_out);
    }

    if (solve->parsed()) {
      run_cfg.bicriteria = solve_mode == "bicriteria";
      if (!run_cfg.bicriteria) run_cfg.beta = 1.0;
      if (run_cfg.beta < 1.0) {
        std::cerr << "error: --beta must be >= 1\n";
        return mrc::kExitParseError;
      }
      run_cfg.with_trace = !no_trace;
      run_cfg.with_timings = !no_timings;
      mrc::Instance inst = load_instance(solve_in);
      int code = mrc::kExitOk;
      json rep = mrc::run_pipeline(inst, run_cfg, code);
      write_output(solve_out, rep.dump(2));
      return code;
    }

    if (verify->parsed()) {
      mrc::Instance inst = load_instance(verify_in);
      std::vector<int> items = load_cut_items(verify_cut_path);
      std::vector<int> keff;
      for (const mrc::Demand& d : inst.demands) {
        keff.push_back(mrc::effective_threshold(d.k, verify_beta));
      }
      mrc::VerificationReport ver = mrc::verify_cut(inst, items, keff);
      json out;
      out["feasible"] = ver.feasible;
      out["cost"] = ver.total_cost;
      json pairs = json::array();
      for (const mrc::PairVerification& pv : ver.pairs) {
        pairs.push_back({{"u", pv.demand.u},
                         {"v", pv.demand.v},
                         {"k", pv.demand.k},
                         {"k_eff", pv.effective_k},
                         {"achieved", pv.achieved},
                         {"satisfied", pv.satisfied}});
      }
      out["pairs"] = std::move(pairs);
      write_output(verify_out, out.dump(2));
      return ver.feasible ? mrc::kExitOk : mrc::kExitInfeasible;
    }

    if (oracle->parsed()) {
      mrc::Instance inst = load_instance(oracle_in);
      mrc::OracleResult res = mrc::brute_force_opt(inst, oracle_cap);
      json out;
      switch (res.status) {
        case mrc::OracleStatus::kOptimal:
          out = {{"status", "optimal"},
                 {"cost", res.optimal_cost},
                 {"optimal_set", res.optimal_set},
                 {"optimal_count", res.optimal_count},
                 {"explored", res.explored}};
          break;
        case mrc::OracleStatus::kInfeasible:
          out = {{"status", "infeasible"}, {"explored", res.explored}};
          break;
        case mrc::OracleStatus::kTooLarge:
          out = {{"status", "too_large"}};
          break;
      }
      write_output(oracle_out, out.dump(2));
      return res.status == mrc::OracleStatus::kInfeasible
                 ? mrc::kExitInfeasible
                 : mrc::kExitOk;
    }

    if (bench->parsed()) {
      std::string csv;
      json out = mrc::run_bench(bench_cfg, &csv);
      write_output(bench_out, out.dump(2));
      if (!bench_csv.empty()) write_output(bench_csv, csv);
      return mrc::kExitOk;
    }
  } catch (const mrc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return mrc::kExitParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return mrc::kExitParseError;
  }
  return mrc::kExitParseError;
}
