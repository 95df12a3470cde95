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

#ifndef MRC_PIPELINE_HPP
#define MRC_PIPELINE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mrc/graph.hpp"
#include "mrc/lp.hpp"

namespace mrc {

// Process exit codes shared by the library pipeline and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 2,
  kExitParseError = 3,
  kExitLpNonConverged = 4,
};

struct RunConfig {
  bool bicriteria = false;
  double beta = 1.0;
  LpTolerances tol;
  int oracle_cap = 0;      // run the exact oracle when candidates <= cap
  bool with_timings = true;
  bool with_trace = true;
};

// Full solve: validate, split vertex variants, solve the LP relaxation,
// round, prune, verify (at ceil(beta*k) in bicriteria mode), optionally
// compare against the exact oracle, and emit the mrc-report/1 JSON object.
// The exit code follows the ExitCode contract.
nlohmann::json run_pipeline(const Instance& inst, const RunConfig& cfg,
                            int& exit_code);

// Fixed seeded benchmark sweep; one pipeline run per (instance, beta).
// Returns the mrc-bench/1 JSON object (per-run rows plus ratio and beta
// aggregates) and fills `csv` with one line per run.
struct BenchConfig {
  std::uint64_t seed = 2026;
  int count = 50;
  std::vector<double> betas{1.0, 1.5, 2.0};
  int k_min = 2;
  int k_max = 4;
  int oracle_cap = 12;
  LpTolerances tol;
};

nlohmann::json run_bench(const BenchConfig& cfg, std::string* csv);

// Strips volatile fields (timings) for byte-comparison of reports.
std::string report_determinism_key(const nlohmann::json& report);

}  // namespace mrc

#endif  // MRC_PIPELINE_HPP
