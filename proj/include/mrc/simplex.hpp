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

#ifndef MRC_SIMPLEX_HPP
#define MRC_SIMPLEX_HPP

#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

enum class SimplexStatus { kOptimal, kIterationLimit, kNumericalFailure };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::kNumericalFailure;
  std::vector<double> x;
  double objective = 0.0;
  std::vector<double> row_duals;  // optimality certificate, one per row
  int pivots = 0;
};

// Dense primal simplex for the covering LP
//
//   min c.x   s.t.  sum_{e in row_j} x_e >= 1  for every row,  0 <= x <= 1.
//
// Standard form adds a surplus per row and a slack per upper bound; the
// all-ones point gives a basic feasible start, so no phase-1 is needed.
// Entering variable: most negative reduced cost (Bland's rule after a long
// degenerate streak); leaving variable: ratio test with lowest-index
// tie-break. Tableau row operations run on the runtime-dispatched kernels.
SimplexResult solve_covering_lp(const std::vector<std::vector<int>>& rows,
                                const std::vector<double>& costs,
                                int max_pivots = 200000);

}  // namespace mrc

#endif  // MRC_SIMPLEX_HPP
