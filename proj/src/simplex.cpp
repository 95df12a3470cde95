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

#include "mrc/simplex.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>

#include "mrc/kernels.hpp"

namespace mrc {

namespace {
constexpr double kPivotEps = 1e-9;
constexpr double kZeroEps = 1e-12;
}  // namespace

SimplexResult solve_covering_lp(const std::vector<std::vector<int>>& rows,
                                const std::vector<double>& costs,
                                int max_pivots) {
  const int m = static_cast<int>(costs.size());
  const int q = static_cast<int>(rows.size());
  SimplexResult res;
  if (q == 0) {
    res.status = SimplexStatus::kOptimal;
    res.x.assign(static_cast<size_t>(m), 0.0);
    res.objective = 0.0;
    return res;
  }
  for (const auto& row : rows) {
    if (row.empty()) throw std::invalid_argument("empty constraint row");
    for (int e : row) {
      if (e < 0 || e >= m) throw std::invalid_argument("row index out of range");
    }
  }

  // Variables: x_0..x_{m-1}, s_0..s_{q-1} (surplus), w_0..w_{m-1} (bound
  // slack). Constraint rows: q covering rows then m bound rows x_e + w_e = 1.
  // Starting from x = 1 the covering rows reduce to s_j + sum w_e = |S_j|-1,
  // so {all x_e, all s_j} is a basic feasible start.
  const int nvars = m + q + m;
  const int nrows = q + m;
  const int width = nvars + 1;  // rhs in the last column
  const auto& ops = kern::active_ops();

  std::vector<double> tab(static_cast<size_t>(nrows + 1) * width, 0.0);
  auto row_ptr = [&](int r) { return tab.data() + static_cast<size_t>(r) * width; };
  std::vector<int> basis(static_cast<size_t>(nrows));

  for (int j = 0; j < q; ++j) {
    double* r = row_ptr(j);
    for (int e : rows[static_cast<size_t>(j)]) {
      r[m + q + e] = 1.0;  // w_e; duplicate mentions collapse to one edge
    }
    r[m + j] = 1.0;  // s_j
    double size = 0.0;
    for (int e = 0; e < m; ++e) size += r[m + q + e];
    r[nvars] = size - 1.0;
    basis[static_cast<size_t>(j)] = m + j;
  }
  for (int e = 0; e < m; ++e) {
    double* r = row_ptr(q + e);
    r[e] = 1.0;
    r[m + q + e] = 1.0;
    r[nvars] = 1.0;
    basis[static_cast<size_t>(q + e)] = e;
  }
  {
    double* obj = row_ptr(nrows);
    double total = 0.0;
    for (int e = 0; e < m; ++e) {
      obj[m + q + e] = -costs[static_cast<size_t>(e)];
      total += costs[static_cast<size_t>(e)];
    }
    obj[nvars] = -total;  // stores -objective
  }

  int degenerate_streak = 0;
  bool bland = false;
  bool optimal = false;
  double last_obj = std::numeric_limits<double>::infinity();

  for (res.pivots = 0; res.pivots < max_pivots; ++res.pivots) {
    double* obj = row_ptr(nrows);

    int enter = -1;
    if (!bland) {
      std::size_t cand = ops.argmin(obj, static_cast<std::size_t>(nvars));
      if (obj[cand] < -kPivotEps) enter = static_cast<int>(cand);
    } else {
      for (int j = 0; j < nvars; ++j) {
        if (obj[j] < -kPivotEps) {
          enter = j;
          break;
        }
      }
    }
    if (enter < 0) {
      optimal = true;
      break;
    }

    int leave = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < nrows; ++i) {
      double a = row_ptr(i)[enter];
      if (a <= kPivotEps) continue;
      double ratio = row_ptr(i)[nvars] / a;
      if (ratio < best_ratio - kZeroEps ||
          (ratio < best_ratio + kZeroEps && leave >= 0 &&
           basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave < 0) {
      // the feasible region is a box; an unbounded ray means the tableau
      // degraded numerically
      res.status = SimplexStatus::kNumericalFailure;
      return res;
    }

    double* prow = row_ptr(leave);
    double inv = 1.0 / prow[enter];
    ops.scale(inv, prow, static_cast<std::size_t>(width));
    prow[enter] = 1.0;  // cancel rounding noise on the pivot element
    for (int i = 0; i <= nrows; ++i) {
      if (i == leave) continue;
      double* r = row_ptr(i);
      double factor = r[enter];
      if (std::fabs(factor) < 1e-14) continue;
      ops.axpy(-factor, prow, r, static_cast<std::size_t>(width));
      r[enter] = 0.0;
    }
    basis[static_cast<size_t>(leave)] = enter;

    double cur_obj = -row_ptr(nrows)[nvars];
    if (std::fabs(cur_obj - last_obj) < 1e-12) {
      if (++degenerate_streak > 100) bland = true;
    } else {
      degenerate_streak = 0;
      bland = false;
    }
    last_obj = cur_obj;
  }
  res.status = optimal ? SimplexStatus::kOptimal : SimplexStatus::kIterationLimit;

  res.x.assign(static_cast<size_t>(m), 0.0);
  for (int i = 0; i < nrows; ++i) {
    int var = basis[static_cast<size_t>(i)];
    if (var < m) {
      double v = row_ptr(i)[nvars];
      if (v < 0.0) v = 0.0;
      if (v > 1.0) v = 1.0;
      res.x[static_cast<size_t>(var)] = v;
    }
  }
  res.objective = 0.0;
  for (int e = 0; e < m; ++e) {
    res.objective += costs[static_cast<size_t>(e)] * res.x[static_cast<size_t>(e)];
  }
  res.row_duals.assign(static_cast<size_t>(q), 0.0);
  for (int j = 0; j < q; ++j) {
    res.row_duals[static_cast<size_t>(j)] = row_ptr(nrows)[m + j];
  }
  return res;
}

}  // namespace mrc
