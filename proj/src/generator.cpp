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

#include "mrc/generator.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mrc/connectivity.hpp"

namespace mrc {

namespace {

std::vector<Graph::Edge> gnp_edges(int n, double p, SplitMix64& rng) {
  std::vector<Graph::Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (rng.next_unit() < p) edges.push_back({a, b});
    }
  }
  return edges;
}

std::vector<Graph::Edge> grid_edges(int rows, int cols) {
  std::vector<Graph::Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return edges;
}

std::vector<Graph::Edge> multigraph_edges(int n, int m, SplitMix64& rng) {
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    int b = static_cast<int>(
        rng.next_below(static_cast<std::uint64_t>(n - 1)));
    if (b >= a) ++b;  // avoid self-loops
    edges.push_back({a, b});
  }
  return edges;
}

}  // namespace

Instance generate_instance(const GenConfig& cfg) {
  if (cfg.cost_min < 0 || cfg.cost_max < cfg.cost_min) {
    throw std::invalid_argument("bad cost range");
  }
  if (cfg.k_min < 1 || cfg.k_max < cfg.k_min) {
    throw std::invalid_argument("bad threshold range");
  }
  if (cfg.demand_count < 0) throw std::invalid_argument("bad demand count");

  SplitMix64 rng(cfg.seed);
  int n = 0;
  std::vector<Graph::Edge> edges;
  switch (cfg.model) {
    case GenModel::kGnp:
      if (cfg.n < 2) throw std::invalid_argument("gnp needs n >= 2");
      n = cfg.n;
      edges = gnp_edges(n, cfg.edge_probability, rng);
      break;
    case GenModel::kGrid:
      if (cfg.grid_rows < 1 || cfg.grid_cols < 1 ||
          cfg.grid_rows * cfg.grid_cols < 2) {
        throw std::invalid_argument("grid needs at least two vertices");
      }
      n = cfg.grid_rows * cfg.grid_cols;
      edges = grid_edges(cfg.grid_rows, cfg.grid_cols);
      break;
    case GenModel::kMultigraph:
      if (cfg.n < 2) throw std::invalid_argument("multigraph needs n >= 2");
      if (cfg.edge_count < 0) throw std::invalid_argument("bad edge count");
      n = cfg.n;
      edges = multigraph_edges(n, cfg.edge_count, rng);
      break;
  }

  Instance inst;
  inst.graph = Graph(n, std::move(edges));
  inst.removal = cfg.removal;
  inst.semantics = cfg.semantics;
  const int m = inst.graph.edge_count();
  const std::uint64_t span =
      static_cast<std::uint64_t>(cfg.cost_max - cfg.cost_min) + 1;
  if (cfg.removal == Removal::kEdge) {
    inst.edge_costs.reserve(static_cast<size_t>(m));
    for (int e = 0; e < m; ++e) {
      inst.edge_costs.push_back(
          static_cast<double>(cfg.cost_min + rng.next_below(span)));
    }
  } else {
    inst.vertex_costs.reserve(static_cast<size_t>(n));
    for (int w = 0; w < n; ++w) {
      inst.vertex_costs.push_back(
          static_cast<double>(cfg.cost_min + rng.next_below(span)));
    }
  }

  GraphView full(inst.graph);
  for (int d = 0; d < cfg.demand_count; ++d) {
    int k = cfg.k_min +
            static_cast<int>(rng.next_below(
                static_cast<std::uint64_t>(cfg.k_max - cfg.k_min) + 1));
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        bool taken = false;
        for (const Demand& ex : inst.demands) {
          if (std::min(ex.u, ex.v) == u && std::max(ex.u, ex.v) == v) {
            taken = true;
            break;
          }
        }
        if (taken) continue;
        if (!cfg.allow_vacuous) {
          int lambda = cfg.semantics == Semantics::kEdgeDisjoint
                           ? edge_connectivity(full, u, v)
                           : vertex_connectivity(full, u, v);
          if (lambda < k) continue;
        }
        candidates.emplace_back(u, v);
      }
    }
    if (candidates.empty()) {
      throw std::invalid_argument(
          "no candidate pair for demand " + std::to_string(d) +
          " at threshold " + std::to_string(k));
    }
    auto [u, v] = candidates[rng.next_below(candidates.size())];
    inst.demands.push_back({u, v, k});
  }

  inst.validate();
  return inst;
}

}  // namespace mrc
