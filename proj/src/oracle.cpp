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

#include "mrc/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace mrc {

namespace {

struct FrontierNode {
  double cost;
  std::uint64_t mask;
  int max_index;  // largest candidate index in mask, -1 for the empty set

  bool operator>(const FrontierNode& o) const {
    if (cost != o.cost) return cost > o.cost;
    return mask > o.mask;
  }
};

}  // namespace

OracleResult brute_force_opt(const Instance& inst, int size_cap) {
  inst.validate();
  std::vector<int> candidates;
  if (inst.removal == Removal::kEdge) {
    for (EdgeId e = 0; e < inst.graph.edge_count(); ++e) {
      if (inst.removable(e)) candidates.push_back(e);
    }
  } else {
    for (int w = 0; w < inst.graph.vertex_count(); ++w) {
      if (!inst.is_terminal(w)) candidates.push_back(w);
    }
  }

  OracleResult res;
  if (static_cast<int>(candidates.size()) > size_cap ||
      candidates.size() > 62) {
    res.status = OracleStatus::kTooLarge;
    return res;
  }

  const bool exact = integral_costs(inst);
  const double tie_eps = exact ? 0.0 : 1e-9;
  const int c = static_cast<int>(candidates.size());
  std::vector<double> cand_cost(static_cast<size_t>(c));
  for (int i = 0; i < c; ++i) {
    cand_cost[static_cast<size_t>(i)] = inst.item_cost(candidates[static_cast<size_t>(i)]);
  }

  std::priority_queue<FrontierNode, std::vector<FrontierNode>,
                      std::greater<FrontierNode>>
      heap;
  heap.push({0.0, 0, -1});

  bool found = false;
  double opt = 0.0;
  std::vector<int> items;
  while (!heap.empty()) {
    FrontierNode node = heap.top();
    heap.pop();
    if (found && node.cost > opt + tie_eps) break;
    ++res.explored;

    items.clear();
    for (int i = 0; i < c; ++i) {
      if (node.mask & (std::uint64_t{1} << i)) {
        items.push_back(candidates[static_cast<size_t>(i)]);
      }
    }
    VerificationReport rep = verify_cut(inst, items);
    if (rep.feasible) {
      if (!found) {
        found = true;
        opt = node.cost;
        res.optimal_set = items;
      }
      ++res.optimal_count;
    }
    // canonical superset expansion: append only higher candidate indices
    for (int j = node.max_index + 1; j < c; ++j) {
      heap.push({node.cost + cand_cost[static_cast<size_t>(j)],
                 node.mask | (std::uint64_t{1} << j), j});
    }
  }

  if (!found) {
    res.status = OracleStatus::kInfeasible;
    return res;
  }
  res.status = OracleStatus::kOptimal;
  res.optimal_cost = opt;
  return res;
}

namespace {

void enumerate_paths(const GraphView& view, int u, int v, int path_limit,
                     std::vector<std::vector<EdgeId>>& path_edges,
                     std::vector<std::vector<int>>& path_verts,
                     bool& partial) {
  const Graph& g = view.graph();
  std::vector<char> visited(static_cast<size_t>(g.vertex_count()), 0);
  std::vector<EdgeId> edges;
  std::vector<int> verts{u};
  visited[static_cast<size_t>(u)] = 1;

  // incident edges in edge-id order for a canonical enumeration order
  std::vector<std::vector<std::pair<EdgeId, int>>> inc(
      static_cast<size_t>(g.vertex_count()));
  for (int x = 0; x < g.vertex_count(); ++x) {
    for (const auto& [nb, e] : g.incident(x)) {
      if (view.removed(e)) continue;
      if (view.directed() && g.edge(e).a != x) continue;
      inc[static_cast<size_t>(x)].emplace_back(e, nb);
    }
    std::sort(inc[static_cast<size_t>(x)].begin(),
              inc[static_cast<size_t>(x)].end());
  }

  std::function<void(int)> dfs = [&](int x) {
    if (partial) return;
    if (x == v) {
      if (static_cast<int>(path_edges.size()) >= path_limit) {
        partial = true;
        return;
      }
      path_edges.push_back(edges);
      path_verts.push_back(verts);
      return;
    }
    for (const auto& [e, nb] : inc[static_cast<size_t>(x)]) {
      if (visited[static_cast<size_t>(nb)]) continue;
      visited[static_cast<size_t>(nb)] = 1;
      edges.push_back(e);
      verts.push_back(nb);
      dfs(nb);
      verts.pop_back();
      edges.pop_back();
      visited[static_cast<size_t>(nb)] = 0;
    }
  };
  dfs(u);
}

}  // namespace

PathSetEnumeration enumerate_disjoint_path_sets(
    const GraphView& view, Semantics sem, int u, int v, int k,
    const std::vector<double>* metric, int path_limit, long long set_limit) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  PathSetEnumeration out;
  std::vector<std::vector<EdgeId>> path_edges;
  std::vector<std::vector<int>> path_verts;
  enumerate_paths(view, u, v, path_limit, path_edges, path_verts, out.partial);

  const int p = static_cast<int>(path_edges.size());
  std::vector<std::set<EdgeId>> edge_sets(static_cast<size_t>(p));
  std::vector<std::set<int>> inner_sets(static_cast<size_t>(p));
  for (int i = 0; i < p; ++i) {
    edge_sets[static_cast<size_t>(i)] = {path_edges[static_cast<size_t>(i)].begin(),
                                         path_edges[static_cast<size_t>(i)].end()};
    const auto& verts = path_verts[static_cast<size_t>(i)];
    for (size_t j = 1; j + 1 < verts.size(); ++j) {
      inner_sets[static_cast<size_t>(i)].insert(verts[j]);
    }
  }
  auto compatible = [&](int a, int b) {
    for (EdgeId e : edge_sets[static_cast<size_t>(a)]) {
      if (edge_sets[static_cast<size_t>(b)].count(e)) return false;
    }
    if (sem == Semantics::kVertexDisjoint) {
      for (int w : inner_sets[static_cast<size_t>(a)]) {
        if (inner_sets[static_cast<size_t>(b)].count(w)) return false;
      }
    }
    return true;
  };

  std::vector<int> chosen;
  std::function<void(int)> pick = [&](int start) {
    if (out.partial) return;
    if (static_cast<int>(chosen.size()) == k) {
      if (static_cast<long long>(out.sets.size()) >= set_limit) {
        out.partial = true;
        return;
      }
      DisjointPathSet set;
      std::set<EdgeId> uni;
      for (int idx : chosen) {
        set.paths.push_back(path_verts[static_cast<size_t>(idx)]);
        set.path_edges.push_back(path_edges[static_cast<size_t>(idx)]);
        uni.insert(edge_sets[static_cast<size_t>(idx)].begin(),
                   edge_sets[static_cast<size_t>(idx)].end());
      }
      set.union_edges.assign(uni.begin(), uni.end());
      if (metric != nullptr) {
        for (EdgeId e : set.union_edges) {
          set.total_metric += (*metric)[static_cast<size_t>(e)];
        }
      }
      out.sets.push_back(std::move(set));
      return;
    }
    for (int i = start; i < p; ++i) {
      bool ok = true;
      for (int j : chosen) {
        if (!compatible(j, i)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(i);
      pick(i + 1);
      chosen.pop_back();
    }
  };
  pick(0);
  return out;
}

}  // namespace mrc
