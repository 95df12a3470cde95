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

#ifndef MRC_CONNECTIVITY_HPP
#define MRC_CONNECTIVITY_HPP

#include <optional>
#include <vector>

#include "mrc/graph.hpp"

namespace mrc {

// Flow value with a minimum-cut witness (the stored edges crossing from the
// source side of the final residual graph). With MRC_SELFCHECK=1 every query
// asserts that the witness cut capacity equals the flow value.
struct FlowResult {
  int value = 0;
  std::vector<EdgeId> min_cut;
};

// k paths between one pair, disjoint per the requested semantics, plus their
// stored-edge union and the union's total metric length (each edge counted
// once).
struct DisjointPathSet {
  std::vector<std::vector<int>> paths;          // vertex sequences
  std::vector<std::vector<EdgeId>> path_edges;  // stored edges per path
  std::vector<EdgeId> union_edges;              // sorted, distinct
  double total_metric = 0.0;
};

// Maximum number of pairwise edge-disjoint u-v paths (unit-capacity max
// flow); 0 iff u and v are disconnected.
int edge_connectivity(const GraphView& view, int u, int v);

// Maximum number of internally vertex-disjoint u-v paths, computed on the
// split graph with unit internal capacities. Parallel direct edges each
// count as one path.
int vertex_connectivity(const GraphView& view, int u, int v);

// Connectivity under explicit semantics. edge_origin is the split metadata
// of transformed instances (empty for plain ones): internal arcs of distinct
// surviving vertices get capacity 1 under vertex-disjoint semantics and are
// uncapacitated under edge-disjoint semantics.
int pair_connectivity(const GraphView& view, Semantics sem,
                      const std::vector<int>& edge_origin, int u, int v);

FlowResult max_flow_witness(const GraphView& view, Semantics sem,
                            const std::vector<int>& edge_origin, int u, int v);

struct MinCostKFlowResult {
  int attainable = 0;  // max routable paths, capped at the requested k
  std::optional<DisjointPathSet> paths;  // set iff attainable >= k
};

// Min-cost flow of value k on unit path capacities: successive shortest
// augmentations with Johnson potentials (all metric entries must be >= 0, so
// the zero potential is valid initially). Tie-breaks favor lower edge ids,
// making the output deterministic.
MinCostKFlowResult min_cost_k_flow(const GraphView& view,
                                   const std::vector<double>& metric, int u,
                                   int v, int k);
MinCostKFlowResult min_cost_k_flow(const GraphView& view, Semantics sem,
                                   const std::vector<int>& edge_origin,
                                   const std::vector<double>& metric, int u,
                                   int v, int k);

// Minimum u-v cut with per-edge capacities (real-valued). Returns the stored
// edges crossing the witness cut. Intended capacity convention: removal cost
// for cuttable edges, a huge value for non-removable ones.
std::vector<EdgeId> min_cost_cut(const GraphView& view,
                                 const std::vector<double>& capacities, int u,
                                 int v);

struct PairVerification {
  Demand demand;
  int effective_k = 0;
  int achieved = 0;
  bool satisfied = false;
};

struct VerificationReport {
  bool feasible = false;
  double total_cost = 0.0;
  std::vector<PairVerification> pairs;
};

// Recomputes each demand's connectivity in the instance minus the removed
// items (edge ids or vertex ids per the removal variant) and checks
// achieved < effective_k. Throws if a vertex cut removes a demand endpoint.
VerificationReport verify_cut(const Instance& inst,
                              const std::vector<int>& removed,
                              const std::vector<int>& effective_k);
VerificationReport verify_cut(const Instance& inst,
                              const std::vector<int>& removed);

}  // namespace mrc

#endif  // MRC_CONNECTIVITY_HPP
