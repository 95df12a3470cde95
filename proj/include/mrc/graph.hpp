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

#ifndef MRC_GRAPH_HPP
#define MRC_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mrc {

using EdgeId = int;

enum class Removal { kEdge, kVertex };
enum class Semantics { kEdgeDisjoint, kVertexDisjoint };

// Undirected multigraph with stable edge identities. Parallel edges are kept
// distinct (they count as distinct disjoint paths); self-loops are rejected.
// Immutable after construction.
class Graph {
 public:
  struct Edge {
    int a;
    int b;
  };

  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // (neighbor, edge id); every edge is listed at both endpoints.
  const std::vector<std::pair<int, EdgeId>>& incident(int v) const {
    return adj_[static_cast<size_t>(v)];
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<int, EdgeId>>> adj_;
};

struct Demand {
  int u = 0;
  int v = 0;
  int k = 1;  // finite threshold, >= 1; infinite-threshold pairs are absent
};

// A multi-route cut instance.
//
// For Removal::kVertex, vertex_costs has one entry per vertex and edge_costs
// is empty; vertex_split_transform produces the equivalent edge-removal form.
//
// Split-transformed instances are directed: stored edge (a, b) is the arc
// a -> b. edge_origin[e] holds the original vertex id for internal arcs and
// -1 for the arcs replacing original edges; those carry the non-removable
// sentinel cost `large_cost`. All other instances have directed == false and
// edge_origin empty.
struct Instance {
  Graph graph;
  Removal removal = Removal::kEdge;
  Semantics semantics = Semantics::kEdgeDisjoint;
  std::vector<double> edge_costs;
  std::vector<double> vertex_costs;
  std::vector<Demand> demands;
  bool directed = false;
  double large_cost = std::numeric_limits<double>::infinity();
  std::vector<int> edge_origin;

  bool removable(EdgeId e) const {
    return edge_costs[static_cast<size_t>(e)] < large_cost;
  }
  // Cost of a removal item (edge id or vertex id per the removal variant).
  double item_cost(int id) const;
  bool is_terminal(int v) const;
  // Throws std::invalid_argument on any broken invariant.
  void validate() const;
};

// Non-owning edge mask over a graph. Vertex ids are unchanged and the
// underlying graph is never mutated, so independent views may be used
// concurrently on a shared graph.
class GraphView {
 public:
  explicit GraphView(const Graph& g, bool directed = false);
  GraphView(const Graph& g, const std::vector<EdgeId>& removed,
            bool directed = false);

  const Graph& graph() const { return *g_; }
  bool directed() const { return directed_; }
  bool removed(EdgeId e) const { return mask_[static_cast<size_t>(e)] != 0; }
  void remove(EdgeId e);
  void restore(EdgeId e);
  int active_edge_count() const {
    return g_->edge_count() - removed_count_;
  }

 private:
  const Graph* g_;
  bool directed_ = false;
  std::vector<char> mask_;
  int removed_count_ = 0;
};

// View of `g` with the listed edges masked out. Throws on invalid ids.
GraphView remove_edges(const Graph& g, const std::vector<EdgeId>& removed);

// View of an instance's graph with the given removal items applied: edge ids
// for edge removal, vertex ids (masking all incident edges) for vertex
// removal.
GraphView apply_removal(const Instance& inst, const std::vector<int>& removed);

// Result of reducing a vertex-removal instance to an edge-removal one.
// Vertex w becomes in-node w and out-node w + n joined by the internal arc
// internal_edge[w] of cost vertex_costs[w] (the non-removable sentinel for
// demand endpoints). Every original edge (a, b) becomes the two opposite
// non-removable arcs a_out -> b_in and b_out -> a_in. Demand (u, v) maps to
// (out_node(u), in_node(v)).
struct VertexSplitMap {
  int original_n = 0;
  std::vector<EdgeId> internal_edge;  // original vertex -> internal arc
  std::vector<int> edge_vertex;       // transformed edge -> vertex id or -1

  int in_node(int w) const { return w; }
  int out_node(int w) const { return w + original_n; }

  // Pull an internal-edge cut back to original vertex ids (sorted). Throws
  // if the cut contains a non-internal edge.
  std::vector<int> cut_to_vertices(const std::vector<EdgeId>& cut) const;
};

struct SplitResult {
  Instance instance;
  VertexSplitMap map;
};

// Requires inst.removal == Removal::kVertex.
SplitResult vertex_split_transform(const Instance& inst);

// Instance text format error with its 1-based line number.
struct ParseError : std::runtime_error {
  ParseError(int line_number, const std::string& message);
  int line = 0;
};

// Line-oriented instance format ('#' starts a comment):
//   p mrc <n> <m> <q>
//   variant <edge|vertex> <edge|vertex>      removal, connectivity semantics
//   e <a> <b> <cost>                         m lines (no cost field when the
//                                            removal variant is vertex)
//   v <id> <cost>                            n lines, vertex removal only
//   q <u> <v> <k>                            q lines
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& inst);

// Semantic equality (same graph, variant flags, costs, demands).
bool semantically_equal(const Instance& a, const Instance& b);

// True when every cost in the instance is integral (enables exact
// brute-force comparisons downstream).
bool integral_costs(const Instance& inst);

// ceil(beta * k) with a guard against float drift just above an integer.
int effective_threshold(int k, double beta);

// FNV-1a over the canonical serialization.
std::string instance_digest(const Instance& inst);

}  // namespace mrc

#endif  // MRC_GRAPH_HPP
