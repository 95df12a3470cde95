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

#include "mrc/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace mrc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool selfcheck_enabled() {
  static const bool on = [] {
    const char* v = std::getenv("MRC_SELFCHECK");
    return v != nullptr && v[0] == '1';
  }();
  return on;
}

// Residual network. Arcs come in pairs: arc i and i^1 are each other's
// residuals. An undirected unit edge is modeled as two opposite arc pairs;
// the decomposition cancels antiparallel use so each stored edge carries at
// most one path.
struct Net {
  struct Arc {
    int to;
    int cap;
    double cost;
    EdgeId stored;
  };
  int nodes = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;
  std::vector<int> init_cap;
  // node -> original vertex id, for reporting paths on split graphs
  std::vector<int> node_label;

  explicit Net(int n) : nodes(n), out(static_cast<size_t>(n)) {}

  int add_arc(int from, int to, int cap, double cost, EdgeId stored) {
    int id = static_cast<int>(arcs.size());
    arcs.push_back({to, cap, cost, stored});
    arcs.push_back({from, 0, -cost, stored});
    out[static_cast<size_t>(from)].push_back(id);
    out[static_cast<size_t>(to)].push_back(id + 1);
    init_cap.push_back(cap);
    init_cap.push_back(0);
    return id;
  }
};

int big_cap(const GraphView& view) { return view.graph().edge_count() + 2; }

// Builds the flow network for one (u, v) query under the given semantics.
// Plain undirected graphs: vertices as-is for edge-disjoint counting, a
// per-query in/out split with unit internal arcs for vertex-disjoint
// counting. Directed (split-transformed) graphs: stored edge (a, b) is the
// arc a -> b; internal arcs are capacitated per the semantics.
Net build_net(const GraphView& view, Semantics sem,
              const std::vector<int>& edge_origin, int u, int v,
              const std::vector<double>* metric) {
  const Graph& g = view.graph();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const int big = big_cap(view);
  auto edge_cost = [&](EdgeId e) {
    return metric == nullptr ? 0.0 : (*metric)[static_cast<size_t>(e)];
  };

  if (view.directed()) {
    Net net(n);
    net.source = u;
    net.sink = v;
    net.node_label.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) net.node_label[static_cast<size_t>(i)] = i;
    for (EdgeId e = 0; e < m; ++e) {
      if (view.removed(e)) continue;
      const Graph::Edge& ed = g.edge(e);
      int cap = 1;
      if (!edge_origin.empty() && edge_origin[static_cast<size_t>(e)] >= 0) {
        // Internal arc of an original vertex: under edge-disjoint semantics
        // paths may share vertices freely; under vertex-disjoint semantics
        // each surviving vertex carries one path (query endpoints excepted).
        const bool query_vertex =
            (ed.a == u || ed.b == u || ed.a == v || ed.b == v);
        cap = (sem == Semantics::kEdgeDisjoint || query_vertex) ? big : 1;
      }
      net.add_arc(ed.a, ed.b, cap, edge_cost(e), e);
    }
    return net;
  }

  if (sem == Semantics::kEdgeDisjoint) {
    Net net(n);
    net.source = u;
    net.sink = v;
    net.node_label.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) net.node_label[static_cast<size_t>(i)] = i;
    for (EdgeId e = 0; e < m; ++e) {
      if (view.removed(e)) continue;
      const Graph::Edge& ed = g.edge(e);
      net.add_arc(ed.a, ed.b, 1, edge_cost(e), e);
      net.add_arc(ed.b, ed.a, 1, edge_cost(e), e);
    }
    return net;
  }

  // Per-query vertex split: in-node w, out-node w + n, internal arc
  // w_in -> w_out with capacity 1 (query endpoints unbounded).
  Net net(2 * n);
  net.source = u + n;
  net.sink = v;
  net.node_label.resize(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    net.node_label[static_cast<size_t>(i)] = i;
    net.node_label[static_cast<size_t>(i + n)] = i;
  }
  for (int w = 0; w < n; ++w) {
    net.add_arc(w, w + n, (w == u || w == v) ? big : 1, 0.0, -1);
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (view.removed(e)) continue;
    const Graph::Edge& ed = g.edge(e);
    net.add_arc(ed.a + n, ed.b, 1, edge_cost(e), e);
    net.add_arc(ed.b + n, ed.a, 1, edge_cost(e), e);
  }
  return net;
}

// Dinic blocking-flow max flow on the residual net.
struct Dinic {
  Net& net;
  std::vector<int> level;
  std::vector<size_t> iter;

  explicit Dinic(Net& n)
      : net(n),
        level(static_cast<size_t>(n.nodes)),
        iter(static_cast<size_t>(n.nodes)) {}

  bool bfs() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[static_cast<size_t>(net.source)] = 0;
    q.push(net.source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a : net.out[static_cast<size_t>(u)]) {
        const Net::Arc& arc = net.arcs[static_cast<size_t>(a)];
        if (arc.cap <= 0 || level[static_cast<size_t>(arc.to)] >= 0) continue;
        level[static_cast<size_t>(arc.to)] = level[static_cast<size_t>(u)] + 1;
        q.push(arc.to);
      }
    }
    return level[static_cast<size_t>(net.sink)] >= 0;
  }

  int dfs(int u, int limit) {
    if (u == net.sink) return limit;
    for (size_t& i = iter[static_cast<size_t>(u)];
         i < net.out[static_cast<size_t>(u)].size(); ++i) {
      int a = net.out[static_cast<size_t>(u)][i];
      Net::Arc& arc = net.arcs[static_cast<size_t>(a)];
      if (arc.cap <= 0 ||
          level[static_cast<size_t>(arc.to)] !=
              level[static_cast<size_t>(u)] + 1) {
        continue;
      }
      int pushed = dfs(arc.to, std::min(limit, arc.cap));
      if (pushed > 0) {
        arc.cap -= pushed;
        net.arcs[static_cast<size_t>(a ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int run() {
    int flow = 0;
    while (bfs()) {
      std::fill(iter.begin(), iter.end(), 0);
      int pushed;
      while ((pushed = dfs(net.source, std::numeric_limits<int>::max())) > 0) {
        flow += pushed;
      }
    }
    return flow;
  }
};

std::vector<char> residual_source_side(const Net& net) {
  std::vector<char> side(static_cast<size_t>(net.nodes), 0);
  std::queue<int> q;
  side[static_cast<size_t>(net.source)] = 1;
  q.push(net.source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int a : net.out[static_cast<size_t>(u)]) {
      const Net::Arc& arc = net.arcs[static_cast<size_t>(a)];
      if (arc.cap <= 0 || side[static_cast<size_t>(arc.to)]) continue;
      side[static_cast<size_t>(arc.to)] = 1;
      q.push(arc.to);
    }
  }
  return side;
}

// Witness stored edges and the arc-level capacity self-check.
FlowResult finish_flow(Net& net, int value) {
  FlowResult res;
  res.value = value;
  std::vector<char> side = residual_source_side(net);
  std::set<EdgeId> cut;
  long long cap_across = 0;
  for (size_t a = 0; a < net.arcs.size(); ++a) {
    if (net.init_cap[a] <= 0) continue;  // residual-only arcs
    const Net::Arc& arc = net.arcs[a];
    int from = net.arcs[a ^ 1].to;
    if (side[static_cast<size_t>(from)] && !side[static_cast<size_t>(arc.to)]) {
      cap_across += net.init_cap[a];
      if (arc.stored >= 0) cut.insert(arc.stored);
    }
  }
  if (selfcheck_enabled() && cap_across != value) {
    throw std::logic_error("max-flow/min-cut self-check failed");
  }
  res.min_cut.assign(cut.begin(), cut.end());
  return res;
}

void check_pair(const GraphView& view, int u, int v) {
  const int n = view.graph().vertex_count();
  if (u < 0 || u >= n || v < 0 || v >= n) {
    throw std::out_of_range("invalid vertex id");
  }
  if (u == v) throw std::invalid_argument("query endpoints equal");
}

// Cancel antiparallel flow per stored edge so each stored edge carries at
// most one net unit before decomposition. The two forward arcs of an
// undirected edge were added back to back and must be true x->y / y->x
// opposites; in split networks the arcs of one stored edge connect
// different node pairs and carry independent flow, so they are skipped.
void cancel_opposite_flow(Net& net) {
  for (size_t a = 0; a + 2 < net.arcs.size(); a += 2) {
    if (net.init_cap[a] <= 0) continue;
    size_t b = a + 2;
    if (net.init_cap[b] <= 0) continue;
    if (net.arcs[a].stored < 0 || net.arcs[a].stored != net.arcs[b].stored) {
      continue;
    }
    int a_from = net.arcs[a ^ 1].to;
    int b_from = net.arcs[b ^ 1].to;
    if (net.arcs[a].to != b_from || net.arcs[b].to != a_from) continue;
    int fa = net.init_cap[a] - net.arcs[a].cap;
    int fb = net.init_cap[b] - net.arcs[b].cap;
    int c = std::min(fa, fb);
    if (c > 0) {
      net.arcs[a].cap += c;
      net.arcs[a ^ 1].cap -= c;
      net.arcs[b].cap += c;
      net.arcs[b ^ 1].cap -= c;
    }
  }
}

// Extracts `value` source-to-sink paths from the flow, removing any flow
// cycles met along the way. Paths are reported on original vertex labels
// with split in/out pairs collapsed.
DisjointPathSet decompose_paths(Net& net, int value,
                                const std::vector<double>* metric) {
  cancel_opposite_flow(net);
  std::vector<int> flow_left(net.arcs.size(), 0);
  for (size_t a = 0; a < net.arcs.size(); ++a) {
    flow_left[a] = net.init_cap[a] - net.arcs[a].cap;
    if (flow_left[a] < 0) flow_left[a] = 0;
  }
  DisjointPathSet out;
  std::set<EdgeId> uni;
  for (int p = 0; p < value; ++p) {
    std::vector<int> node_walk{net.source};
    std::vector<int> arc_walk;
    std::vector<int> pos(static_cast<size_t>(net.nodes), -1);
    pos[static_cast<size_t>(net.source)] = 0;
    int cur = net.source;
    while (cur != net.sink) {
      int chosen = -1;
      for (int a : net.out[static_cast<size_t>(cur)]) {
        if (flow_left[static_cast<size_t>(a)] > 0) {
          chosen = a;
          break;
        }
      }
      if (chosen < 0) throw std::logic_error("flow decomposition stuck");
      --flow_left[static_cast<size_t>(chosen)];
      int to = net.arcs[static_cast<size_t>(chosen)].to;
      if (pos[static_cast<size_t>(to)] >= 0) {
        // flow cycle: drop it and resume from its first visit
        int at = pos[static_cast<size_t>(to)];
        for (size_t i = static_cast<size_t>(at) + 1; i < node_walk.size();
             ++i) {
          pos[static_cast<size_t>(node_walk[i])] = -1;
        }
        node_walk.resize(static_cast<size_t>(at) + 1);
        arc_walk.resize(static_cast<size_t>(at));
        cur = to;
        continue;
      }
      node_walk.push_back(to);
      arc_walk.push_back(chosen);
      pos[static_cast<size_t>(to)] = static_cast<int>(node_walk.size()) - 1;
      cur = to;
    }
    std::vector<int> verts;
    for (int node : node_walk) {
      int label = net.node_label.empty() ? node
                                         : net.node_label[static_cast<size_t>(node)];
      if (verts.empty() || verts.back() != label) verts.push_back(label);
    }
    std::vector<EdgeId> edges;
    for (int a : arc_walk) {
      EdgeId e = net.arcs[static_cast<size_t>(a)].stored;
      if (e >= 0) {
        edges.push_back(e);
        uni.insert(e);
      }
    }
    out.paths.push_back(std::move(verts));
    out.path_edges.push_back(std::move(edges));
  }
  out.union_edges.assign(uni.begin(), uni.end());
  if (metric != nullptr) {
    for (EdgeId e : out.union_edges) {
      out.total_metric += (*metric)[static_cast<size_t>(e)];
    }
  }
  return out;
}

}  // namespace

int pair_connectivity(const GraphView& view, Semantics sem,
                      const std::vector<int>& edge_origin, int u, int v) {
  return max_flow_witness(view, sem, edge_origin, u, v).value;
}

FlowResult max_flow_witness(const GraphView& view, Semantics sem,
                            const std::vector<int>& edge_origin, int u,
                            int v) {
  check_pair(view, u, v);
  Net net = build_net(view, sem, edge_origin, u, v, nullptr);
  Dinic dinic(net);
  int value = dinic.run();
  return finish_flow(net, value);
}

int edge_connectivity(const GraphView& view, int u, int v) {
  return pair_connectivity(view, Semantics::kEdgeDisjoint, {}, u, v);
}

int vertex_connectivity(const GraphView& view, int u, int v) {
  return pair_connectivity(view, Semantics::kVertexDisjoint, {}, u, v);
}

MinCostKFlowResult min_cost_k_flow(const GraphView& view,
                                   const std::vector<double>& metric, int u,
                                   int v, int k) {
  return min_cost_k_flow(view, Semantics::kEdgeDisjoint, {}, metric, u, v, k);
}

MinCostKFlowResult min_cost_k_flow(const GraphView& view, Semantics sem,
                                   const std::vector<int>& edge_origin,
                                   const std::vector<double>& metric, int u,
                                   int v, int k) {
  check_pair(view, u, v);
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  if (static_cast<int>(metric.size()) != view.graph().edge_count()) {
    throw std::invalid_argument("metric length mismatch");
  }
  for (double x : metric) {
    if (!(x >= 0)) throw std::invalid_argument("negative metric entry");
  }

  Net net = build_net(view, sem, edge_origin, u, v, &metric);
  const int nn = net.nodes;
  std::vector<double> pot(static_cast<size_t>(nn), 0.0);
  std::vector<double> dist(static_cast<size_t>(nn));
  std::vector<int> parent_arc(static_cast<size_t>(nn));
  std::vector<EdgeId> parent_stored(static_cast<size_t>(nn));

  int pushed = 0;
  while (pushed < k) {
    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::fill(parent_stored.begin(), parent_stored.end(),
              std::numeric_limits<int>::max());
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    dist[static_cast<size_t>(net.source)] = 0.0;
    heap.emplace(0.0, net.source);
    std::vector<char> done(static_cast<size_t>(nn), 0);
    while (!heap.empty()) {
      auto [d, x] = heap.top();
      heap.pop();
      if (done[static_cast<size_t>(x)]) continue;
      done[static_cast<size_t>(x)] = 1;
      for (int a : net.out[static_cast<size_t>(x)]) {
        const Net::Arc& arc = net.arcs[static_cast<size_t>(a)];
        if (arc.cap <= 0) continue;
        double rc = arc.cost + pot[static_cast<size_t>(x)] -
                    pot[static_cast<size_t>(arc.to)];
        if (rc < 0) rc = 0;  // clamp float dust on residual reduced costs
        double nd = d + rc;
        size_t to = static_cast<size_t>(arc.to);
        if (nd < dist[to] ||
            (nd == dist[to] && arc.stored >= 0 &&
             arc.stored < parent_stored[to])) {
          dist[to] = nd;
          parent_arc[to] = a;
          parent_stored[to] = arc.stored < 0 ? std::numeric_limits<int>::max()
                                             : arc.stored;
          heap.emplace(nd, arc.to);
        }
      }
    }
    if (dist[static_cast<size_t>(net.sink)] == kInf) break;
    for (int i = 0; i < nn; ++i) {
      if (dist[static_cast<size_t>(i)] < kInf) {
        pot[static_cast<size_t>(i)] += dist[static_cast<size_t>(i)];
      }
    }
    for (int x = net.sink; x != net.source;) {
      int a = parent_arc[static_cast<size_t>(x)];
      net.arcs[static_cast<size_t>(a)].cap -= 1;
      net.arcs[static_cast<size_t>(a ^ 1)].cap += 1;
      x = net.arcs[static_cast<size_t>(a ^ 1)].to;
    }
    ++pushed;
  }

  MinCostKFlowResult res;
  res.attainable = pushed;
  if (pushed >= k) {
    res.paths = decompose_paths(net, k, &metric);
  }
  return res;
}

std::vector<EdgeId> min_cost_cut(const GraphView& view,
                                 const std::vector<double>& capacities, int u,
                                 int v) {
  check_pair(view, u, v);
  const Graph& g = view.graph();
  if (static_cast<int>(capacities.size()) != g.edge_count()) {
    throw std::invalid_argument("capacity length mismatch");
  }

  // Double-capacity Dinic; undirected edges use one arc pair with capacity
  // on both sides.
  struct DArc {
    int to;
    double cap;
    EdgeId stored;
  };
  std::vector<DArc> arcs;
  std::vector<std::vector<int>> out(static_cast<size_t>(g.vertex_count()));
  auto add = [&](int a, int b, double cf, double cb, EdgeId e) {
    out[static_cast<size_t>(a)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, cf, e});
    out[static_cast<size_t>(b)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, cb, e});
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (view.removed(e)) continue;
    const Graph::Edge& ed = g.edge(e);
    double c = capacities[static_cast<size_t>(e)];
    if (view.directed()) {
      add(ed.a, ed.b, c, 0.0, e);
    } else {
      add(ed.a, ed.b, c, c, e);
    }
  }

  constexpr double eps = 1e-11;
  std::vector<int> level(out.size());
  std::vector<size_t> iter(out.size());
  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[static_cast<size_t>(u)] = 0;
    q.push(u);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int a : out[static_cast<size_t>(x)]) {
        if (arcs[static_cast<size_t>(a)].cap <= eps) continue;
        int to = arcs[static_cast<size_t>(a)].to;
        if (level[static_cast<size_t>(to)] >= 0) continue;
        level[static_cast<size_t>(to)] = level[static_cast<size_t>(x)] + 1;
        q.push(to);
      }
    }
    return level[static_cast<size_t>(v)] >= 0;
  };
  std::function<double(int, double)> dfs = [&](int x, double limit) -> double {
    if (x == v) return limit;
    for (size_t& i = iter[static_cast<size_t>(x)];
         i < out[static_cast<size_t>(x)].size(); ++i) {
      int a = out[static_cast<size_t>(x)][i];
      DArc& arc = arcs[static_cast<size_t>(a)];
      if (arc.cap <= eps ||
          level[static_cast<size_t>(arc.to)] !=
              level[static_cast<size_t>(x)] + 1) {
        continue;
      }
      double pushed = dfs(arc.to, std::min(limit, arc.cap));
      if (pushed > eps) {
        arc.cap -= pushed;
        arcs[static_cast<size_t>(a ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0.0;
  };
  while (bfs()) {
    std::fill(iter.begin(), iter.end(), 0);
    while (dfs(u, kInf) > eps) {
    }
  }

  // source side of the residual graph
  std::vector<char> side(out.size(), 0);
  std::queue<int> q;
  side[static_cast<size_t>(u)] = 1;
  q.push(u);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int a : out[static_cast<size_t>(x)]) {
      if (arcs[static_cast<size_t>(a)].cap <= eps) continue;
      int to = arcs[static_cast<size_t>(a)].to;
      if (!side[static_cast<size_t>(to)]) {
        side[static_cast<size_t>(to)] = 1;
        q.push(to);
      }
    }
  }
  std::set<EdgeId> cut;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (view.removed(e)) continue;
    const Graph::Edge& ed = g.edge(e);
    bool sa = side[static_cast<size_t>(ed.a)] != 0;
    bool sb = side[static_cast<size_t>(ed.b)] != 0;
    if (view.directed()) {
      if (sa && !sb) cut.insert(e);
    } else if (sa != sb) {
      cut.insert(e);
    }
  }
  return std::vector<EdgeId>(cut.begin(), cut.end());
}

VerificationReport verify_cut(const Instance& inst,
                              const std::vector<int>& removed,
                              const std::vector<int>& effective_k) {
  if (effective_k.size() != inst.demands.size()) {
    throw std::invalid_argument("threshold list length mismatch");
  }
  std::vector<int> items(removed);
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  if (inst.removal == Removal::kVertex) {
    for (int w : items) {
      if (inst.is_terminal(w)) {
        throw std::invalid_argument("cut removes protected terminal " +
                                    std::to_string(w));
      }
    }
  }
  GraphView view = apply_removal(inst, items);
  VerificationReport report;
  report.total_cost = 0.0;
  for (int id : items) report.total_cost += inst.item_cost(id);
  report.feasible = true;
  for (size_t i = 0; i < inst.demands.size(); ++i) {
    const Demand& d = inst.demands[i];
    PairVerification pv;
    pv.demand = d;
    pv.effective_k = effective_k[i];
    pv.achieved =
        pair_connectivity(view, inst.semantics, inst.edge_origin, d.u, d.v);
    pv.satisfied = pv.achieved < pv.effective_k;
    report.feasible = report.feasible && pv.satisfied;
    report.pairs.push_back(pv);
  }
  return report;
}

VerificationReport verify_cut(const Instance& inst,
                              const std::vector<int>& removed) {
  std::vector<int> k;
  k.reserve(inst.demands.size());
  for (const Demand& d : inst.demands) k.push_back(d.k);
  return verify_cut(inst, removed, k);
}

}  // namespace mrc
