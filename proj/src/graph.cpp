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

#include "mrc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

namespace mrc {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.resize(static_cast<size_t>(n));
  for (EdgeId e = 0; e < edge_count(); ++e) {
    const Edge& ed = edges_[static_cast<size_t>(e)];
    if (ed.a < 0 || ed.a >= n || ed.b < 0 || ed.b >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (ed.a == ed.b) throw std::invalid_argument("self-loop edge");
    adj_[static_cast<size_t>(ed.a)].emplace_back(ed.b, e);
    adj_[static_cast<size_t>(ed.b)].emplace_back(ed.a, e);
  }
}

double Instance::item_cost(int id) const {
  if (removal == Removal::kEdge) return edge_costs[static_cast<size_t>(id)];
  return vertex_costs[static_cast<size_t>(id)];
}

bool Instance::is_terminal(int v) const {
  for (const Demand& d : demands) {
    if (d.u == v || d.v == v) return true;
  }
  return false;
}

void Instance::validate() const {
  const int n = graph.vertex_count();
  const int m = graph.edge_count();
  if (removal == Removal::kEdge) {
    if (static_cast<int>(edge_costs.size()) != m) {
      throw std::invalid_argument("edge cost list length mismatch");
    }
  } else {
    if (static_cast<int>(vertex_costs.size()) != n) {
      throw std::invalid_argument("vertex cost list length mismatch");
    }
  }
  auto check_costs = [](const std::vector<double>& costs) {
    for (double c : costs) {
      if (!std::isfinite(c)) throw std::invalid_argument("non-finite cost");
      if (c < 0) throw std::invalid_argument("negative cost");
    }
  };
  check_costs(removal == Removal::kEdge ? edge_costs : vertex_costs);

  std::set<std::pair<int, int>> seen;
  for (const Demand& d : demands) {
    if (d.u < 0 || d.u >= n || d.v < 0 || d.v >= n) {
      throw std::invalid_argument("demand endpoint out of range");
    }
    if (d.u == d.v) throw std::invalid_argument("demand endpoints equal");
    if (d.k < 1) throw std::invalid_argument("demand threshold below 1");
    auto key = std::minmax(d.u, d.v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate demand pair");
    }
  }
  if (!edge_origin.empty() &&
      static_cast<int>(edge_origin.size()) != m) {
    throw std::invalid_argument("edge_origin length mismatch");
  }
}

GraphView::GraphView(const Graph& g, bool directed)
    : g_(&g), directed_(directed),
      mask_(static_cast<size_t>(g.edge_count()), 0) {}

GraphView::GraphView(const Graph& g, const std::vector<EdgeId>& removed,
                     bool directed)
    : GraphView(g, directed) {
  for (EdgeId e : removed) remove(e);
}

void GraphView::remove(EdgeId e) {
  if (e < 0 || e >= g_->edge_count()) {
    throw std::out_of_range("invalid edge id");
  }
  if (mask_[static_cast<size_t>(e)] == 0) {
    mask_[static_cast<size_t>(e)] = 1;
    ++removed_count_;
  }
}

void GraphView::restore(EdgeId e) {
  if (e < 0 || e >= g_->edge_count()) {
    throw std::out_of_range("invalid edge id");
  }
  if (mask_[static_cast<size_t>(e)] != 0) {
    mask_[static_cast<size_t>(e)] = 0;
    --removed_count_;
  }
}

GraphView remove_edges(const Graph& g, const std::vector<EdgeId>& removed) {
  return GraphView(g, removed);
}

GraphView apply_removal(const Instance& inst, const std::vector<int>& removed) {
  if (inst.removal == Removal::kEdge) {
    return GraphView(inst.graph, removed, inst.directed);
  }
  GraphView view(inst.graph, inst.directed);
  for (int w : removed) {
    if (w < 0 || w >= inst.graph.vertex_count()) {
      throw std::out_of_range("invalid vertex id");
    }
    for (const auto& [nb, e] : inst.graph.incident(w)) {
      (void)nb;
      view.remove(e);
    }
  }
  return view;
}

std::vector<int> VertexSplitMap::cut_to_vertices(
    const std::vector<EdgeId>& cut) const {
  std::vector<int> out;
  out.reserve(cut.size());
  for (EdgeId e : cut) {
    if (e < 0 || e >= static_cast<int>(edge_vertex.size()) ||
        edge_vertex[static_cast<size_t>(e)] < 0) {
      throw std::invalid_argument("cut contains a non-internal edge");
    }
    out.push_back(edge_vertex[static_cast<size_t>(e)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SplitResult vertex_split_transform(const Instance& inst) {
  if (inst.removal != Removal::kVertex) {
    throw std::invalid_argument("vertex_split_transform needs vertex removal");
  }
  const int n = inst.graph.vertex_count();
  const int m = inst.graph.edge_count();

  double cost_sum = 0;
  for (double c : inst.vertex_costs) cost_sum += c;
  const double large = 1.0 + cost_sum;

  SplitResult out;
  VertexSplitMap& map = out.map;
  map.original_n = n;
  map.internal_edge.resize(static_cast<size_t>(n));

  std::vector<Graph::Edge> edges;
  std::vector<double> costs;
  std::vector<int> origin;
  edges.reserve(static_cast<size_t>(n + 2 * m));

  // Internal arcs w_in -> w_out first, keeping edge id == vertex id.
  for (int w = 0; w < n; ++w) {
    map.internal_edge[static_cast<size_t>(w)] =
        static_cast<EdgeId>(edges.size());
    edges.push_back({map.in_node(w), map.out_node(w)});
    costs.push_back(inst.is_terminal(w) ? large
                                        : inst.vertex_costs[static_cast<size_t>(w)]);
    origin.push_back(w);
  }
  // Each original edge becomes two opposite traversal arcs. Both are
  // non-removable; a path enters a vertex gadget at its in-node and can only
  // continue through the internal arc.
  for (EdgeId e = 0; e < m; ++e) {
    const Graph::Edge& ed = inst.graph.edge(e);
    edges.push_back({map.out_node(ed.a), map.in_node(ed.b)});
    costs.push_back(large);
    origin.push_back(-1);
    edges.push_back({map.out_node(ed.b), map.in_node(ed.a)});
    costs.push_back(large);
    origin.push_back(-1);
  }

  Instance& t = out.instance;
  t.graph = Graph(2 * n, std::move(edges));
  t.removal = Removal::kEdge;
  t.semantics = inst.semantics;
  t.edge_costs = std::move(costs);
  t.directed = true;
  t.large_cost = large;
  t.edge_origin = origin;
  t.demands.reserve(inst.demands.size());
  for (const Demand& d : inst.demands) {
    t.demands.push_back({map.out_node(d.u), map.in_node(d.v), d.k});
  }
  map.edge_vertex = std::move(origin);
  t.validate();
  return out;
}

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " +
                         message),
      line(line_number) {}

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) {
        toks.push_back(cur);
        cur.clear();
      }
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) toks.push_back(cur);
  return toks;
}

int parse_int(const std::string& tok, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected integer, got '" + tok + "'");
  }
  return value;
}

double parse_cost(const std::string& tok, int line) {
  try {
    size_t pos = 0;
    double value = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("trailing");
    if (!std::isfinite(value)) throw ParseError(line, "non-finite cost");
    if (value < 0) throw ParseError(line, "negative cost");
    return value;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError(line, "expected cost, got '" + tok + "'");
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  int n = -1, m = -1, q = -1;
  bool have_variant = false;
  std::vector<Graph::Edge> edges;
  std::vector<double> edge_costs;
  std::vector<char> vertex_seen;
  int vertex_lines = 0;

  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;

    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      if (toks.size() != 5 || toks[1] != "mrc") {
        throw ParseError(line_no, "malformed problem line");
      }
      n = parse_int(toks[2], line_no);
      m = parse_int(toks[3], line_no);
      q = parse_int(toks[4], line_no);
      if (n < 0 || m < 0 || q < 0) throw ParseError(line_no, "negative count");
      vertex_seen.assign(static_cast<size_t>(n), 0);
      inst.vertex_costs.assign(static_cast<size_t>(n), 0.0);
      continue;
    }
    if (n < 0) throw ParseError(line_no, "content before problem line");

    if (toks[0] == "variant") {
      if (have_variant) throw ParseError(line_no, "duplicate variant line");
      if (toks.size() != 3) throw ParseError(line_no, "malformed variant line");
      if (toks[1] == "edge") {
        inst.removal = Removal::kEdge;
      } else if (toks[1] == "vertex") {
        inst.removal = Removal::kVertex;
      } else {
        throw ParseError(line_no, "unknown removal variant '" + toks[1] + "'");
      }
      if (toks[2] == "edge") {
        inst.semantics = Semantics::kEdgeDisjoint;
      } else if (toks[2] == "vertex") {
        inst.semantics = Semantics::kVertexDisjoint;
      } else {
        throw ParseError(line_no,
                         "unknown connectivity semantics '" + toks[2] + "'");
      }
      have_variant = true;
      continue;
    }
    if (!have_variant && (toks[0] == "e" || toks[0] == "v" || toks[0] == "q")) {
      throw ParseError(line_no, "content before variant line");
    }

    if (toks[0] == "e") {
      const bool with_cost = inst.removal == Removal::kEdge;
      if (toks.size() != (with_cost ? 4u : 3u)) {
        throw ParseError(line_no, "malformed edge line");
      }
      int a = parse_int(toks[1], line_no);
      int b = parse_int(toks[2], line_no);
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw ParseError(line_no, "edge endpoint out of range");
      }
      if (a == b) throw ParseError(line_no, "self-loop edge");
      edges.push_back({a, b});
      if (with_cost) edge_costs.push_back(parse_cost(toks[3], line_no));
      continue;
    }
    if (toks[0] == "v") {
      if (inst.removal != Removal::kVertex) {
        throw ParseError(line_no, "vertex cost line in edge-removal instance");
      }
      if (toks.size() != 3) throw ParseError(line_no, "malformed vertex line");
      int id = parse_int(toks[1], line_no);
      if (id < 0 || id >= n) {
        throw ParseError(line_no, "vertex id out of range");
      }
      if (vertex_seen[static_cast<size_t>(id)]) {
        throw ParseError(line_no, "duplicate vertex cost line");
      }
      vertex_seen[static_cast<size_t>(id)] = 1;
      inst.vertex_costs[static_cast<size_t>(id)] = parse_cost(toks[2], line_no);
      ++vertex_lines;
      continue;
    }
    if (toks[0] == "q") {
      if (toks.size() != 4) throw ParseError(line_no, "malformed demand line");
      int u = parse_int(toks[1], line_no);
      int v = parse_int(toks[2], line_no);
      int k = parse_int(toks[3], line_no);
      if (u < 0 || u >= n || v < 0 || v >= n) {
        throw ParseError(line_no, "demand endpoint out of range");
      }
      if (u == v) throw ParseError(line_no, "demand endpoints equal");
      if (k < 1) throw ParseError(line_no, "demand threshold below 1");
      for (const Demand& d : inst.demands) {
        if (std::minmax(d.u, d.v) == std::minmax(u, v)) {
          throw ParseError(line_no, "duplicate demand pair");
        }
      }
      inst.demands.push_back({u, v, k});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + toks[0] + "'");
  }

  if (n < 0) throw ParseError(line_no, "missing problem line");
  if (!have_variant) throw ParseError(line_no, "missing variant line");
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(line_no, "edge count mismatch with problem line");
  }
  if (static_cast<int>(inst.demands.size()) != q) {
    throw ParseError(line_no, "demand count mismatch with problem line");
  }
  if (inst.removal == Removal::kVertex && vertex_lines != n) {
    throw ParseError(line_no, "vertex cost count mismatch with problem line");
  }
  if (inst.removal == Removal::kEdge) inst.vertex_costs.clear();

  inst.graph = Graph(n, std::move(edges));
  inst.edge_costs = std::move(edge_costs);
  inst.validate();
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const int n = inst.graph.vertex_count();
  const int m = inst.graph.edge_count();
  out << "p mrc " << n << ' ' << m << ' ' << inst.demands.size() << '\n';
  out << "variant " << (inst.removal == Removal::kEdge ? "edge" : "vertex")
      << ' '
      << (inst.semantics == Semantics::kEdgeDisjoint ? "edge" : "vertex")
      << '\n';
  if (inst.removal == Removal::kVertex) {
    for (int w = 0; w < n; ++w) {
      out << "v " << w << ' '
          << format_double(inst.vertex_costs[static_cast<size_t>(w)]) << '\n';
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    const Graph::Edge& ed = inst.graph.edge(e);
    out << "e " << ed.a << ' ' << ed.b;
    if (inst.removal == Removal::kEdge) {
      out << ' ' << format_double(inst.edge_costs[static_cast<size_t>(e)]);
    }
    out << '\n';
  }
  for (const Demand& d : inst.demands) {
    out << "q " << d.u << ' ' << d.v << ' ' << d.k << '\n';
  }
  return out.str();
}

bool semantically_equal(const Instance& a, const Instance& b) {
  if (a.graph.vertex_count() != b.graph.vertex_count()) return false;
  if (a.graph.edge_count() != b.graph.edge_count()) return false;
  for (EdgeId e = 0; e < a.graph.edge_count(); ++e) {
    if (a.graph.edge(e).a != b.graph.edge(e).a ||
        a.graph.edge(e).b != b.graph.edge(e).b) {
      return false;
    }
  }
  if (a.removal != b.removal || a.semantics != b.semantics) return false;
  if (a.edge_costs != b.edge_costs || a.vertex_costs != b.vertex_costs) {
    return false;
  }
  if (a.demands.size() != b.demands.size()) return false;
  for (size_t i = 0; i < a.demands.size(); ++i) {
    if (a.demands[i].u != b.demands[i].u || a.demands[i].v != b.demands[i].v ||
        a.demands[i].k != b.demands[i].k) {
      return false;
    }
  }
  return true;
}

bool integral_costs(const Instance& inst) {
  const std::vector<double>& costs =
      inst.removal == Removal::kEdge ? inst.edge_costs : inst.vertex_costs;
  for (double c : costs) {
    if (c != std::floor(c)) return false;
  }
  return true;
}

int effective_threshold(int k, double beta) {
  return static_cast<int>(std::ceil(beta * k - 1e-9));
}

std::string instance_digest(const Instance& inst) {
  std::string text = serialize_instance(inst);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* hex = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = hex[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

}  // namespace mrc
