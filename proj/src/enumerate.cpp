// Copyright 2026 The c4free Authors
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

#include "c4free/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <tuple>

#include "c4free/canonical.hpp"
#include "c4free/errors.hpp"

namespace c4free {
namespace {

using detail::Node;

uint64_t Bit(int v) { return uint64_t{1} << v; }

// Adding a-b raises the codegree of (a, c) for c in N(b) and of (b, c) for c
// in N(a) by one; all other pairs are unchanged.
bool EdgeKeepsCodegree(const Node& g, int a, int b, int limit) {
  for (uint64_t bits = g.rows[b]; bits != 0; bits &= bits - 1) {
    const int c = std::countr_zero(bits);
    if (std::popcount(g.rows[a] & g.rows[c]) + 1 > limit) return false;
  }
  for (uint64_t bits = g.rows[a]; bits != 0; bits &= bits - 1) {
    const int c = std::countr_zero(bits);
    if (std::popcount(g.rows[b] & g.rows[c]) + 1 > limit) return false;
  }
  return true;
}

// Canonical-deletion test. Among the edges whose endpoint degree sum is
// smallest, the deletion edge is the one whose canonical positions (high,
// low) are lexicographically largest; the child is accepted iff the added
// edge lies in its automorphism orbit.
bool AcceptChild(Node& child, Edge added) {
  std::array<int, 64> deg{};
  for (int v = 0; v < child.n; ++v) deg[v] = std::popcount(child.rows[v]);
  int best = 1 << 20;
  for (int u = 0; u < child.n; ++u)
    for (uint64_t bits = child.rows[u] & ~((Bit(u) << 1) - 1); bits != 0;
         bits &= bits - 1)
      best = std::min(best, deg[u] + deg[std::countr_zero(bits)]);
  if (deg[added.u] + deg[added.v] != best) return false;

  CanonicalLabeling lab = canonical_labeling(
      child.n, std::span<const uint64_t>(child.rows.data(), child.n));
  std::array<int, 64> pos{};
  for (int i = 0; i < child.n; ++i) pos[lab.order[i]] = i;

  Edge deletion;
  std::pair<int, int> key{-1, -1};
  for (int u = 0; u < child.n; ++u) {
    for (uint64_t bits = child.rows[u] & ~((Bit(u) << 1) - 1); bits != 0;
         bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      if (deg[u] + deg[v] != best) continue;
      const std::pair<int, int> k{std::max(pos[u], pos[v]),
                                  std::min(pos[u], pos[v])};
      if (k > key) {
        key = k;
        deletion = Edge(u, v);
      }
    }
  }
  bool accept = deletion == added;
  if (!accept && !lab.generators.empty()) {
    const auto orbit = edge_orbit(deletion, lab.generators);
    accept = std::find(orbit.begin(), orbit.end(), added) != orbit.end();
  }
  if (accept) child.generators = std::move(lab.generators);
  return accept;
}

template <typename Visit>
void ForEachChild(const Node& parent, int max_codegree, int max_order,
                  Visit&& visit) {
  const int n = parent.n;
  auto try_edge = [&](int a, int b, int new_n) {
    if (new_n > max_order) return;
    Node child;
    child.n = new_n;
    child.m = parent.m + 1;
    child.rows = parent.rows;
    if (!EdgeKeepsCodegree(child, a, b, max_codegree)) return;
    child.rows[a] |= Bit(b);
    child.rows[b] |= Bit(a);
    if (AcceptChild(child, Edge(a, b))) visit(std::move(child));
  };

  // Existing vertex pairs, one per orbit of Aut(parent).
  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if ((parent.rows[a] >> b) & 1) continue;
      if (seen[a * n + b]) continue;
      for (const Edge& e : edge_orbit(Edge(a, b), parent.generators))
        seen[e.u * n + e.v] = 1;
      try_edge(a, b, n);
    }
  }
  // One existing vertex joined to a new vertex.
  const auto reps = vertex_orbits(n, parent.generators);
  for (int a = 0; a < n; ++a)
    if (reps[a] == a) try_edge(a, n, n + 1);
  // A disjoint new edge.
  try_edge(n, n + 1, n + 2);
}

Graph ToGraph(const Node& node, int order) {
  std::vector<Edge> edges;
  edges.reserve(node.m);
  for (int u = 0; u < node.n; ++u)
    for (uint64_t bits = node.rows[u] & ~((Bit(u) << 1) - 1); bits != 0;
         bits &= bits - 1)
      edges.emplace_back(u, std::countr_zero(bits));
  return Graph(order, edges);
}

Node FromGraph(const Graph& g) {
  if (g.order() > 64)
    throw std::invalid_argument("enumeration supports at most 64 vertices");
  Node node;
  node.n = g.order();
  node.m = g.size();
  for (int v = 0; v < g.order(); ++v) node.rows[v] = g.row64(v);
  node.generators = canonical_labeling(g).generators;
  return node;
}

int MaxOrder(const EnumSpec& spec) {
  return spec.mode == EnumSpec::Mode::kByOrder ? spec.value
                                               : std::min(64, 2 * spec.value);
}

bool IsTarget(const EnumSpec& spec, const Node& node) {
  return spec.mode == EnumSpec::Mode::kByOrder || node.m == spec.value;
}

Graph Emitted(const EnumSpec& spec, const Node& node) {
  return ToGraph(node, spec.mode == EnumSpec::Mode::kByOrder ? spec.value
                                                             : node.n);
}

// Depth-first generation below `node` (inclusive), emitting targets.
void Descend(const EnumSpec& spec, const Node& node, const GraphSink& emit) {
  if (IsTarget(spec, node)) emit(Emitted(spec, node));
  if (spec.mode == EnumSpec::Mode::kByEdges && node.m >= spec.value) return;
  ForEachChild(node, spec.max_codegree, MaxOrder(spec),
               [&](Node&& child) { Descend(spec, child, emit); });
}

void PlanFrom(const EnumSpec& spec, Node node, int split,
              std::vector<detail::WorkItem>& items) {
  if (node.m == split) {
    items.push_back({std::move(node), true});
    return;
  }
  const bool target = IsTarget(spec, node);
  if (target) items.push_back({node, false});
  if (spec.mode == EnumSpec::Mode::kByEdges && node.m >= spec.value) return;
  ForEachChild(node, spec.max_codegree, MaxOrder(spec), [&](Node&& child) {
    PlanFrom(spec, std::move(child), split, items);
  });
}

}  // namespace

void EnumSpec::validate() const {
  if (max_codegree < 1)
    throw std::invalid_argument("max_codegree must be at least 1");
  if (workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (split_depth < 0) throw std::invalid_argument("split_depth must be >= 0");
  if (mode == Mode::kByEdges) {
    if (value < 1) throw std::invalid_argument("edge count must be at least 1");
    if (value > edge_cap)
      throw CapExceeded("m=" + std::to_string(value) +
                        " exceeds the enumeration edge cap " +
                        std::to_string(edge_cap) +
                        "; raise it with --max-edges");
    if (value > 32)
      throw CapExceeded("m=" + std::to_string(value) +
                        " needs more than 64 vertices; enumeration is limited "
                        "to 64-vertex graphs");
  } else {
    if (value < 1) throw std::invalid_argument("order must be at least 1");
    if (value > order_cap)
      throw CapExceeded("n=" + std::to_string(value) +
                        " exceeds the enumeration order cap " +
                        std::to_string(order_cap) +
                        "; raise it with --max-order");
    if (value > 64)
      throw CapExceeded("enumeration is limited to 64-vertex graphs");
  }
}

std::vector<Graph> extend_and_prune(const Graph& parent, int max_codegree,
                                    int max_order) {
  for (Vertex v = 0; v < parent.order(); ++v)
    if (parent.degree(v) == 0)
      throw std::invalid_argument("extend_and_prune: parent has isolated vertices");
  if (max_common_neighbors(parent) > max_codegree)
    throw std::invalid_argument("extend_and_prune: parent violates the codegree limit");
  const Node node = FromGraph(parent);
  std::vector<Graph> out;
  ForEachChild(node, max_codegree, std::min(max_order, 64),
               [&](Node&& child) { out.push_back(ToGraph(child, child.n)); });
  return out;
}

namespace detail {

std::vector<WorkItem> plan(const EnumSpec& spec) {
  spec.validate();
  std::vector<WorkItem> items;
  PlanFrom(spec, Node{}, spec.split_depth, items);
  return items;
}

void run_item(const EnumSpec& spec, const WorkItem& item, const GraphSink& emit) {
  if (item.subtree) {
    Descend(spec, item.node, emit);
  } else {
    emit(Emitted(spec, item.node));
  }
}

}  // namespace detail

void enumerate(const EnumSpec& spec, const GraphSink& sink) {
  enumerate_map<Graph>(
      spec, [](const Graph& g) { return g; },
      [&](Graph&& g) { sink(g); });
}

void enumerate_c4free_by_edges(int m, const GraphSink& sink, int workers) {
  EnumSpec spec;
  spec.mode = EnumSpec::Mode::kByEdges;
  spec.value = m;
  spec.workers = workers;
  enumerate(spec, sink);
}

void enumerate_c4free_by_order(int n, const GraphSink& sink, int workers) {
  EnumSpec spec;
  spec.mode = EnumSpec::Mode::kByOrder;
  spec.value = n;
  spec.workers = workers;
  enumerate(spec, sink);
}

}  // namespace c4free
