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

#include "c4free/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace c4free {
namespace {

int WordsFor(int n) { return (n + 63) / 64; }

int PopcountAnd(std::span<const uint64_t> a, std::span<const uint64_t> b) {
  int c = 0;
  for (size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

}  // namespace

Graph::Graph(int n) : n_(n), words_(WordsFor(n)), m_(0) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw std::invalid_argument("self-loop");
    if (has_edge(e.u, e.v)) {
      throw std::invalid_argument("duplicate edge " + std::to_string(e.u) +
                                  "-" + std::to_string(e.v));
    }
    set_bit(e.u, e.v);
    set_bit(e.v, e.u);
    ++m_;
  }
}

void Graph::check_vertex(Vertex u) const {
  if (u < 0 || u >= n_) {
    throw std::invalid_argument("vertex " + std::to_string(u) +
                                " out of range for order " +
                                std::to_string(n_));
  }
}

void Graph::set_bit(Vertex u, Vertex v) {
  bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
}

void Graph::clear_bit(Vertex u, Vertex v) {
  bits_[static_cast<size_t>(u) * words_ + v / 64] &=
      ~(uint64_t{1} << (v % 64));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1;
}

int Graph::degree(Vertex u) const {
  check_vertex(u);
  int d = 0;
  for (uint64_t w : row(u)) d += std::popcount(w);
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  std::vector<Vertex> out;
  auto r = row(u);
  for (int w = 0; w < words_; ++w) {
    for (uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
      out.push_back(w * 64 + std::countr_zero(bits));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop");
  if (has_edge(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " already present");
  }
  Graph g = *this;
  g.set_bit(u, v);
  g.set_bit(v, u);
  ++g.m_;
  return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v || !has_edge(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + "-" +
                                std::to_string(v) + " absent");
  }
  Graph g = *this;
  g.clear_bit(u, v);
  g.clear_bit(v, u);
  --g.m_;
  return g;
}

Graph Graph::with_vertices(int count) const {
  if (count < 0) throw std::invalid_argument("negative vertex count");
  Graph g(n_ + count);
  for (const Edge& e : edges()) {
    g.set_bit(e.u, e.v);
    g.set_bit(e.v, e.u);
  }
  g.m_ = m_;
  return g;
}

bool Graph::check_invariants() const {
  if (words_ != WordsFor(n_)) return false;
  if (bits_.size() != static_cast<size_t>(n_) * words_) return false;
  long total = 0;
  for (Vertex u = 0; u < n_; ++u) {
    auto r = row(u);
    for (int w = 0; w < words_; ++w) {
      total += std::popcount(r[w]);
      for (uint64_t bits = r[w]; bits != 0; bits &= bits - 1) {
        const Vertex v = w * 64 + std::countr_zero(bits);
        if (v >= n_ || v == u) return false;
        if (!((bits_[static_cast<size_t>(v) * words_ + u / 64] >> (u % 64)) &
              1)) {
          return false;
        }
      }
    }
  }
  return total == 2L * m_;
}

void SnkParams::validate() const {
  if (n < 1) throw std::invalid_argument("S_{n,k} requires n >= 1");
  if (k < 0 || k > (n - 1) / 2) {
    throw std::invalid_argument("S_{n,k} requires 0 <= k <= floor((n-1)/2), got n=" +
                                std::to_string(n) + " k=" + std::to_string(k));
  }
}

Graph make_star(int n) {
  if (n < 1) throw std::invalid_argument("star requires n >= 1");
  return make_snk({n, 0});
}

Graph make_snk(SnkParams p) {
  p.validate();
  std::vector<Edge> edges;
  edges.reserve(p.n - 1 + p.k);
  for (Vertex v = 1; v < p.n; ++v) edges.emplace_back(0, v);
  for (int i = 0; i < p.k; ++i) edges.emplace_back(2 * i + 1, 2 * i + 2);
  return Graph(p.n, edges);
}

Graph make_friendship(int k) {
  if (k < 1) throw std::invalid_argument("friendship graph requires k >= 1");
  return make_snk({2 * k + 1, k});
}

Graph make_complete(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, edges);
}

Graph make_path(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

Graph make_complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges())
    edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (perm.size() != static_cast<size_t>(g.order()))
    throw std::invalid_argument("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.order(), edges);
}

int common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("common_neighbors requires u != v");
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
    throw std::invalid_argument("vertex out of range");
  return PopcountAnd(g.row(u), g.row(v));
}

int max_common_neighbors(const Graph& g) {
  int best = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      best = std::max(best, PopcountAnd(g.row(u), g.row(v)));
  return best;
}

bool has_k2kp1(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("has_k2kp1 requires k >= 1");
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (PopcountAnd(g.row(u), g.row(v)) >= k + 1) return true;
  return false;
}

bool has_c4(const Graph& g) { return has_k2kp1(g, 1); }

bool has_uniform_codegree(const Graph& g, int k) {
  if (g.order() < 2) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (PopcountAnd(g.row(u), g.row(v)) != k) return false;
  return true;
}

bool is_friendship_condition(const Graph& g) {
  return g.order() >= 3 && has_uniform_codegree(g, 1);
}

Graph add_edge(const Graph& g, Vertex u, Vertex v) { return g.with_edge(u, v); }
Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  return g.without_edge(u, v);
}
int degree(const Graph& g, Vertex u) { return g.degree(u); }

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(g.order(), -1);
  for (size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0)
      edges.emplace_back(index[e.u], index[e.v]);
  }
  return Graph(static_cast<int>(vertices.size()), edges);
}

Graph strip_isolated(const Graph& g) {
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) > 0) keep.push_back(u);
  if (keep.size() == static_cast<size_t>(g.order())) return g;
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::optional<StarWitness> match_star(const Graph& g) {
  auto s = match_snk(g);
  if (!s || s->params.k != 0) return std::nullopt;
  return StarWitness{s->hub};
}

std::optional<SnkWitness> match_snk(const Graph& g) {
  std::vector<Vertex> live;
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) > 0) live.push_back(u);
  if (live.empty()) return std::nullopt;
  const int n = static_cast<int>(live.size());
  for (Vertex h : live) {
    if (g.degree(h) != n - 1) continue;
    std::vector<Edge> matching;
    bool ok = true;
    for (Vertex v : live) {
      if (v == h) continue;
      const int inner = g.degree(v) - 1;
      if (inner > 1) {
        ok = false;
        break;
      }
      if (inner == 1) {
        for (Vertex w : g.neighbors(v))
          if (w != h && v < w) matching.emplace_back(v, w);
      }
    }
    if (!ok) continue;
    SnkWitness w;
    w.params = {n, static_cast<int>(matching.size())};
    w.hub = h;
    w.matching = std::move(matching);
    return w;
  }
  return std::nullopt;
}

}  // namespace c4free
