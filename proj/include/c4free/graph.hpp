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

#ifndef C4FREE_GRAPH_HPP_
#define C4FREE_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace c4free {

using Vertex = int;

// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable undirected simple graph stored as adjacency bitrows. Rows use
// ceil(n/64) words, so graphs up to 64 vertices have single-word rows (the
// form the enumeration and canonical labeling paths rely on), while direct
// constructors may build arbitrarily large graphs.
//
// All mutators return a new value.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices.
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return n_; }
  int size() const { return m_; }
  int words_per_row() const { return words_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex u) const;
  std::span<const uint64_t> row(Vertex u) const {
    return {bits_.data() + static_cast<size_t>(u) * words_,
            static_cast<size_t>(words_)};
  }
  // Single-word row; requires order() <= 64.
  uint64_t row64(Vertex u) const { return words_ == 0 ? 0 : bits_[u]; }

  std::vector<Vertex> neighbors(Vertex u) const;
  // Edges in increasing (u, v) order.
  std::vector<Edge> edges() const;

  // Throw std::invalid_argument if the edge already exists / is absent, or
  // on a self-loop or out-of-range endpoint.
  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;
  // Appends `count` isolated vertices.
  Graph with_vertices(int count) const;

  // Verifies symmetry, loop-freeness and the cached edge count.
  bool check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void set_bit(Vertex u, Vertex v);
  void clear_bit(Vertex u, Vertex v);
  void check_vertex(Vertex u) const;

  int n_ = 0;
  int words_ = 0;
  int m_ = 0;
  std::vector<uint64_t> bits_;
};

// Star-plus-matching parameters: n vertices, k disjoint edges among the
// leaves of the star.
struct SnkParams {
  int n = 1;
  int k = 0;

  // Throws std::invalid_argument unless n >= 1 and 0 <= k <= (n-1)/2.
  void validate() const;
  friend bool operator==(const SnkParams&, const SnkParams&) = default;
};

Graph make_star(int n);
// Vertex 0 is the hub; matching edges are {1,2}, {3,4}, ..., {2k-1,2k}.
Graph make_snk(SnkParams p);
// k triangles sharing vertex 0.
Graph make_friendship(int k);
Graph make_complete(int n);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_complete_bipartite(int a, int b);
// Vertex-disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
// Relabels vertex v as perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);

int common_neighbors(const Graph& g, Vertex u, Vertex v);
// Largest common-neighbor count over all vertex pairs (0 when n < 2).
int max_common_neighbors(const Graph& g);
bool has_c4(const Graph& g);
// True iff some pair of vertices has at least k+1 common neighbors.
bool has_k2kp1(const Graph& g, int k);
// Every pair of distinct vertices has exactly `k` common neighbors.
bool has_uniform_codegree(const Graph& g, int k);
bool is_friendship_condition(const Graph& g);

Graph add_edge(const Graph& g, Vertex u, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);
int degree(const Graph& g, Vertex u);
// Removes degree-0 vertices, keeping the relative order of the others.
Graph strip_isolated(const Graph& g);
// Connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g);
bool is_connected(const Graph& g);
// Induced subgraph on `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Structural recognizers used to confirm equality cases. Isolated vertices
// are ignored.
struct StarWitness {
  Vertex hub = 0;
};
std::optional<StarWitness> match_star(const Graph& g);

struct SnkWitness {
  SnkParams params;
  Vertex hub = 0;
  std::vector<Edge> matching;
};
// Recognizes S_{n,k}: one vertex adjacent to every other vertex, and the
// remaining edges form a matching among the leaves. For K_3 (which is both
// S_{3,1} and a triangle) the lowest-numbered dominating vertex is the hub.
std::optional<SnkWitness> match_snk(const Graph& g);

}  // namespace c4free

#endif  // C4FREE_GRAPH_HPP_
