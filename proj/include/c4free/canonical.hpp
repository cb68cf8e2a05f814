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

#ifndef C4FREE_CANONICAL_HPP_
#define C4FREE_CANONICAL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "c4free/graph.hpp"

namespace c4free {

inline constexpr int kMaxCanonicalOrder = 64;

// Result of individualization-refinement canonical labeling.
struct CanonicalLabeling {
  // order[i] is the vertex placed at canonical position i.
  std::vector<Vertex> order;
  // Automorphisms found during the search; they generate the full
  // automorphism group. generators[j][v] is the image of v.
  std::vector<std::vector<Vertex>> generators;
  // Row i holds the canonical positions adjacent to position i.
  std::vector<uint64_t> certificate;
  // Search tree nodes visited.
  long nodes = 0;
};

// Canonical labeling of a graph with at most 64 vertices, given as
// single-word adjacency rows. The search refines an ordered partition to an
// equitable one, individualizes vertices of the first non-singleton cell,
// keeps the lexicographically largest leaf certificate, and prunes siblings
// with the orbits of automorphisms discovered so far.
CanonicalLabeling canonical_labeling(int n, std::span<const uint64_t> rows);
CanonicalLabeling canonical_labeling(const Graph& g);

// The canonically relabeled graph (isomorphic inputs give equal outputs).
Graph canonical_graph(const Graph& g);
// graph6 encoding of canonical_graph(g). Identical exactly for isomorphic
// graphs.
std::string canonical_form(const Graph& g);

// Orbit representative (smallest member) of every vertex under the group
// generated by `generators`.
std::vector<Vertex> vertex_orbits(int n,
                                  std::span<const std::vector<Vertex>> generators);

// All edges in the orbit of `e` under the group generated by `generators`.
std::vector<Edge> edge_orbit(Edge e,
                             std::span<const std::vector<Vertex>> generators);

}  // namespace c4free

#endif  // C4FREE_CANONICAL_HPP_
