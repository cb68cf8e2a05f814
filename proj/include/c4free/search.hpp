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

#ifndef C4FREE_SEARCH_HPP_
#define C4FREE_SEARCH_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "c4free/graph.hpp"
#include "c4free/spectral.hpp"

namespace c4free {

// An edge-count preserving rewire. Endpoints equal to the current order
// denote a fresh vertex appended by the move.
struct Move {
  std::string kind;  // "rewire", "leaf-to-hub", "isolated-edge", "path"
  std::vector<Edge> removed;
  std::vector<Edge> added;
  // sum of x_i x_j over added edges minus the same over removed edges.
  double predicted_gain = 0.0;
};

struct MoveRecord {
  std::vector<Edge> removed;
  std::vector<Edge> added;
  double mu_before = 0.0;
  double mu_after = 0.0;
};

struct SearchState {
  Graph current;
  double mu = 0.0;
  uint64_t seed = 0;
  int restart = 0;
  std::vector<MoveRecord> moves;
};

struct SearchOptions {
  double tol = kDefaultTolerance;
  int workers = 1;
  int max_steps = 10'000;
};

// Result of applying a move: the new graph with isolated vertices removed,
// and where each old vertex (and the fresh vertex, at index order()) went.
struct AppliedMove {
  Graph graph;
  std::vector<int> new_index;  // -1 for dropped vertices
};
AppliedMove apply_move(const Graph& g, const Move& move);

// Candidate rewires of a C4-free graph, each keeping m and C4-freeness,
// sorted by predicted gain (largest first, generation order on ties):
//  - every single-edge rewire, including onto a fresh pendant vertex;
//  - moving both ends of a degree-2/degree-2 edge away from the hub's
//    non-neighborhood onto the hub (x-maximal vertex);
//  - moving a three-vertex path hanging off other vertices onto the hub.
std::vector<Move> propose_moves(const Graph& g, std::span<const double> x);

// Uniform random tree on n vertices (Pruefer code), n >= 1.
Graph random_tree(int n, std::mt19937_64& rng);
// Random C4-free graph with m edges and no isolated vertices: a random tree
// on a random order, then random C4-safe edges.
Graph random_start(int m, std::mt19937_64& rng);

// Best strictly improving move, by recomputed mu, until none exists.
SearchState climb(const Graph& start, const SearchOptions& opts = {});

// Best state over `restarts` independent climbs from random starts. Restart
// i draws from an RNG seeded with (seed, i). Deterministic for a seed.
SearchState hill_climb(int m, int restarts, uint64_t seed,
                       const SearchOptions& opts = {});

struct Lemma1Outcome {
  // <A'x, x> >= <A x, x> for the Perron vector x of g.
  bool condition = false;
  double form_before = 0.0;
  double form_after = 0.0;
  double mu_before = 0.0;
  double mu_after = 0.0;
  // Only computed when `condition` holds.
  bool increased = false;
};

// Requires equal orders, g connected, and N_g(u) a proper subset of
// N_{g'}(u); throws PreconditionFailed otherwise.
Lemma1Outcome lemma1_test(const Graph& g, const Graph& g_prime, Vertex u,
                          double tol = kDefaultTolerance);

// x_u x_v < 1/(4 mu) for an edge uv with d(u) = d(v) = 2 in a connected
// C4-free graph with m >= 14 and mu^2 >= 14.
bool claim1_check(const Graph& g, Vertex u, Vertex v);
// For uv, vw in E with d(u) = d(w) = 2, d(v) = 3, m >= 20, mu^2 >= 20:
// x_u x_v < 1/(4 mu) or x_w x_v < 1/(4 mu).
bool claim2_check(const Graph& g, Vertex u, Vertex v, Vertex w);
// For uv in E with x_u x_v <= 1/(4 mu): mu(G - uv)^2 > mu^2 - 1.
bool claim3_check(const Graph& g, Vertex u, Vertex v);

}  // namespace c4free

#endif  // C4FREE_SEARCH_HPP_
