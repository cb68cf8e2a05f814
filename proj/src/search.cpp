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

#include "c4free/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "c4free/canonical.hpp"
#include "c4free/errors.hpp"

namespace c4free {
namespace {

constexpr double kStrictGain = 1e-12;

// Whether adding c-d (both existing, non-adjacent) to `g` keeps it C4-free.
bool AddKeepsC4Free(const Graph& g, Vertex c, Vertex d) {
  const uint64_t rc = g.row64(c);
  const uint64_t rd = g.row64(d);
  for (uint64_t bits = rd; bits != 0; bits &= bits - 1)
    if (rc & g.row64(std::countr_zero(bits))) return false;
  for (uint64_t bits = rc; bits != 0; bits &= bits - 1)
    if (rd & g.row64(std::countr_zero(bits))) return false;
  return true;
}

double Weight(std::span<const double> x, Vertex v) {
  return static_cast<size_t>(v) < x.size() ? x[v] : 0.0;
}

double Gain(const Move& mv, std::span<const double> x) {
  double s = 0;
  for (const Edge& e : mv.added) s += Weight(x, e.u) * Weight(x, e.v);
  for (const Edge& e : mv.removed) s -= Weight(x, e.u) * Weight(x, e.v);
  return s;
}

Vertex OtherNeighbor(const Graph& g, Vertex of, Vertex not_this) {
  for (Vertex w : g.neighbors(of))
    if (w != not_this) return w;
  return -1;
}

void RequireSearchable(const Graph& g) {
  if (g.order() > 63)
    throw std::invalid_argument("rewire search supports at most 63 vertices");
  if (has_c4(g)) throw PreconditionFailed("rewire search requires a C4-free graph");
}

}  // namespace

AppliedMove apply_move(const Graph& g, const Move& move) {
  const int n = g.order();
  bool fresh = false;
  for (const Edge& e : move.added) fresh |= (e.v == n);
  Graph h = fresh ? g.with_vertices(1) : g;
  for (const Edge& e : move.removed) h = h.without_edge(e.u, e.v);
  for (const Edge& e : move.added) h = h.with_edge(e.u, e.v);

  AppliedMove out;
  out.new_index.assign(n + 1, -1);
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > 0) {
      out.new_index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  }
  out.graph = induced_subgraph(h, keep);
  return out;
}

std::vector<Move> propose_moves(const Graph& g, std::span<const double> x) {
  RequireSearchable(g);
  const int n = g.order();
  if (x.size() != static_cast<size_t>(n))
    throw std::invalid_argument("eigenvector length does not match graph order");
  std::vector<Move> moves;
  if (g.size() == 0) return moves;

  const Vertex hub = static_cast<Vertex>(
      std::max_element(x.begin(), x.end()) - x.begin());

  for (const Edge& e : g.edges()) {
    const Graph rest = g.without_edge(e.u, e.v);
    const bool isolates = g.degree(e.u) == 1 || g.degree(e.v) == 1;
    const Vertex leaf = g.degree(e.v) == 1 ? e.v : (g.degree(e.u) == 1 ? e.u : -1);
    for (Vertex c = 0; c < n; ++c) {
      for (Vertex d = c + 1; d <= n; ++d) {
        const Edge f(c, d);
        if (f == e) continue;
        if (d == n) {
          // A removed pendant edge already frees a vertex; reusing it covers
          // the fresh-vertex variant.
          if (isolates) continue;
        } else if (rest.has_edge(c, d) || !AddKeepsC4Free(rest, c, d)) {
          continue;
        }
        Move mv;
        mv.kind = (leaf >= 0 && f == Edge(leaf, hub)) ? "leaf-to-hub" : "rewire";
        mv.removed = {e};
        mv.added = {f};
        moves.push_back(std::move(mv));
      }
    }
  }

  auto push_checked = [&](Move mv) {
    for (const Edge& a : mv.added)
      if (g.has_edge(a.u, a.v)) return;
    const AppliedMove applied = apply_move(g, mv);
    if (!has_c4(applied.graph)) moves.push_back(std::move(mv));
  };

  // Degree-2/degree-2 edge outside the hub's neighborhood: join both ends to
  // the hub instead of their other neighbors.
  for (const Edge& e : g.edges()) {
    const Vertex u = e.u, v = e.v;
    if (u == hub || v == hub || g.has_edge(u, hub) || g.has_edge(v, hub)) continue;
    if (g.degree(u) != 2 || g.degree(v) != 2) continue;
    const Vertex k = OtherNeighbor(g, u, v);
    const Vertex l = OtherNeighbor(g, v, u);
    Move mv;
    mv.kind = "isolated-edge";
    mv.removed = {Edge(u, k), Edge(v, l)};
    mv.added = {Edge(u, hub), Edge(v, hub)};
    push_checked(std::move(mv));
  }

  // Path u-v-w of degree-2 vertices outside the hub's neighborhood: drop the
  // attachments u-k, w-l and the edge u-v, join u, v, w to the hub.
  for (Vertex v = 0; v < n; ++v) {
    if (v == hub || g.degree(v) != 2 || g.has_edge(v, hub)) continue;
    const auto nb = g.neighbors(v);
    const Vertex u = nb[0], w = nb[1];
    for (const auto& [a, b] : {std::pair{u, w}, std::pair{w, u}}) {
      if (a == hub || b == hub || g.has_edge(a, hub) || g.has_edge(b, hub)) continue;
      if (g.degree(a) != 2 || g.degree(b) != 2) continue;
      const Vertex k = OtherNeighbor(g, a, v);
      const Vertex l = OtherNeighbor(g, b, v);
      Move mv;
      mv.kind = "path";
      mv.removed = {Edge(a, k), Edge(b, l), Edge(a, v)};
      mv.added = {Edge(a, hub), Edge(v, hub), Edge(b, hub)};
      push_checked(std::move(mv));
    }
  }

  for (Move& mv : moves) mv.predicted_gain = Gain(mv, x);
  std::stable_sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    return a.predicted_gain > b.predicted_gain;
  });
  return moves;
}

Graph random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_tree requires n >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, {Edge(0, 1)});
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int& c : code) c = pick(rng);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::vector<Edge> edges;
  for (int c : code) {
    for (int leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(leaf, c);
        --degree[leaf];
        --degree[c];
        break;
      }
    }
  }
  int a = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (a < 0) {
        a = v;
      } else {
        edges.emplace_back(a, v);
        break;
      }
    }
  }
  return Graph(n, edges);
}

Graph random_start(int m, std::mt19937_64& rng) {
  if (m < 1) throw std::invalid_argument("random_start requires m >= 1");
  const int lo = static_cast<int>(std::ceil((1 + std::sqrt(1.0 + 8.0 * m)) / 2));
  const int hi = m + 1;
  std::uniform_int_distribution<int> order(lo, hi);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Graph g = random_tree(order(rng), rng);
    while (g.size() < m) {
      std::vector<Edge> safe;
      for (Vertex c = 0; c < g.order(); ++c)
        for (Vertex d = c + 1; d < g.order(); ++d)
          if (!g.has_edge(c, d) && AddKeepsC4Free(g, c, d)) safe.emplace_back(c, d);
      if (safe.empty()) break;
      std::uniform_int_distribution<size_t> pick(0, safe.size() - 1);
      const Edge e = safe[pick(rng)];
      g = g.with_edge(e.u, e.v);
    }
    if (g.size() == m) return g;
  }
  return random_tree(m + 1, rng);
}

SearchState climb(const Graph& start, const SearchOptions& opts) {
  SearchState state;
  state.current = strip_isolated(start);
  RequireSearchable(state.current);
  if (state.current.order() == 0) return state;
  SpectralResult r = spectral_radius(state.current, opts.tol);
  state.mu = r.mu;
  std::vector<double> x = r.vec;

  for (int step = 0; step < opts.max_steps; ++step) {
    const std::vector<Move> moves = propose_moves(state.current, x);
    const Move* best_move = nullptr;
    AppliedMove best;
    SpectralResult best_r;
    std::string best_canon;
    for (const Move& mv : moves) {
      AppliedMove applied = apply_move(state.current, mv);
      std::vector<double> warm(applied.graph.order(), 0.0);
      for (Vertex v = 0; v < state.current.order(); ++v)
        if (applied.new_index[v] >= 0) warm[applied.new_index[v]] = x[v];
      SpectralResult rr =
          spectral_radius(applied.graph, opts.tol, warm, kMaxPowerIterations);
      if (rr.mu <= state.mu + kStrictGain) continue;
      if (best_move == nullptr || rr.mu > best_r.mu + kStrictGain) {
        best_move = &mv;
        best = std::move(applied);
        best_r = std::move(rr);
        best_canon.clear();
        continue;
      }
      if (std::abs(rr.mu - best_r.mu) <= kStrictGain) {
        if (best_canon.empty()) best_canon = canonical_form(best.graph);
        std::string canon = canonical_form(applied.graph);
        if (canon < best_canon) {
          best_move = &mv;
          best = std::move(applied);
          best_r = std::move(rr);
          best_canon = std::move(canon);
        }
      }
    }
    if (best_move == nullptr) break;
    state.moves.push_back(
        {best_move->removed, best_move->added, state.mu, best_r.mu});
    state.current = std::move(best.graph);
    state.mu = best_r.mu;
    x = std::move(best_r.vec);
  }
  return state;
}

SearchState hill_climb(int m, int restarts, uint64_t seed,
                       const SearchOptions& opts) {
  if (m < 1) throw std::invalid_argument("hill_climb requires m >= 1");
  if (m > 62) throw std::invalid_argument("hill_climb supports m <= 62");
  if (restarts < 1) throw std::invalid_argument("restarts must be at least 1");

  std::vector<SearchState> results(restarts);
  auto run = [&](int i) {
    std::seed_seq seq{static_cast<uint32_t>(seed),
                      static_cast<uint32_t>(seed >> 32),
                      static_cast<uint32_t>(i)};
    std::mt19937_64 rng(seq);
    SearchState s = climb(random_start(m, rng), opts);
    s.seed = seed;
    s.restart = i;
    results[i] = std::move(s);
  };

  const int workers = std::max(1, std::min(opts.workers, restarts));
  if (workers == 1) {
    for (int i = 0; i < restarts; ++i) run(i);
  } else {
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex mu;
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) {
      threads.emplace_back([&] {
        for (int i = next++; i < restarts; i = next++) {
          try {
            run(i);
          } catch (...) {
            std::lock_guard<std::mutex> lock(mu);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
  }

  size_t best = 0;
  for (size_t i = 1; i < results.size(); ++i)
    if (results[i].mu > results[best].mu + kStrictGain) best = i;
  return std::move(results[best]);
}

Lemma1Outcome lemma1_test(const Graph& g, const Graph& g_prime, Vertex u,
                          double tol) {
  if (g.order() != g_prime.order())
    throw PreconditionFailed("lemma1_test: graphs must share the vertex set");
  if (u < 0 || u >= g.order()) throw PreconditionFailed("lemma1_test: bad vertex");
  if (!is_connected(g))
    throw PreconditionFailed("lemma1_test: g must be connected (positive Perron vector)");
  bool subset = true;
  bool proper = false;
  auto a = g.row(u);
  auto b = g_prime.row(u);
  for (size_t w = 0; w < a.size(); ++w) {
    subset &= (a[w] & ~b[w]) == 0;
    proper |= a[w] != b[w];
  }
  if (!subset || !proper)
    throw PreconditionFailed(
        "lemma1_test: N_g(u) must be a proper subset of N_g'(u)");

  Lemma1Outcome out;
  const SpectralResult r = spectral_radius(g, tol);
  out.mu_before = r.mu;
  out.form_before = quadratic_form(g, r.vec);
  out.form_after = quadratic_form(g_prime, r.vec);
  out.condition = out.form_after >= out.form_before;
  if (out.condition) {
    out.mu_after = spectral_radius(g_prime, tol).mu;
    out.increased = out.mu_after > out.mu_before;
  }
  return out;
}

bool claim1_check(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw PreconditionFailed("claim1: uv must be an edge");
  if (g.degree(u) != 2 || g.degree(v) != 2)
    throw PreconditionFailed("claim1: requires d(u) = d(v) = 2");
  if (g.size() < 14) throw PreconditionFailed("claim1: requires m >= 14");
  if (has_c4(g)) throw PreconditionFailed("claim1: requires a C4-free graph");
  if (!is_connected(strip_isolated(g)))
    throw PreconditionFailed("claim1: requires a connected graph");
  const SpectralResult r = spectral_radius(g);
  if (r.mu * r.mu < 14) throw PreconditionFailed("claim1: requires mu^2 >= 14");
  return r.vec[u] * r.vec[v] < 1.0 / (4 * r.mu);
}

bool claim2_check(const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (u == w || !g.has_edge(u, v) || !g.has_edge(v, w))
    throw PreconditionFailed("claim2: requires edges uv and vw");
  if (g.degree(u) != 2 || g.degree(w) != 2 || g.degree(v) != 3)
    throw PreconditionFailed("claim2: requires d(u) = d(w) = 2 and d(v) = 3");
  if (g.size() < 20) throw PreconditionFailed("claim2: requires m >= 20");
  const SpectralResult r = spectral_radius(g);
  if (r.mu * r.mu < 20) throw PreconditionFailed("claim2: requires mu^2 >= 20");
  const double cap = 1.0 / (4 * r.mu);
  return r.vec[u] * r.vec[v] < cap || r.vec[w] * r.vec[v] < cap;
}

bool claim3_check(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw PreconditionFailed("claim3: uv must be an edge");
  const SpectralResult r = spectral_radius(g);
  if (r.vec[u] * r.vec[v] > 1.0 / (4 * r.mu))
    throw PreconditionFailed("claim3: requires x_u x_v <= 1/(4 mu)");
  const double reduced = spectral_radius(g.without_edge(u, v)).mu;
  return reduced * reduced > r.mu * r.mu - 1;
}

}  // namespace c4free
