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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "c4free/errors.hpp"
#include "c4free/graph6.hpp"
#include "c4free/spectral.hpp"
#include "test_util.hpp"

namespace c4free {
namespace {

TEST(MoveTest, ApplyRewireWithFreshVertex) {
  // Path 0-1-2-3: move edge {2,3} onto a fresh pendant of 1.
  Move mv{"rewire", {Edge(2, 3)}, {Edge(1, 4)}, 0.0};
  AppliedMove a = apply_move(make_path(4), mv);
  EXPECT_EQ(a.graph.size(), 3);
  EXPECT_EQ(a.graph.order(), 4);  // vertex 3 became isolated and was dropped
  EXPECT_EQ(a.new_index[3], -1);
  EXPECT_EQ(a.graph.degree(a.new_index[1]), 3);
}

TEST(MoveTest, ProposalsKeepSizeAndC4Freeness) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_start(6 + i % 10, rng);
    auto r = spectral_radius(g);
    for (const Move& mv : propose_moves(g, r.vec)) {
      Graph h = apply_move(g, mv).graph;
      ASSERT_EQ(h.size(), g.size());
      ASSERT_FALSE(has_c4(h));
      for (int v = 0; v < h.order(); ++v) ASSERT_GT(h.degree(v), 0);
    }
  }
}

TEST(MoveTest, ProposalsSortedByPredictedGain) {
  std::mt19937_64 rng(2);
  Graph g = random_start(12, rng);
  auto moves = propose_moves(g, spectral_radius(g).vec);
  ASSERT_FALSE(moves.empty());
  for (size_t i = 1; i < moves.size(); ++i)
    EXPECT_GE(moves[i - 1].predicted_gain, moves[i].predicted_gain);
}

TEST(MoveTest, RejectsGraphsWithFourCycles) {
  Graph c4 = make_cycle(4);
  EXPECT_THROW(propose_moves(c4, spectral_radius(c4).vec), PreconditionFailed);
}

TEST(RandomStartTest, TreesAndStarts) {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 30; ++n) {
    Graph t = random_tree(n, rng);
    EXPECT_EQ(t.size(), n - 1);
    EXPECT_TRUE(is_connected(t));
  }
  for (int m = 1; m <= 30; ++m) {
    Graph g = random_start(m, rng);
    EXPECT_EQ(g.size(), m);
    EXPECT_FALSE(has_c4(g));
    for (int v = 0; v < g.order(); ++v) EXPECT_GT(g.degree(v), 0);
  }
}

TEST(ClimbTest, EveryStepIncreasesMu) {
  std::mt19937_64 rng(77);
  SearchState s = climb(random_start(13, rng));
  double prev = -1;
  for (const auto& mv : s.moves) {
    EXPECT_GT(mv.mu_after, mv.mu_before + 1e-12);
    if (prev >= 0) EXPECT_NEAR(mv.mu_before, prev, 1e-12);
    prev = mv.mu_after;
  }
  EXPECT_NEAR(s.mu, spectral_radius(s.current).mu, 1e-12);
}

TEST(ClimbTest, FiveEdgesReachesS51) {
  SearchState s = hill_climb(5, 8, 1);
  EXPECT_NEAR(s.mu, snk_mu({5, 1}), 1e-9);
  EXPECT_GT(s.mu, std::sqrt(5.0));
}

TEST(ClimbTest, DeterministicForSeed) {
  SearchOptions one, many;
  many.workers = 4;
  SearchState a = hill_climb(11, 6, 42, one);
  SearchState b = hill_climb(11, 6, 42, many);
  EXPECT_EQ(to_graph6(a.current), to_graph6(b.current));
  EXPECT_EQ(a.mu, b.mu);
  EXPECT_EQ(a.restart, b.restart);
}

TEST(ClimbTest, NeverBeatsSqrtMAboveNine) {
  for (int m = 9; m <= 14; ++m) {
    SearchState s = hill_climb(m, 4, 100 + m);
    EXPECT_LE(s.mu, std::sqrt(m) + 1e-9) << m;
  }
}

TEST(Lemma1Test, AddingNeighborsIncreasesMu) {
  Graph g = make_path(5);
  Graph gp = g.with_edge(0, 2);
  auto out = lemma1_test(g, gp, 0);
  EXPECT_TRUE(out.condition);
  EXPECT_TRUE(out.increased);
  EXPECT_GT(out.mu_after, out.mu_before);
}

TEST(Lemma1Test, RandomRewiringInstances) {
  std::mt19937_64 rng(404);
  int positives = 0;
  while (positives < 100) {
    Graph g = testing::RandomConnectedGraph(5 + positives % 20, 0.2, rng);
    auto r = spectral_radius(g);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    const int u = pick(rng);
    const int w = pick(rng);
    if (u == w || g.has_edge(u, w)) continue;
    Graph gp = g.with_edge(u, w);
    // Drop an edge away from u whose weight does not exceed x_u x_w.
    for (const Edge& e : g.edges()) {
      if (e.u == u || e.v == u) continue;
      if (r.vec[e.u] * r.vec[e.v] <= r.vec[u] * r.vec[w]) {
        gp = gp.without_edge(e.u, e.v);
        break;
      }
    }
    auto out = lemma1_test(g, gp, u);
    ASSERT_TRUE(out.condition);
    ASSERT_TRUE(out.increased) << to_graph6(g) << " " << to_graph6(gp);
    ++positives;
  }
}

TEST(Lemma1Test, Preconditions) {
  Graph g = make_path(4);
  EXPECT_THROW(lemma1_test(g, g, 0), PreconditionFailed);  // not proper
  EXPECT_THROW(lemma1_test(g, make_path(5), 0), PreconditionFailed);
  Graph split = disjoint_union(make_path(2), make_path(2));
  EXPECT_THROW(lemma1_test(split, split.with_edge(0, 2), 0), PreconditionFailed);
  // Removing a neighbor of u violates containment.
  EXPECT_THROW(lemma1_test(g, g.without_edge(0, 1).with_edge(1, 3), 0),
               PreconditionFailed);
}

TEST(ClaimTest, Claim1) {
  // S_{15,1}: matched leaves 1, 2 have degree 2, m = 15, mu^2 > 14.
  Graph g = make_snk({15, 1});
  EXPECT_TRUE(claim1_check(g, 1, 2));
  // A pendant path on S_{12,1}: m = 14 but mu^2 < 14.
  Graph h = make_snk({12, 1}).with_vertices(2).with_edge(3, 12).with_edge(12, 13);
  EXPECT_EQ(h.size(), 14);
  EXPECT_THROW(claim1_check(h, 3, 12), PreconditionFailed);
  EXPECT_THROW(claim1_check(make_snk({9, 1}), 1, 2), PreconditionFailed);
}

TEST(ClaimTest, Claim2) {
  // K_{1,21} with a fork hanging off leaf 1: v = 1 gains two neighbors
  // u = 22 and w = 23, each extended by one more pendant vertex.
  Graph g = make_star(22).with_vertices(4);
  g = g.with_edge(1, 22).with_edge(1, 23).with_edge(22, 24).with_edge(23, 25);
  ASSERT_FALSE(has_c4(g));
  ASSERT_EQ(g.size(), 25);
  EXPECT_TRUE(claim2_check(g, 22, 1, 23));
  EXPECT_THROW(claim2_check(g, 22, 2, 23), PreconditionFailed);
}

TEST(ClaimTest, Claim3OnRandomGraphs) {
  std::mt19937_64 rng(303);
  int checked = 0;
  while (checked < 100) {
    Graph g = testing::RandomConnectedGraph(6 + checked % 20, 0.2, rng);
    auto r = spectral_radius(g);
    for (const Edge& e : g.edges()) {
      if (r.vec[e.u] * r.vec[e.v] <= 1 / (4 * r.mu)) {
        ASSERT_TRUE(claim3_check(g, e.u, e.v)) << to_graph6(g);
        ++checked;
        break;
      }
    }
  }
  Graph k2 = make_path(2);
  EXPECT_THROW(claim3_check(k2, 0, 1), PreconditionFailed);
}

}  // namespace
}  // namespace c4free
