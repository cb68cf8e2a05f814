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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "test_util.hpp"

namespace c4free {
namespace {

TEST(GraphTest, EdgesAreNormalizedAndSorted) {
  Graph g(4, {Edge(3, 1), Edge(0, 2), Edge(1, 0)});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  std::vector<Edge> expected{Edge(0, 1), Edge(0, 2), Edge(1, 3)};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_TRUE(g.has_edge(3, 1));
  EXPECT_FALSE(g.has_edge(2, 3));
  EXPECT_TRUE(g.check_invariants());
}

TEST(GraphTest, MutatorsRejectBadInput) {
  Graph g = make_path(3);
  EXPECT_THROW(g.with_edge(0, 1), std::invalid_argument);
  EXPECT_THROW(g.without_edge(0, 2), std::invalid_argument);
  EXPECT_THROW(g.with_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.with_edge(0, 3), std::invalid_argument);
  Graph h = g.with_edge(0, 2);
  EXPECT_EQ(h.size(), 3);
  EXPECT_EQ(g.size(), 2);  // unchanged
  EXPECT_EQ(h.without_edge(0, 2), g);
}

TEST(GraphTest, WithVerticesAppendsIsolated) {
  Graph g = make_star(3).with_vertices(2);
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.degree(4), 0);
  EXPECT_EQ(strip_isolated(g), make_star(3));
}

TEST(GraphTest, LargeGraphsUseMultiWordRows) {
  Graph g = make_star(100);
  EXPECT_EQ(g.words_per_row(), 2);
  EXPECT_EQ(g.degree(0), 99);
  EXPECT_TRUE(g.has_edge(0, 99));
  EXPECT_TRUE(g.check_invariants());
}

TEST(GraphTest, SnkShape) {
  Graph g = make_snk({9, 1});
  EXPECT_EQ(g.order(), 9);
  EXPECT_EQ(g.size(), 9);
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(common_neighbors(g, 1, 2), 1);
  EXPECT_FALSE(has_c4(g));
  EXPECT_THROW(make_snk({4, 2}), std::invalid_argument);
  EXPECT_THROW(make_snk({0, 0}), std::invalid_argument);
}

TEST(GraphTest, SnkEdgeCountIsNMinusOnePlusK) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 0; k <= (n - 1) / 2; ++k)
      EXPECT_EQ(make_snk({n, k}).size(), n - 1 + k);
}

TEST(GraphTest, FriendshipGraph) {
  Graph f3 = make_friendship(3);
  EXPECT_EQ(f3.order(), 7);
  EXPECT_EQ(f3.size(), 9);
  EXPECT_TRUE(is_friendship_condition(f3));
  EXPECT_TRUE(has_uniform_codegree(f3, 1));
  EXPECT_FALSE(has_c4(f3));
}

TEST(GraphTest, FriendshipConditionFailsElsewhere) {
  EXPECT_FALSE(is_friendship_condition(make_star(5)));
  EXPECT_FALSE(is_friendship_condition(make_cycle(5)));
  EXPECT_FALSE(is_friendship_condition(make_snk({6, 2})));
  EXPECT_TRUE(is_friendship_condition(make_complete(3)));
}

TEST(GraphTest, CommonNeighbors) {
  Graph k4 = make_complete(4);
  EXPECT_EQ(common_neighbors(k4, 0, 1), 2);
  EXPECT_EQ(max_common_neighbors(k4), 2);
  EXPECT_TRUE(has_uniform_codegree(k4, 2));
  EXPECT_THROW(common_neighbors(k4, 1, 1), std::invalid_argument);
  EXPECT_EQ(max_common_neighbors(Graph(1)), 0);
}

TEST(GraphTest, FourCycleDetection) {
  EXPECT_TRUE(has_c4(make_cycle(4)));
  EXPECT_TRUE(has_c4(make_complete_bipartite(2, 3)));
  EXPECT_FALSE(has_c4(make_cycle(5)));
  EXPECT_FALSE(has_c4(make_star(10)));
  EXPECT_TRUE(has_k2kp1(make_complete_bipartite(2, 3), 2));
  EXPECT_FALSE(has_k2kp1(make_complete_bipartite(2, 2), 2));
}

TEST(GraphTest, K2kp1WithKOneIsFourCycle) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Graph g = testing::RandomGraph(3 + i % 10, 0.3, rng);
    ASSERT_EQ(has_k2kp1(g, 1), has_c4(g));
    ASSERT_EQ(has_c4(g), testing::BruteHasC4(g));
  }
}

TEST(GraphTest, ComponentsAndConnectivity) {
  Graph g = disjoint_union(make_path(3), make_cycle(3));
  auto comps = components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(comps[1], (std::vector<Vertex>{3, 4, 5}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(make_cycle(6)));
}

TEST(GraphTest, RelabelAndInducedSubgraph) {
  Graph p = make_path(3);  // 0-1-2
  std::vector<int> perm{2, 0, 1};
  Graph q = relabel(p, perm);
  EXPECT_TRUE(q.has_edge(2, 0));
  EXPECT_TRUE(q.has_edge(0, 1));
  std::vector<Vertex> keep{1, 2};
  EXPECT_EQ(induced_subgraph(p, keep), make_path(2));
}

TEST(GraphTest, MatchStar) {
  auto w = match_star(make_star(6));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->hub, 0);
  EXPECT_TRUE(match_star(make_star(4).with_vertices(3)));
  EXPECT_FALSE(match_star(make_snk({5, 1})));
}

TEST(GraphTest, MatchSnkRecoversParameters) {
  for (int n = 3; n <= 12; ++n) {
    for (int k = 0; k <= (n - 1) / 2; ++k) {
      std::mt19937_64 rng(n * 31 + k);
      std::vector<int> perm = testing::RandomPermutation(n, rng);
      auto w = match_snk(relabel(make_snk({n, k}), perm));
      ASSERT_TRUE(w) << n << "," << k;
      EXPECT_EQ(w->params, (SnkParams{n, k}));
      EXPECT_EQ(static_cast<int>(w->matching.size()), k);
      if (n > 3) EXPECT_EQ(w->hub, perm[0]);
    }
  }
  EXPECT_FALSE(match_snk(make_cycle(5)));
  EXPECT_FALSE(match_snk(make_complete(4)));
}

}  // namespace
}  // namespace c4free
