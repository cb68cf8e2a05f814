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

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "c4free/canonical.hpp"
#include "c4free/errors.hpp"
#include "c4free/graph6.hpp"
#include "test_util.hpp"

namespace c4free {
namespace {

std::vector<Graph> Collect(EnumSpec spec) {
  std::vector<Graph> out;
  enumerate(spec, [&](const Graph& g) { out.push_back(g); });
  return out;
}

EnumSpec ByEdges(int m, int workers = 1) {
  EnumSpec s;
  s.mode = EnumSpec::Mode::kByEdges;
  s.value = m;
  s.workers = workers;
  return s;
}

EnumSpec ByOrder(int n, int workers = 1) {
  EnumSpec s;
  s.mode = EnumSpec::Mode::kByOrder;
  s.value = n;
  s.workers = workers;
  return s;
}

// Distinct classes, each C4-free with the requested shape.
void ExpectWellFormed(const std::vector<Graph>& graphs, int m, int n) {
  std::set<std::string> forms;
  for (const Graph& g : graphs) {
    ASSERT_FALSE(has_c4(g));
    if (m > 0) {
      ASSERT_EQ(g.size(), m);
      for (int v = 0; v < g.order(); ++v) ASSERT_GT(g.degree(v), 0);
    }
    if (n > 0) ASSERT_EQ(g.order(), n);
    ASSERT_TRUE(forms.insert(canonical_form(g)).second) << to_graph6(g);
  }
}

TEST(EnumerateTest, ByEdgesMatchesBruteForceOracle) {
  for (int m = 1; m <= 6; ++m) {
    auto fast = Collect(ByEdges(m));
    auto brute = testing::BruteC4FreeByEdges(m);
    ASSERT_EQ(fast.size(), brute.size()) << "m=" << m;
    std::set<std::string> a, b;
    for (const auto& g : fast) a.insert(testing::ComponentCanonical(g));
    for (const auto& g : brute) b.insert(testing::ComponentCanonical(g));
    EXPECT_EQ(a, b) << "m=" << m;
    ExpectWellFormed(fast, m, 0);
  }
}

TEST(EnumerateTest, ByOrderMatchesBruteForceOracle) {
  for (int n = 1; n <= 6; ++n) {
    auto fast = Collect(ByOrder(n));
    auto brute = testing::BruteC4FreeByOrder(n);
    ASSERT_EQ(fast.size(), brute.size()) << "n=" << n;
    std::set<std::string> a, b;
    for (const auto& g : fast) a.insert(testing::BruteCanonical(g));
    for (const auto& g : brute) b.insert(testing::BruteCanonical(g));
    EXPECT_EQ(a, b) << "n=" << n;
    ExpectWellFormed(fast, 0, n);
  }
}

// Counts from an independent networkx level-expansion script
// (tests/oracle/c4free_counts.py).
TEST(EnumerateTest, FrozenCountsByEdges) {
  const long expected[] = {1, 2, 5, 10, 23, 55, 131, 328, 863, 2345};
  for (int m = 1; m <= 10; ++m) {
    long count = 0;
    enumerate(ByEdges(m), [&](const Graph&) { ++count; });
    EXPECT_EQ(count, expected[m - 1]) << "m=" << m;
  }
}

TEST(EnumerateTest, FrozenCountsByOrder) {
  const long expected[] = {1, 2, 4, 8, 18, 44, 117, 351};
  for (int n = 1; n <= 8; ++n) {
    long count = 0;
    enumerate(ByOrder(n), [&](const Graph&) { ++count; });
    EXPECT_EQ(count, expected[n - 1]) << "n=" << n;
  }
}

TEST(EnumerateTest, FourVertexClasses) {
  // 11 graphs on four vertices; C4, the diamond and K4 contain a 4-cycle.
  auto graphs = Collect(ByOrder(4));
  EXPECT_EQ(graphs.size(), 8u);
}

TEST(EnumerateTest, OrderIsIndependentOfWorkers) {
  auto serial = Collect(ByEdges(9, 1));
  auto parallel = Collect(ByEdges(9, 4));
  ASSERT_EQ(serial.size(), parallel.size());
  for (size_t i = 0; i < serial.size(); ++i)
    ASSERT_EQ(to_graph6(serial[i]), to_graph6(parallel[i]));

  auto s2 = Collect(ByOrder(7, 1));
  auto p2 = Collect(ByOrder(7, 3));
  ASSERT_EQ(s2, p2);
}

TEST(EnumerateTest, MapPreservesOrderAndPropagatesErrors) {
  EnumSpec spec = ByEdges(8, 3);
  std::vector<std::string> mapped;
  enumerate_map<std::string>(
      spec, [](const Graph& g) { return to_graph6(g); },
      [&](std::string s) { mapped.push_back(std::move(s)); });
  std::vector<std::string> direct;
  enumerate(ByEdges(8), [&](const Graph& g) { direct.push_back(to_graph6(g)); });
  EXPECT_EQ(mapped, direct);

  EXPECT_THROW(enumerate_map<int>(
                   spec,
                   [](const Graph& g) -> int {
                     if (g.order() == 9) throw std::runtime_error("boom");
                     return 0;
                   },
                   [](int) {}),
               std::runtime_error);
}

TEST(EnumerateTest, HigherCodegreeBound) {
  // Graphs on four vertices without K_{2,3}: all 11 except none, since
  // K_{2,3} needs five vertices.
  EnumSpec spec = ByOrder(4);
  spec.max_codegree = 2;
  EXPECT_EQ(Collect(spec).size(), 11u);

  spec.value = 5;
  auto graphs = Collect(spec);
  std::set<std::string> brute;
  std::vector<Edge> pairs;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) pairs.emplace_back(u, v);
  for (int mask = 0; mask < 1024; ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < 10; ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    Graph g(5, edges);
    if (!has_k2kp1(g, 2)) brute.insert(testing::BruteCanonical(g));
  }
  EXPECT_EQ(graphs.size(), brute.size());
  for (const auto& g : graphs) EXPECT_FALSE(has_k2kp1(g, 2));
}

TEST(EnumerateTest, ExtendAndPruneChildren) {
  // Children of a single edge: path P3 and two disjoint edges.
  auto kids = extend_and_prune(make_path(2));
  ASSERT_EQ(kids.size(), 2u);
  for (const auto& g : kids) EXPECT_EQ(g.size(), 2);
  EXPECT_THROW(extend_and_prune(make_path(2).with_vertices(1)),
               std::invalid_argument);
  EXPECT_THROW(extend_and_prune(make_cycle(4)), std::invalid_argument);
}

TEST(EnumerateTest, CapsAndValidation) {
  EXPECT_THROW(Collect(ByEdges(17)), CapExceeded);
  EXPECT_THROW(Collect(ByOrder(11)), CapExceeded);
  try {
    Collect(ByEdges(20));
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("--max-edges"), std::string::npos);
  }
  EnumSpec raised = ByEdges(17);
  raised.edge_cap = 17;
  EXPECT_NO_THROW(raised.validate());
  EXPECT_THROW(Collect(ByEdges(0)), std::invalid_argument);
  EnumSpec bad = ByEdges(3);
  bad.workers = 0;
  EXPECT_THROW(bad.validate(), std::invalid_argument);
}

TEST(EnumerateTest, ConvenienceWrappers) {
  long a = 0, b = 0;
  enumerate_c4free_by_edges(7, [&](const Graph&) { ++a; });
  enumerate_c4free_by_order(6, [&](const Graph&) { ++b; }, 2);
  EXPECT_EQ(a, 131);
  EXPECT_EQ(b, 44);
}

}  // namespace
}  // namespace c4free
