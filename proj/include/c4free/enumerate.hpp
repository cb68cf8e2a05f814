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

#ifndef C4FREE_ENUMERATE_HPP_
#define C4FREE_ENUMERATE_HPP_

#include <array>
#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

#include "c4free/graph.hpp"

namespace c4free {

// What to enumerate. Graphs are generated up to isomorphism with every
// vertex pair sharing at most `max_codegree` common neighbors: 1 gives the
// C4-free graphs, k gives the K_{2,k+1}-free graphs.
struct EnumSpec {
  enum class Mode { kByEdges, kByOrder };

  Mode mode = Mode::kByEdges;
  // Edge count m (by-edges; no isolated vertices) or order n (by-order;
  // isolated vertices allowed, every graph has exactly n vertices).
  int value = 1;
  int max_codegree = 1;
  int workers = 1;
  // Depth of the augmentation tree at which work is split into tasks.
  int split_depth = 4;
  int edge_cap = 16;
  int order_cap = 10;

  // Throws CapExceeded / std::invalid_argument.
  void validate() const;
};

using GraphSink = std::function<void(const Graph&)>;

// Generation core: children of `parent` obtained by adding one edge (between
// existing vertices, to one new vertex, or between two new vertices) that
// keep every codegree <= max_codegree and pass the canonical-deletion test,
// one per orbit of Aut(parent). `parent` must have no isolated vertices.
std::vector<Graph> extend_and_prune(const Graph& parent, int max_codegree = 1,
                                    int max_order = 64);

namespace detail {

struct Node {
  int n = 0;
  int m = 0;
  std::array<uint64_t, 64> rows{};
  std::vector<std::vector<int>> generators;
};

// One unit of work in deterministic order: a single graph to emit, or a
// whole subtree to generate.
struct WorkItem {
  Node node;
  bool subtree = false;
};

std::vector<WorkItem> plan(const EnumSpec& spec);
void run_item(const EnumSpec& spec, const WorkItem& item, const GraphSink& emit);

}  // namespace detail

// Streams every graph of `spec` to `sink` in a deterministic order that does
// not depend on the number of workers.
void enumerate(const EnumSpec& spec, const GraphSink& sink);
void enumerate_c4free_by_edges(int m, const GraphSink& sink, int workers = 1);
void enumerate_c4free_by_order(int n, const GraphSink& sink, int workers = 1);

// Applies `map` to every enumerated graph (on worker threads when
// spec.workers > 1) and hands the results to `collect` on the calling thread
// in the same deterministic order as enumerate(). Subtree results are
// buffered per task until their turn comes.
template <typename T, typename Map, typename Collect>
void enumerate_map(const EnumSpec& spec, Map&& map, Collect&& collect) {
  spec.validate();
  const std::vector<detail::WorkItem> items = detail::plan(spec);
  if (spec.workers <= 1 || items.size() <= 1) {
    for (const auto& item : items)
      detail::run_item(spec, item, [&](const Graph& g) { collect(map(g)); });
    return;
  }

  struct Slot {
    std::vector<T> values;
    bool done = false;
  };
  std::vector<Slot> slots(items.size());
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<size_t> next{0};
  std::atomic<bool> abort{false};
  std::exception_ptr error;

  auto worker = [&]() {
    for (;;) {
      const size_t idx = next.fetch_add(1);
      if (idx >= items.size()) return;
      std::vector<T> local;
      if (!abort.load()) {
        try {
          detail::run_item(spec, items[idx],
                           [&](const Graph& g) { local.push_back(map(g)); });
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
          abort.store(true);
        }
      }
      {
        std::lock_guard<std::mutex> lock(mu);
        slots[idx].values = std::move(local);
        slots[idx].done = true;
      }
      cv.notify_all();
    }
  };

  std::vector<std::thread> threads;
  for (int i = 0; i < spec.workers; ++i) threads.emplace_back(worker);
  try {
    for (size_t idx = 0; idx < items.size(); ++idx) {
      std::vector<T> values;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return slots[idx].done; });
        if (error) break;
        values = std::move(slots[idx].values);
      }
      for (auto& v : values) collect(std::move(v));
    }
  } catch (...) {
    abort.store(true);
    for (auto& t : threads) t.join();
    throw;
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace c4free

#endif  // C4FREE_ENUMERATE_HPP_
