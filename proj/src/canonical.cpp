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

#include "c4free/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "c4free/graph6.hpp"

namespace c4free {
namespace {

constexpr int kContinue = std::numeric_limits<int>::max();

using Cells = std::vector<uint64_t>;

int FindRoot(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void Unite(std::vector<int>& parent, int a, int b) {
  a = FindRoot(parent, a);
  b = FindRoot(parent, b);
  if (a == b) return;
  if (a < b) std::swap(a, b);
  parent[a] = b;
}

class Searcher {
 public:
  Searcher(int n, std::span<const uint64_t> rows) : n_(n) {
    std::copy(rows.begin(), rows.end(), adj_.begin());
  }

  CanonicalLabeling Run() {
    CanonicalLabeling out;
    if (n_ == 0) return out;
    Cells root{n_ == 64 ? ~uint64_t{0} : (uint64_t{1} << n_) - 1};
    Recurse(std::move(root), 0);
    out.order = best_order_;
    out.certificate = best_cert_;
    out.generators = std::move(generators_);
    out.nodes = nodes_;
    return out;
  }

 private:
  // Splits every cell by neighbor counts into all current cells until the
  // partition is equitable. Sub-cells are ordered by their count vectors,
  // which keeps the result independent of vertex names.
  void Refine(Cells& cells) const {
    std::vector<std::pair<std::vector<uint8_t>, int>> keyed;
    while (static_cast<int>(cells.size()) < n_) {
      Cells next;
      next.reserve(n_);
      const size_t nc = cells.size();
      for (uint64_t cell : cells) {
        if (std::has_single_bit(cell)) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (uint64_t bits = cell; bits != 0; bits &= bits - 1) {
          const int v = std::countr_zero(bits);
          std::vector<uint8_t> key(nc);
          for (size_t c = 0; c < nc; ++c)
            key[c] = static_cast<uint8_t>(std::popcount(adj_[v] & cells[c]));
          keyed.emplace_back(std::move(key), v);
        }
        std::sort(keyed.begin(), keyed.end());
        uint64_t group = 0;
        for (size_t i = 0; i < keyed.size(); ++i) {
          if (i > 0 && keyed[i].first != keyed[i - 1].first) {
            next.push_back(group);
            group = 0;
          }
          group |= uint64_t{1} << keyed[i].second;
        }
        next.push_back(group);
      }
      if (next.size() == nc) return;
      cells = std::move(next);
    }
  }

  std::vector<uint64_t> Certificate(const std::vector<int>& order) const {
    std::array<int, 64> pos{};
    for (int i = 0; i < n_; ++i) pos[order[i]] = i;
    std::vector<uint64_t> cert(n_, 0);
    for (int i = 0; i < n_; ++i) {
      for (uint64_t bits = adj_[order[i]]; bits != 0; bits &= bits - 1)
        cert[i] |= uint64_t{1} << pos[std::countr_zero(bits)];
    }
    return cert;
  }

  void RecordAutomorphism(const std::vector<int>& from,
                          const std::vector<int>& to) {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[from[i]] = to[i];
    generators_.push_back(std::move(perm));
  }

  static int CommonPrefix(const std::vector<int>& a, const std::vector<int>& b) {
    const size_t lim = std::min(a.size(), b.size());
    size_t i = 0;
    while (i < lim && a[i] == b[i]) ++i;
    return static_cast<int>(i);
  }

  int Leaf(const Cells& cells) {
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = std::countr_zero(cells[i]);
    std::vector<uint64_t> cert = Certificate(order);
    if (!have_first_) {
      have_first_ = true;
      first_order_ = best_order_ = order;
      first_cert_ = best_cert_ = cert;
      first_path_ = best_path_ = path_;
      return kContinue;
    }
    if (cert == first_cert_) {
      RecordAutomorphism(first_order_, order);
      return CommonPrefix(path_, first_path_);
    }
    if (cert > best_cert_) {
      best_order_ = std::move(order);
      best_cert_ = std::move(cert);
      best_path_ = path_;
      return kContinue;
    }
    if (cert == best_cert_) {
      RecordAutomorphism(best_order_, order);
      return CommonPrefix(path_, best_path_);
    }
    return kContinue;
  }

  // True if v lies in the orbit of an already explored sibling, using the
  // automorphisms that fix the current path pointwise.
  bool Pruned(int v, const std::vector<int>& explored) const {
    if (explored.empty() || generators_.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    bool any = false;
    for (const auto& gen : generators_) {
      bool fixes = true;
      for (int p : path_) {
        if (gen[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) Unite(parent, x, gen[x]);
    }
    if (!any) return false;
    const int rv = FindRoot(parent, v);
    for (int u : explored)
      if (FindRoot(parent, u) == rv) return true;
    return false;
  }

  int Recurse(Cells cells, int depth) {
    ++nodes_;
    Refine(cells);
    if (static_cast<int>(cells.size()) == n_) return Leaf(cells);

    size_t target = 0;
    while (std::has_single_bit(cells[target])) ++target;
    const uint64_t cell = cells[target];

    std::vector<int> explored;
    for (uint64_t bits = cell; bits != 0; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      if (Pruned(v, explored)) continue;
      explored.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + target);
      child.push_back(uint64_t{1} << v);
      child.push_back(cell & ~(uint64_t{1} << v));
      child.insert(child.end(), cells.begin() + target + 1, cells.end());

      path_.push_back(v);
      const int r = Recurse(std::move(child), depth + 1);
      path_.pop_back();
      if (r < depth) return r;
    }
    return kContinue;
  }

  int n_;
  std::array<uint64_t, 64> adj_{};
  std::vector<int> path_;
  bool have_first_ = false;
  std::vector<int> first_order_, first_path_, best_order_, best_path_;
  std::vector<uint64_t> first_cert_, best_cert_;
  std::vector<std::vector<int>> generators_;
  long nodes_ = 0;
};

}  // namespace

CanonicalLabeling canonical_labeling(int n, std::span<const uint64_t> rows) {
  if (n < 0 || n > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical labeling supports at most 64 vertices");
  if (rows.size() < static_cast<size_t>(n))
    throw std::invalid_argument("canonical labeling: missing adjacency rows");
  return Searcher(n, rows.first(n)).Run();
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical labeling supports at most 64 vertices");
  std::vector<uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row64(v);
  return canonical_labeling(g.order(), rows);
}

Graph canonical_graph(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  std::vector<int> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[lab.order[i]] = i;
  return relabel(g, perm);
}

std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

std::vector<Vertex> vertex_orbits(
    int n, std::span<const std::vector<Vertex>> generators) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& gen : generators)
    for (int x = 0; x < n; ++x) Unite(parent, x, gen[x]);
  std::vector<Vertex> rep(n);
  for (int x = 0; x < n; ++x) rep[x] = FindRoot(parent, x);
  return rep;
}

std::vector<Edge> edge_orbit(Edge e,
                             std::span<const std::vector<Vertex>> generators) {
  std::vector<Edge> orbit{e};
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& gen : generators) {
      const Edge image(gen[orbit[i].u], gen[orbit[i].v]);
      if (std::find(orbit.begin(), orbit.end(), image) == orbit.end())
        orbit.push_back(image);
    }
  }
  return orbit;
}

}  // namespace c4free
