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

#include "c4free/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "c4free/errors.hpp"

namespace c4free {
namespace {

struct ComponentResult {
  double mu = 0.0;
  std::vector<double> vec;
  double residual = 0.0;
  long iters = 0;
};

// Power iteration on A + I restricted to one connected component given as
// local adjacency lists. The Rayleigh quotient of A is taken at every step
// and the iteration stops when its residual is within tol.
ComponentResult PowerIterate(const std::vector<std::vector<int>>& adj,
                             std::vector<double> v, double tol,
                             long max_iters) {
  const size_t n = adj.size();
  ComponentResult out;
  if (n == 1) {
    out.vec = {1.0};
    return out;
  }
  auto normalize = [](std::vector<double>& x) {
    double s = 0;
    for (double e : x) s += e * e;
    s = std::sqrt(s);
    for (double& e : x) e /= s;
  };
  normalize(v);
  std::vector<double> av(n);
  for (long it = 1; it <= max_iters; ++it) {
    double lambda = 0;
    for (size_t i = 0; i < n; ++i) {
      double s = 0;
      for (int j : adj[i]) s += v[j];
      av[i] = s;
      lambda += v[i] * s;
    }
    double res = 0;
    for (size_t i = 0; i < n; ++i)
      res = std::max(res, std::abs(av[i] - lambda * v[i]));
    if (res <= tol) {
      out.mu = lambda;
      out.vec = std::move(v);
      out.residual = res;
      out.iters = it;
      return out;
    }
    for (size_t i = 0; i < n; ++i) v[i] += av[i];
    normalize(v);
  }
  throw NoConvergence("power iteration did not reach residual " +
                      std::to_string(tol) + " within " +
                      std::to_string(max_iters) + " iterations");
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  return spectral_radius(g, tol, {}, kMaxPowerIterations);
}

SpectralResult spectral_radius(const Graph& g, double tol,
                               std::span<const double> warm_start,
                               long max_iters) {
  if (g.order() < 1) throw std::invalid_argument("spectral_radius requires n >= 1");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  if (!warm_start.empty() && warm_start.size() != static_cast<size_t>(g.order()))
    throw std::invalid_argument("warm start has wrong length");

  SpectralResult best;
  best.mu = -1;
  std::vector<int> local(g.order(), -1);
  for (const auto& comp : components(g)) {
    for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(comp.size());
    for (size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i])) adj[i].push_back(local[w]);

    std::vector<double> start(comp.size(), 1.0);
    if (!warm_start.empty()) {
      // Keep the start strictly positive so it is never orthogonal to the
      // Perron vector.
      for (size_t i = 0; i < comp.size(); ++i)
        start[i] = std::max(std::abs(warm_start[comp[i]]), 1e-3);
    }
    ComponentResult r = PowerIterate(adj, std::move(start), tol, max_iters);
    best.iters += r.iters;
    best.residual = std::max(best.residual, r.residual);
    if (r.mu > best.mu) {
      best.mu = r.mu;
      best.vec.assign(g.order(), 0.0);
      for (size_t i = 0; i < comp.size(); ++i) best.vec[comp[i]] = r.vec[i];
    }
  }
  return best;
}

double quadratic_form(const Graph& g, std::span<const double> x) {
  if (x.size() != static_cast<size_t>(g.order()))
    throw std::invalid_argument("vector length does not match graph order");
  double s = 0;
  for (const Edge& e : g.edges()) s += x[e.u] * x[e.v];
  return 2 * s;
}

double rayleigh(const Graph& g, std::span<const double> x) {
  double norm2 = 0;
  for (double e : x) norm2 += e * e;
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-9)
    throw std::invalid_argument("rayleigh requires a unit vector");
  return quadratic_form(g, x);
}

double snk_cubic(SnkParams p, double x) {
  const double n1 = p.n - 1;
  return ((x - 1) * x - n1) * x + n1 - 2.0 * p.k;
}

double xmin(int n) {
  if (n < 2) throw std::invalid_argument("xmin requires n >= 2");
  return 1.0 / 3.0 + std::sqrt(1.0 / 9.0 + (n - 1) / 3.0);
}

double snk_mu(SnkParams p) {
  p.validate();
  if (p.n < 2) throw std::invalid_argument("snk_mu requires n >= 2");
  double lo = xmin(p.n);
  double hi = p.n;
  // n = 2 gives (x - 1)^2 (x + 1): the local minimum is itself the root,
  // and bisection would only resolve it to about sqrt(epsilon).
  if (snk_cubic(p, lo) >= 0) return lo;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (snk_cubic(p, mid) > 0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::pair<double, double> snk_bound_identity(SnkParams p) {
  p.validate();
  const double s = std::sqrt(static_cast<double>(p.n - 1 + p.k));
  return {snk_cubic(p, s), p.k * (s - 3.0)};
}

bool max_entry_ok(const SpectralResult& r) {
  const double cap = 1.0 / std::sqrt(2.0) + 1e-9;
  return std::all_of(r.vec.begin(), r.vec.end(),
                     [cap](double e) { return e <= cap; });
}

}  // namespace c4free
