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

#ifndef C4FREE_SPECTRAL_HPP_
#define C4FREE_SPECTRAL_HPP_

#include <span>
#include <utility>
#include <vector>

#include "c4free/graph.hpp"

namespace c4free {

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr long kMaxPowerIterations = 1'000'000;

// Perron root of the adjacency matrix together with a unit nonnegative
// eigenvector. `residual` is max_i |(A vec)_i - mu vec_i|.
struct SpectralResult {
  double mu = 0.0;
  std::vector<double> vec;
  double residual = 0.0;
  long iters = 0;
};

// Power iteration on A + I per connected component, started from the
// all-ones vector (or from `warm_start` when given), stopping once the
// residual is at most `tol`. For disconnected graphs the vector is supported
// on the first component attaining the maximum. Throws NoConvergence when
// the iteration cap is hit.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTolerance);
SpectralResult spectral_radius(const Graph& g, double tol,
                               std::span<const double> warm_start,
                               long max_iters = kMaxPowerIterations);

// 2 * sum over edges of x_i x_j. Rejects vectors whose norm is not 1 within
// 1e-9.
double rayleigh(const Graph& g, std::span<const double> x);
// Same quadratic form without the unit-norm check.
double quadratic_form(const Graph& g, std::span<const double> x);

// f_k(x) = x^3 - x^2 - (n-1) x + n - 1 - 2k; its largest root is mu(S_{n,k}).
double snk_cubic(SnkParams p, double x);
// Location of the local minimum of f_k: 1/3 + sqrt(1/9 + (n-1)/3).
double xmin(int n);
// Largest root of f_k by 200 bisection steps on [xmin(n), n].
double snk_mu(SnkParams p);
// lhs = f_k(sqrt(n-1+k)), rhs = k (sqrt(n-1+k) - 3).
std::pair<double, double> snk_bound_identity(SnkParams p);

// No eigenvector entry exceeds 2^{-1/2} (up to 1e-9).
bool max_entry_ok(const SpectralResult& r);

}  // namespace c4free

#endif  // C4FREE_SPECTRAL_HPP_
