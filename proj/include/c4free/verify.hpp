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

#ifndef C4FREE_VERIFY_HPP_
#define C4FREE_VERIFY_HPP_

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "c4free/graph.hpp"
#include "c4free/spectral.hpp"

namespace c4free {

enum class Check {
  kTheorem1,    // C4-free with m >= 9 edges => mu <= sqrt(m)
  kTheorem2,    // as above, with equality claimed only for stars and S_{9,1}
  kSmallM,      // graphs exceeding sqrt(m) for small m
  kIn3,         // C4-free of order n => mu^2 - mu <= n - 1
  kConjecture,  // even n: mu <= largest root of x^3 - x^2 - (n-1) x + 1
  kK2k1,        // K_{2,k+1}-free of order n => mu^2 - mu <= k (n - 1)
};

enum class Classification {
  kStrict,
  kEqualityStar,
  kEqualityS91,
  kEqualityFriendship,
  kEqualitySnk,
  kEqualityCodegree,
  // Inside the equality band with no matching structure: a finding.
  kEqualityUnclassified,
  // mu > sqrt(m) where the bound is known to fail (small-m scan).
  kExceedsBound,
  kViolation,
};

std::string_view to_string(Check c);
std::string_view to_string(Classification c);
bool is_equality(Classification c);

struct VerificationRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  double mu = 0.0;
  double bound = 0.0;
  // bound - value, where value is mu, mu^2 - mu, or the cubic, per check.
  double slack = 0.0;
  Classification classification = Classification::kStrict;
};

// Structure confirming an equality case.
struct StructuralWitness {
  std::string kind;  // "star", "snk", "friendship" or "codegree"
  int hub = -1;
  std::vector<Edge> matching;
  SnkParams snk;
  int codegree = 0;
};

struct Certificate {
  std::string check;
  VerificationRecord record;
  std::vector<double> eigenvector;
  double tol = kDefaultTolerance;
  // mu recomputed at tol / 10.
  double mu_tight = 0.0;
  double slack_tight = 0.0;
  // For violations: the tighter recomputation confirmed the sign.
  bool recheck = false;
  std::optional<StructuralWitness> witness;
};

struct VerifyOptions {
  double tol = kDefaultTolerance;
  double equality_tol = 1e-9;
  int workers = 1;
  int edge_cap = 16;
  int order_cap = 10;
};

struct Evaluation {
  VerificationRecord record;
  // Set for equality-band, violation and exceeds-bound graphs.
  std::optional<Certificate> certificate;
};

// Evaluates one graph under `check`. `k` is the codegree threshold for
// kK2k1 and ignored otherwise. A negative slack beyond the equality band is
// recomputed at tol/10 and only classified as a violation if it persists.
Evaluation evaluate(Check check, const Graph& g, const VerifyOptions& opts,
                    int k = 1);

struct VerifySummary {
  Check check = Check::kTheorem1;
  int m = 0;
  int n = 0;
  int k = 0;
  long graphs = 0;
  double max_mu = 0.0;
  std::string max_mu_graph6;
  double min_slack = 0.0;
  std::string min_slack_graph6;
  std::vector<Certificate> equality;
  std::vector<Certificate> violations;
  std::vector<Certificate> anomalies;
  // kSmallM: every graph with mu > sqrt(m).
  std::vector<Certificate> witnesses;
  // Ways in which the run disagrees with the stated results.
  std::vector<std::string> findings;

  bool consistent() const { return findings.empty(); }
};

// 0 when consistent, 2 when a violation certificate or anomaly was produced.
int exit_code(const VerifySummary& s);

using RecordSink = std::function<void(const VerificationRecord&)>;

// Folds `check` over all C4-free graphs with m edges (no isolated vertices).
// Requires m >= 9.
VerifySummary verify_theorem1(int m, const VerifyOptions& opts = {},
                              const RecordSink& sink = {});
// As verify_theorem1, and additionally requires the equality set to be
// exactly {K_{1,m}} (plus S_{9,1} when m = 9).
VerifySummary verify_theorem2(int m, const VerifyOptions& opts = {},
                              const RecordSink& sink = {});
// All C4-free graphs with m edges and mu > sqrt(m). For 4 <= m <= 8 the set
// must contain S_{m,1}; for m >= 9 it must be empty.
VerifySummary verify_small_m(int m, const VerifyOptions& opts = {},
                             const RecordSink& sink = {});
VerifySummary verify_in3(int n, const VerifyOptions& opts = {},
                         const RecordSink& sink = {});
// Requires even n. Violations become certificates, not errors.
VerifySummary verify_conjecture(int n, const VerifyOptions& opts = {},
                                const RecordSink& sink = {});
VerifySummary verify_k2k1(int n, int k, const VerifyOptions& opts = {},
                          const RecordSink& sink = {});

// Folds an arbitrary stream of evaluations; the verify_* functions are thin
// wrappers. Exposed so that callers can check hand-picked graph sets.
class SummaryBuilder {
 public:
  SummaryBuilder(Check check, int m, int n, int k);
  void add(Evaluation&& e);
  VerifySummary finish();

 private:
  VerifySummary s_;
  bool first_ = true;
};

struct SrgRow {
  int k = 0;
  int n = 0;
  int mu = 0;
  long lhs = 0;  // mu^2 - mu
  long rhs = 0;  // k (n - 1)
  bool exact = false;
};
// The five (k, n, mu) rows of strongly regular graphs with every pair having
// exactly k common neighbors, checked with integer arithmetic.
std::vector<SrgRow> srg_table_check();

}  // namespace c4free

#endif  // C4FREE_VERIFY_HPP_
