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

#include "c4free/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "c4free/enumerate.hpp"
#include "c4free/errors.hpp"
#include "c4free/graph6.hpp"
#include "c4free/spectral.hpp"

namespace c4free {
namespace {

struct Metric {
  double bound;
  double slack;
};

Metric Measure(Check check, int n, int m, int k, double mu) {
  switch (check) {
    case Check::kTheorem1:
    case Check::kTheorem2:
    case Check::kSmallM: {
      const double b = std::sqrt(static_cast<double>(m));
      return {b, b - mu};
    }
    case Check::kIn3:
      return {static_cast<double>(n - 1), (n - 1) - (mu * mu - mu)};
    case Check::kConjecture: {
      // The cubic is also positive on [0, r2) for its middle root r2 < 1,
      // which only the edgeless graph reaches; the bound meant is
      // mu <= largest root, the radius of S_{n,n/2-1}.
      const double b = snk_mu({n, n / 2 - 1});
      return {b, b - mu};
    }
    case Check::kK2k1: {
      const double b = static_cast<double>(k) * (n - 1);
      return {b, b - (mu * mu - mu)};
    }
  }
  return {0, 0};
}

std::optional<std::pair<Classification, StructuralWitness>> ClassifyEquality(
    Check check, const Graph& g, int k) {
  StructuralWitness w;
  switch (check) {
    case Check::kTheorem1:
    case Check::kTheorem2:
    case Check::kSmallM: {
      if (auto snk = match_snk(g)) {
        w.hub = snk->hub;
        w.snk = snk->params;
        w.matching = snk->matching;
        if (snk->params.k == 0) {
          w.kind = "star";
          return std::make_pair(Classification::kEqualityStar, w);
        }
        w.kind = "snk";
        if (snk->params == SnkParams{9, 1})
          return std::make_pair(Classification::kEqualityS91, w);
        // Every S_{n,k} with n - 1 + k = 9 has mu = 3 exactly.
        return std::make_pair(Classification::kEqualitySnk, w);
      }
      return std::nullopt;
    }
    case Check::kIn3: {
      if (g.order() == 1 || is_friendship_condition(g)) {
        w.kind = "friendship";
        w.codegree = 1;
        for (Vertex v = 0; v < g.order(); ++v) {
          if (g.degree(v) == g.order() - 1) {
            w.hub = v;
            break;
          }
        }
        if (g.order() == 1) w.hub = 0;
        return std::make_pair(Classification::kEqualityFriendship, w);
      }
      return std::nullopt;
    }
    case Check::kConjecture: {
      const int n = g.order();
      auto snk = match_snk(g);
      if (snk && snk->params.n == n && snk->params.k == n / 2 - 1) {
        w.kind = "snk";
        w.hub = snk->hub;
        w.snk = snk->params;
        w.matching = snk->matching;
        return std::make_pair(Classification::kEqualitySnk, w);
      }
      return std::nullopt;
    }
    case Check::kK2k1: {
      if (has_uniform_codegree(g, k)) {
        w.kind = "codegree";
        w.codegree = k;
        return std::make_pair(Classification::kEqualityCodegree, w);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

void RequireAtLeastNineEdges(int m) {
  if (m < 9)
    throw PreconditionFailed(
        "the sqrt(m) bound is only claimed for m >= 9; use verify-small-m for "
        "m <= 8");
}

EnumSpec SpecFor(EnumSpec::Mode mode, int value, int codegree,
                 const VerifyOptions& opts) {
  EnumSpec spec;
  spec.mode = mode;
  spec.value = value;
  spec.max_codegree = codegree;
  spec.workers = opts.workers;
  spec.edge_cap = opts.edge_cap;
  spec.order_cap = opts.order_cap;
  return spec;
}

VerifySummary Fold(Check check, const EnumSpec& spec, int m, int n, int k,
                   const VerifyOptions& opts, const RecordSink& sink) {
  SummaryBuilder builder(check, m, n, k);
  enumerate_map<Evaluation>(
      spec, [&](const Graph& g) { return evaluate(check, g, opts, k); },
      [&](Evaluation&& e) {
        if (sink) sink(e.record);
        builder.add(std::move(e));
      });
  return builder.finish();
}

bool HasSnk(const std::vector<Certificate>& certs, SnkParams p) {
  return std::any_of(certs.begin(), certs.end(), [&](const Certificate& c) {
    auto s = match_snk(from_graph6(c.record.graph6));
    return s && s->params == p;
  });
}

}  // namespace

std::string_view to_string(Check c) {
  switch (c) {
    case Check::kTheorem1: return "theorem1";
    case Check::kTheorem2: return "theorem2";
    case Check::kSmallM: return "small-m";
    case Check::kIn3: return "in3";
    case Check::kConjecture: return "conjecture";
    case Check::kK2k1: return "k2k1";
  }
  return "unknown";
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::kStrict: return "strict";
    case Classification::kEqualityStar: return "equality-star";
    case Classification::kEqualityS91: return "equality-S91";
    case Classification::kEqualityFriendship: return "equality-friendship";
    case Classification::kEqualitySnk: return "equality-snk";
    case Classification::kEqualityCodegree: return "equality-codegree";
    case Classification::kEqualityUnclassified: return "equality-unclassified";
    case Classification::kExceedsBound: return "exceeds-bound";
    case Classification::kViolation: return "VIOLATION";
  }
  return "unknown";
}

bool is_equality(Classification c) {
  switch (c) {
    case Classification::kEqualityStar:
    case Classification::kEqualityS91:
    case Classification::kEqualityFriendship:
    case Classification::kEqualitySnk:
    case Classification::kEqualityCodegree:
      return true;
    default:
      return false;
  }
}

Evaluation evaluate(Check check, const Graph& g, const VerifyOptions& opts,
                    int k) {
  const int n = g.order();
  const int m = g.size();
  SpectralResult r = spectral_radius(g, opts.tol);
  Metric metric = Measure(check, n, m, k, r.mu);

  Evaluation out;
  out.record.graph6 = to_graph6(g);
  out.record.n = n;
  out.record.m = m;
  out.record.mu = r.mu;
  out.record.bound = metric.bound;
  out.record.slack = metric.slack;

  auto make_cert = [&](const SpectralResult& tight, Metric tight_metric) {
    Certificate c;
    c.check = std::string(to_string(check));
    c.record = out.record;
    c.eigenvector = r.vec;
    c.tol = opts.tol;
    c.mu_tight = tight.mu;
    c.slack_tight = tight_metric.slack;
    return c;
  };

  if (metric.slack < -opts.equality_tol) {
    SpectralResult tight = spectral_radius(g, opts.tol / 10);
    Metric tm = Measure(check, n, m, k, tight.mu);
    if (tm.slack < -opts.equality_tol) {
      out.record.classification = check == Check::kSmallM
                                      ? Classification::kExceedsBound
                                      : Classification::kViolation;
      out.certificate = make_cert(tight, tm);
      out.certificate->recheck = true;
      return out;
    }
    // The tighter solve moved the value back inside the band.
    r = std::move(tight);
    metric = tm;
    out.record.mu = r.mu;
    out.record.slack = metric.slack;
  }

  if (std::abs(metric.slack) <= opts.equality_tol) {
    SpectralResult tight = spectral_radius(g, opts.tol / 10);
    Metric tm = Measure(check, n, m, k, tight.mu);
    auto structural = ClassifyEquality(check, g, k);
    out.record.classification = structural
                                    ? structural->first
                                    : Classification::kEqualityUnclassified;
    out.certificate = make_cert(tight, tm);
    if (structural) out.certificate->witness = std::move(structural->second);
    return out;
  }
  out.record.classification = Classification::kStrict;
  return out;
}

SummaryBuilder::SummaryBuilder(Check check, int m, int n, int k) {
  s_.check = check;
  s_.m = m;
  s_.n = n;
  s_.k = k;
}

void SummaryBuilder::add(Evaluation&& e) {
  const VerificationRecord& rec = e.record;
  ++s_.graphs;
  if (first_ || rec.mu > s_.max_mu) {
    s_.max_mu = rec.mu;
    s_.max_mu_graph6 = rec.graph6;
  }
  if (first_ || rec.slack < s_.min_slack) {
    s_.min_slack = rec.slack;
    s_.min_slack_graph6 = rec.graph6;
  }
  first_ = false;
  if (!e.certificate) return;
  switch (rec.classification) {
    case Classification::kViolation:
      s_.violations.push_back(std::move(*e.certificate));
      break;
    case Classification::kExceedsBound:
      s_.witnesses.push_back(std::move(*e.certificate));
      break;
    case Classification::kEqualityUnclassified:
      // The small-m check makes no claim about equality.
      if (s_.check == Check::kSmallM)
        s_.equality.push_back(std::move(*e.certificate));
      else
        s_.anomalies.push_back(std::move(*e.certificate));
      break;
    default:
      if (is_equality(rec.classification))
        s_.equality.push_back(std::move(*e.certificate));
      break;
  }
}

VerifySummary SummaryBuilder::finish() {
  VerifySummary s = std::move(s_);
  for (const auto& c : s.violations)
    s.findings.push_back("violation certificate for " + c.record.graph6);
  for (const auto& c : s.anomalies)
    s.findings.push_back("equality without matching structure for " +
                         c.record.graph6);
  auto count = [&](Classification cls) {
    return std::count_if(s.equality.begin(), s.equality.end(),
                         [&](const Certificate& c) {
                           return c.record.classification == cls;
                         });
  };
  switch (s.check) {
    case Check::kTheorem1:
      break;
    case Check::kTheorem2:
      if (count(Classification::kEqualityStar) != 1)
        s.findings.push_back("expected exactly one star in the equality set");
      if (count(Classification::kEqualityS91) != (s.m == 9 ? 1 : 0))
        s.findings.push_back(s.m == 9 ? "S_{9,1} missing from the equality set"
                                      : "S_{9,1} in the equality set for m != 9");
      for (const auto& c : s.equality) {
        if (c.record.classification == Classification::kEqualitySnk)
          s.findings.push_back("equality at " + c.record.graph6 +
                               ", which is neither a star nor S_{9,1}");
      }
      break;
    case Check::kSmallM:
      if (s.m >= 9 && !s.witnesses.empty())
        s.findings.push_back("graphs with mu > sqrt(m) found for m >= 9");
      if (s.m >= 4 && s.m <= 8 && !HasSnk(s.witnesses, {s.m, 1}))
        s.findings.push_back("S_{m,1} does not exceed sqrt(m)");
      break;
    case Check::kIn3:
      if (s.n % 2 == 0 && !s.equality.empty())
        s.findings.push_back("equality in mu^2 - mu <= n - 1 for even n");
      if (s.n % 2 == 1 && s.n >= 3 && s.equality.empty())
        s.findings.push_back("friendship graph missing from the equality set");
      break;
    case Check::kConjecture:
      if (!HasSnk(s.equality, {s.n, s.n / 2 - 1}))
        s.findings.push_back("S_{n,n/2-1} missing from the equality set");
      break;
    case Check::kK2k1:
      break;
  }
  return s;
}

int exit_code(const VerifySummary& s) { return s.consistent() ? 0 : 2; }

VerifySummary verify_theorem1(int m, const VerifyOptions& opts,
                              const RecordSink& sink) {
  RequireAtLeastNineEdges(m);
  return Fold(Check::kTheorem1, SpecFor(EnumSpec::Mode::kByEdges, m, 1, opts),
              m, 0, 1, opts, sink);
}

VerifySummary verify_theorem2(int m, const VerifyOptions& opts,
                              const RecordSink& sink) {
  RequireAtLeastNineEdges(m);
  return Fold(Check::kTheorem2, SpecFor(EnumSpec::Mode::kByEdges, m, 1, opts),
              m, 0, 1, opts, sink);
}

VerifySummary verify_small_m(int m, const VerifyOptions& opts,
                             const RecordSink& sink) {
  return Fold(Check::kSmallM, SpecFor(EnumSpec::Mode::kByEdges, m, 1, opts), m,
              0, 1, opts, sink);
}

VerifySummary verify_in3(int n, const VerifyOptions& opts,
                         const RecordSink& sink) {
  return Fold(Check::kIn3, SpecFor(EnumSpec::Mode::kByOrder, n, 1, opts), 0, n,
              1, opts, sink);
}

VerifySummary verify_conjecture(int n, const VerifyOptions& opts,
                                const RecordSink& sink) {
  if (n % 2 != 0)
    throw std::invalid_argument("the cubic inequality is stated for even n");
  return Fold(Check::kConjecture, SpecFor(EnumSpec::Mode::kByOrder, n, 1, opts),
              0, n, 1, opts, sink);
}

VerifySummary verify_k2k1(int n, int k, const VerifyOptions& opts,
                          const RecordSink& sink) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return Fold(Check::kK2k1, SpecFor(EnumSpec::Mode::kByOrder, n, k, opts), 0,
              n, k, opts, sink);
}

std::vector<SrgRow> srg_table_check() {
  static constexpr int kRows[][3] = {
      {2, 16, 6}, {3, 45, 12}, {4, 96, 20}, {5, 175, 30}, {6, 36, 15}};
  std::vector<SrgRow> out;
  for (const auto& row : kRows) {
    SrgRow r;
    r.k = row[0];
    r.n = row[1];
    r.mu = row[2];
    r.lhs = static_cast<long>(r.mu) * r.mu - r.mu;
    r.rhs = static_cast<long>(r.k) * (r.n - 1);
    r.exact = r.lhs == r.rhs;
    out.push_back(r);
  }
  return out;
}

}  // namespace c4free
