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

#include "c4free/report.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "c4free/errors.hpp"
#include "c4free/graph6.hpp"

namespace c4free {
namespace {

Json EdgesJson(const std::vector<Edge>& edges) {
  Json arr = Json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

std::vector<Edge> EdgesFromJson(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

Classification ClassificationFromString(const std::string& s) {
  for (int i = 0; i <= static_cast<int>(Classification::kViolation); ++i) {
    const auto c = static_cast<Classification>(i);
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown classification '" + s + "'");
}

Json CertificateList(const std::vector<Certificate>& certs) {
  Json arr = Json::array();
  for (const auto& c : certs) arr.push_back(to_json(c));
  return arr;
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

RecordWriter::RecordWriter(std::ostream& out, RecordFormat format)
    : out_(out), format_(format) {
  if (format_ == RecordFormat::kCsv)
    out_ << "graph6,n,m,mu,bound,slack,classification\n";
}

void RecordWriter::write(const VerificationRecord& rec) {
  if (format_ == RecordFormat::kCsv) {
    // graph6 bytes are in 63..126, so no field needs quoting.
    out_ << rec.graph6 << ',' << rec.n << ',' << rec.m << ','
         << format_double(rec.mu) << ',' << format_double(rec.bound) << ','
         << format_double(rec.slack) << ',' << to_string(rec.classification)
         << '\n';
  } else {
    out_ << to_json(rec).dump() << '\n';
  }
}

Json to_json(const VerificationRecord& rec) {
  return Json{{"graph6", rec.graph6},
              {"n", rec.n},
              {"m", rec.m},
              {"mu", rec.mu},
              {"bound", rec.bound},
              {"slack", rec.slack},
              {"classification", to_string(rec.classification)}};
}

VerificationRecord record_from_json(const Json& j) {
  VerificationRecord rec;
  rec.graph6 = j.at("graph6").get<std::string>();
  rec.n = j.at("n").get<int>();
  rec.m = j.at("m").get<int>();
  rec.mu = j.at("mu").get<double>();
  rec.bound = j.at("bound").get<double>();
  rec.slack = j.at("slack").get<double>();
  rec.classification =
      ClassificationFromString(j.at("classification").get<std::string>());
  return rec;
}

Json to_json(const StructuralWitness& w) {
  Json j{{"kind", w.kind}};
  if (w.hub >= 0) j["hub"] = w.hub;
  if (w.kind == "snk" || w.kind == "star") {
    j["n"] = w.snk.n;
    j["k"] = w.snk.k;
    j["matched_pairs"] = EdgesJson(w.matching);
  }
  if (w.kind == "friendship" || w.kind == "codegree") j["codegree"] = w.codegree;
  return j;
}

Json to_json(const Certificate& c) {
  Json j{{"check", c.check}};
  j.update(to_json(c.record));
  j["tol"] = c.tol;
  j["mu_tight"] = c.mu_tight;
  j["tol_tight"] = c.tol / 10;
  j["slack_tight"] = c.slack_tight;
  j["recheck"] = c.recheck;
  j["eigenvector"] = c.eigenvector;
  j["witness"] = c.witness ? to_json(*c.witness) : Json(nullptr);
  return j;
}

Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.check = j.at("check").get<std::string>();
  c.record = record_from_json(j);
  c.tol = j.at("tol").get<double>();
  c.mu_tight = j.at("mu_tight").get<double>();
  c.slack_tight = j.at("slack_tight").get<double>();
  c.recheck = j.at("recheck").get<bool>();
  c.eigenvector = j.at("eigenvector").get<std::vector<double>>();
  if (!j.at("witness").is_null()) {
    const Json& w = j.at("witness");
    StructuralWitness sw;
    sw.kind = w.at("kind").get<std::string>();
    sw.hub = w.value("hub", -1);
    if (w.contains("n")) sw.snk = {w.at("n").get<int>(), w.at("k").get<int>()};
    if (w.contains("matched_pairs")) sw.matching = EdgesFromJson(w.at("matched_pairs"));
    sw.codegree = w.value("codegree", 0);
    c.witness = std::move(sw);
  }
  return c;
}

Json to_json(const VerifySummary& s) {
  Json j{{"check", to_string(s.check)}};
  switch (s.check) {
    case Check::kTheorem1:
    case Check::kTheorem2:
    case Check::kSmallM:
      j["m"] = s.m;
      j["bound"] = std::sqrt(static_cast<double>(s.m));
      break;
    case Check::kK2k1:
      j["n"] = s.n;
      j["k"] = s.k;
      break;
    default:
      j["n"] = s.n;
      break;
  }
  j["graphs"] = s.graphs;
  j["max_mu"] = s.max_mu;
  j["max_mu_graph6"] = s.max_mu_graph6;
  j["min_slack"] = s.min_slack;
  j["min_slack_graph6"] = s.min_slack_graph6;
  j["equality"] = CertificateList(s.equality);
  j["violations"] = CertificateList(s.violations);
  j["anomalies"] = CertificateList(s.anomalies);
  if (s.check == Check::kSmallM) j["witnesses"] = CertificateList(s.witnesses);
  j["findings"] = s.findings;
  j["consistent"] = s.consistent();
  j["exit_code"] = exit_code(s);
  return j;
}

Json to_json(const std::vector<MoveRecord>& moves) {
  Json arr = Json::array();
  for (const auto& mv : moves) {
    arr.push_back(Json{{"removed", EdgesJson(mv.removed)},
                       {"added", EdgesJson(mv.added)},
                       {"mu_before", mv.mu_before},
                       {"mu_after", mv.mu_after}});
  }
  return arr;
}

Json to_json(const SearchState& s) {
  return Json{{"graph6", to_graph6(s.current)},
              {"n", s.current.order()},
              {"m", s.current.size()},
              {"mu", s.mu},
              {"sqrt_m", std::sqrt(static_cast<double>(s.current.size()))},
              {"seed", s.seed},
              {"restart", s.restart},
              {"moves", to_json(s.moves)}};
}

Json to_json(const std::vector<SrgRow>& rows) {
  Json arr = Json::array();
  for (const auto& r : rows) {
    arr.push_back(Json{{"k", r.k},
                       {"n", r.n},
                       {"mu", r.mu},
                       {"mu2_minus_mu", r.lhs},
                       {"k_times_n_minus_1", r.rhs},
                       {"exact", r.exact}});
  }
  return arr;
}

Json snk_report(SnkParams p) {
  p.validate();
  const double mu = snk_mu(p);
  const auto [lhs, rhs] = snk_bound_identity(p);
  const SpectralResult r = spectral_radius(make_snk(p));
  const double s = std::sqrt(static_cast<double>(p.n - 1 + p.k));
  return Json{{"n", p.n},
              {"k", p.k},
              {"m", p.n - 1 + p.k},
              {"mu", mu},
              {"mu_eigensolver", r.mu},
              {"coefficients", {1, -1, -(p.n - 1), p.n - 1 - 2 * p.k}},
              {"xmin", xmin(p.n)},
              {"sqrt_n_minus_1_plus_k", s},
              {"identity_lhs", lhs},
              {"identity_rhs", rhs},
              {"mu_exceeds_sqrt", mu > s + 1e-9}};
}

void emit_certificate(const Certificate& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open certificate file " + path.string());
  out << to_json(c).dump(2) << '\n';
  if (!out) throw IoError("failed writing certificate file " + path.string());
}

std::vector<std::filesystem::path> emit_certificates(
    const VerifySummary& s, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw IoError("cannot create certificate directory " +
                             dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  int index = 0;
  for (const auto* list : {&s.violations, &s.anomalies, &s.equality, &s.witnesses}) {
    for (const auto& c : *list) {
      auto path = dir / (std::string(to_string(s.check)) + "-" +
                         std::to_string(index++) + "-" +
                         std::string(to_string(c.record.classification)) + ".json");
      emit_certificate(c, path);
      written.push_back(std::move(path));
    }
  }
  return written;
}

}  // namespace c4free
