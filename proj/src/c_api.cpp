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

#include "c4free/c4free.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "c4free/canonical.hpp"
#include "c4free/enumerate.hpp"
#include "c4free/errors.hpp"
#include "c4free/graph6.hpp"
#include "c4free/report.hpp"
#include "c4free/search.hpp"
#include "c4free/spectral.hpp"
#include "c4free/verify.hpp"

struct c4_graph {
  c4free::Graph graph;
};

struct c4_report {
  c4free::VerifySummary summary;
  std::string json;
};

struct c4_search {
  c4free::SearchState state;
  std::string graph6;
  std::string json;
};

namespace {

thread_local std::string last_error;

struct StopEnumeration {};

void SetError(const std::string& msg) { last_error = msg; }

template <typename F>
c4_status Guard(F&& f) {
  try {
    last_error.clear();
    f();
    return C4_OK;
  } catch (const c4free::CapExceeded& e) {
    SetError(e.what());
    return C4_ERR_CAP_EXCEEDED;
  } catch (const c4free::NoConvergence& e) {
    SetError(e.what());
    return C4_ERR_NO_CONVERGENCE;
  } catch (const c4free::ParseError& e) {
    SetError(e.what());
    return C4_ERR_PARSE;
  } catch (const c4free::IoError& e) {
    SetError(e.what());
    return C4_ERR_IO;
  } catch (const c4free::PreconditionFailed& e) {
    SetError(e.what());
    return C4_ERR_PRECONDITION;
  } catch (const std::invalid_argument& e) {
    SetError(e.what());
    return C4_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    SetError(e.what());
    return C4_ERR_INTERNAL;
  } catch (...) {
    SetError("unknown error");
    return C4_ERR_INTERNAL;
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
void RequireOut(T* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " must not be NULL");
}

c4free::VerifyOptions ToVerifyOptions(const c4_options* opts) {
  c4_options o;
  c4_options_init(&o);
  if (opts != nullptr) o = *opts;
  if (!(o.tol > 0 && o.tol <= 1e-6))
    throw std::invalid_argument("tol must lie in (0, 1e-6]");
  if (o.workers < 1) throw std::invalid_argument("workers must be at least 1");
  c4free::VerifyOptions v;
  v.tol = o.tol;
  v.workers = o.workers;
  v.edge_cap = o.edge_cap;
  v.order_cap = o.order_cap;
  return v;
}

c4_graph* Wrap(c4free::Graph g) { return new c4_graph{std::move(g)}; }

}  // namespace

extern "C" {

void c4_options_init(c4_options* opts) {
  if (opts == nullptr) return;
  opts->tol = c4free::kDefaultTolerance;
  opts->workers = 1;
  opts->edge_cap = 16;
  opts->order_cap = 10;
  opts->seed = 1;
  opts->restarts = 4;
}

const char* c4_last_error(void) { return last_error.c_str(); }

const char* c4_version(void) { return "0.1.0"; }

void c4_string_free(char* s) { std::free(s); }

c4_status c4_graph_from_graph6(const char* text, c4_graph** out) {
  return Guard([&] {
    RequireOut(text, "text");
    RequireOut(out, "out");
    *out = Wrap(c4free::from_graph6(text));
  });
}

c4_status c4_graph_from_edges(int n, const int* endpoints, size_t num_edges,
                              c4_graph** out) {
  return Guard([&] {
    RequireOut(out, "out");
    if (num_edges > 0) RequireOut(endpoints, "endpoints");
    std::vector<c4free::Edge> edges;
    for (size_t i = 0; i < num_edges; ++i)
      edges.emplace_back(endpoints[2 * i], endpoints[2 * i + 1]);
    for (const auto& e : edges)
      if (e.u == e.v) throw std::invalid_argument("self-loop");
    *out = Wrap(c4free::Graph(n, edges));
  });
}

c4_status c4_make_star(int n, c4_graph** out) {
  return Guard([&] {
    RequireOut(out, "out");
    *out = Wrap(c4free::make_star(n));
  });
}

c4_status c4_make_snk(int n, int k, c4_graph** out) {
  return Guard([&] {
    RequireOut(out, "out");
    *out = Wrap(c4free::make_snk({n, k}));
  });
}

c4_status c4_make_friendship(int k, c4_graph** out) {
  return Guard([&] {
    RequireOut(out, "out");
    *out = Wrap(c4free::make_friendship(k));
  });
}

void c4_graph_free(c4_graph* g) { delete g; }

int c4_graph_order(const c4_graph* g) { return g ? g->graph.order() : -1; }

int c4_graph_size(const c4_graph* g) { return g ? g->graph.size() : -1; }

c4_status c4_graph_to_graph6(const c4_graph* g, char** out) {
  return Guard([&] {
    RequireOut(g, "graph");
    RequireOut(out, "out");
    *out = CopyString(c4free::to_graph6(g->graph));
  });
}

c4_status c4_graph_canonical_form(const c4_graph* g, char** out) {
  return Guard([&] {
    RequireOut(g, "graph");
    RequireOut(out, "out");
    *out = CopyString(c4free::canonical_form(g->graph));
  });
}

c4_status c4_graph_common_neighbors(const c4_graph* g, int u, int v, int* out) {
  return Guard([&] {
    RequireOut(g, "graph");
    RequireOut(out, "out");
    *out = c4free::common_neighbors(g->graph, u, v);
  });
}

c4_status c4_graph_has_k2kp1(const c4_graph* g, int k, int* out) {
  return Guard([&] {
    RequireOut(g, "graph");
    RequireOut(out, "out");
    *out = c4free::has_k2kp1(g->graph, k) ? 1 : 0;
  });
}

c4_status c4_spectral_radius(const c4_graph* g, double tol, double* mu,
                             double* vec, double* residual, long* iters) {
  return Guard([&] {
    RequireOut(g, "graph");
    RequireOut(mu, "mu");
    const c4free::SpectralResult r = c4free::spectral_radius(g->graph, tol);
    *mu = r.mu;
    if (vec != nullptr) std::copy(r.vec.begin(), r.vec.end(), vec);
    if (residual != nullptr) *residual = r.residual;
    if (iters != nullptr) *iters = r.iters;
  });
}

c4_status c4_snk_mu(int n, int k, double* mu) {
  return Guard([&] {
    RequireOut(mu, "mu");
    *mu = c4free::snk_mu({n, k});
  });
}

c4_status c4_snk_report_json(int n, int k, char** out) {
  return Guard([&] {
    RequireOut(out, "out");
    *out = CopyString(c4free::snk_report({n, k}).dump(2));
  });
}

c4_status c4_enumerate(c4_enum_mode mode, int value, int max_codegree,
                       const c4_options* opts, c4_graph_callback cb,
                       void* user, long* count) {
  return Guard([&] {
    RequireOut(cb, "callback");
    const c4free::VerifyOptions v = ToVerifyOptions(opts);
    c4free::EnumSpec spec;
    spec.mode = mode == C4_BY_ORDER ? c4free::EnumSpec::Mode::kByOrder
                                    : c4free::EnumSpec::Mode::kByEdges;
    spec.value = value;
    spec.max_codegree = max_codegree;
    spec.workers = v.workers;
    spec.edge_cap = v.edge_cap;
    spec.order_cap = v.order_cap;
    long emitted = 0;
    try {
      c4free::enumerate(spec, [&](const c4free::Graph& g) {
        ++emitted;
        if (cb(c4free::to_graph6(g).c_str(), user) != 0) throw StopEnumeration{};
      });
    } catch (const StopEnumeration&) {
    }
    if (count != nullptr) *count = emitted;
  });
}

c4_status c4_verify(c4_check check, int value, int k, const c4_options* opts,
                    const char* records_path, c4_format format,
                    c4_report** out) {
  return Guard([&] {
    RequireOut(out, "out");
    const c4free::VerifyOptions v = ToVerifyOptions(opts);
    std::ofstream file;
    std::ostream* stream = nullptr;
    if (records_path != nullptr) {
      if (std::strcmp(records_path, "-") == 0) {
        stream = &std::cout;
      } else {
        file.open(records_path);
        if (!file)
          throw c4free::IoError(std::string("cannot open records file ") +
                                records_path);
        stream = &file;
      }
    }
    std::unique_ptr<c4free::RecordWriter> writer;
    if (stream != nullptr) {
      writer = std::make_unique<c4free::RecordWriter>(
          *stream, format == C4_FORMAT_CSV ? c4free::RecordFormat::kCsv
                                           : c4free::RecordFormat::kJsonLines);
    }
    c4free::RecordSink sink;
    if (writer) sink = [&](const c4free::VerificationRecord& r) { writer->write(r); };

    auto report = std::make_unique<c4_report>();
    switch (check) {
      case C4_CHECK_THEOREM1:
        report->summary = c4free::verify_theorem1(value, v, sink);
        break;
      case C4_CHECK_THEOREM2:
        report->summary = c4free::verify_theorem2(value, v, sink);
        break;
      case C4_CHECK_SMALL_M:
        report->summary = c4free::verify_small_m(value, v, sink);
        break;
      case C4_CHECK_IN3:
        report->summary = c4free::verify_in3(value, v, sink);
        break;
      case C4_CHECK_CONJECTURE:
        report->summary = c4free::verify_conjecture(value, v, sink);
        break;
      case C4_CHECK_K2K1:
        report->summary = c4free::verify_k2k1(value, k, v, sink);
        break;
      default:
        throw std::invalid_argument("unknown check");
    }
    stream = nullptr;
    if (file.is_open()) {
      file.close();
      if (!file) throw c4free::IoError(std::string("failed writing ") + records_path);
    } else if (records_path != nullptr) {
      std::cout.flush();
    }
    report->json = c4free::to_json(report->summary).dump(2);
    *out = report.release();
  });
}

void c4_report_free(c4_report* r) { delete r; }

const char* c4_report_summary_json(const c4_report* r) {
  return r ? r->json.c_str() : "";
}

int c4_report_exit_code(const c4_report* r) {
  return r ? c4free::exit_code(r->summary) : 1;
}

long c4_report_graph_count(const c4_report* r) { return r ? r->summary.graphs : 0; }

double c4_report_max_mu(const c4_report* r) { return r ? r->summary.max_mu : 0.0; }

c4_status c4_report_write_certificates(const c4_report* r, const char* dir,
                                       int* written) {
  return Guard([&] {
    RequireOut(r, "report");
    RequireOut(dir, "dir");
    const auto paths = c4free::emit_certificates(r->summary, dir);
    if (written != nullptr) *written = static_cast<int>(paths.size());
  });
}

c4_status c4_srg_table_json(char** out, int* all_exact) {
  return Guard([&] {
    RequireOut(out, "out");
    const auto rows = c4free::srg_table_check();
    bool exact = true;
    for (const auto& row : rows) exact &= row.exact;
    if (all_exact != nullptr) *all_exact = exact ? 1 : 0;
    *out = CopyString(c4free::to_json(rows).dump(2));
  });
}

c4_status c4_search_run(int m, const c4_options* opts, c4_search** out) {
  return Guard([&] {
    RequireOut(out, "out");
    c4_options o;
    c4_options_init(&o);
    if (opts != nullptr) o = *opts;
    const c4free::VerifyOptions v = ToVerifyOptions(&o);
    c4free::SearchOptions so;
    so.tol = v.tol;
    so.workers = v.workers;
    auto s = std::make_unique<c4_search>();
    s->state = c4free::hill_climb(m, o.restarts, o.seed, so);
    s->graph6 = c4free::to_graph6(s->state.current);
    s->json = c4free::to_json(s->state).dump(2);
    *out = s.release();
  });
}

void c4_search_free(c4_search* s) { delete s; }

double c4_search_mu(const c4_search* s) { return s ? s->state.mu : 0.0; }

const char* c4_search_graph6(const c4_search* s) { return s ? s->graph6.c_str() : ""; }

const char* c4_search_json(const c4_search* s) { return s ? s->json.c_str() : ""; }

}  // extern "C"
