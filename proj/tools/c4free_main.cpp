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

// Command-line front end. Talks to the library only through c4free.h.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <string_view>

#include "CLI11.hpp"
#include "c4free/c4free.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitViolation = 2;

struct Flags {
  int m = 0;
  int n = 0;
  int k = 1;
  double tol = 1e-12;
  uint64_t seed = 1;
  int workers = 1;
  int restarts = 4;
  int max_edges = 16;
  int max_order = 10;
  std::string output;
  std::string format = "json";
  std::string cert_dir;
};

struct StringDeleter {
  void operator()(char* s) const { c4_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct ReportDeleter {
  void operator()(c4_report* r) const { c4_report_free(r); }
};
struct SearchDeleter {
  void operator()(c4_search* s) const { c4_search_free(s); }
};
struct GraphDeleter {
  void operator()(c4_graph* g) const { c4_graph_free(g); }
};

int Fail(c4_status status) {
  std::cerr << "c4free: " << c4_last_error() << " (status " << status << ")\n";
  return kExitError;
}

c4_options ToOptions(const Flags& f) {
  c4_options o;
  c4_options_init(&o);
  o.tol = f.tol;
  o.workers = f.workers;
  o.edge_cap = f.max_edges;
  o.order_cap = f.max_order;
  o.seed = f.seed;
  o.restarts = f.restarts;
  return o;
}

int RunVerify(c4_check check, int value, const Flags& f) {
  const c4_options opts = ToOptions(f);
  const char* path = f.output.empty() ? nullptr : f.output.c_str();
  const c4_format format = f.format == "csv" ? C4_FORMAT_CSV : C4_FORMAT_JSONL;
  c4_report* raw = nullptr;
  if (c4_status s = c4_verify(check, value, f.k, &opts, path, format, &raw))
    return Fail(s);
  std::unique_ptr<c4_report, ReportDeleter> report(raw);
  if (!f.cert_dir.empty()) {
    int written = 0;
    if (c4_status s =
            c4_report_write_certificates(report.get(), f.cert_dir.c_str(),
                                         &written))
      return Fail(s);
  }
  // Records on stdout would interleave with the summary, so the summary
  // moves to stderr in that case.
  std::ostream& out = f.output == "-" ? std::cerr : std::cout;
  out << c4_report_summary_json(report.get()) << '\n';
  return c4_report_exit_code(report.get());
}

int WriteGraph6(const char* g6, void* user) {
  std::FILE* f = static_cast<std::FILE*>(user);
  std::fputs(g6, f);
  std::fputc('\n', f);
  return 0;
}

int RunEnumerate(const Flags& f) {
  if ((f.m > 0) == (f.n > 0)) {
    std::cerr << "c4free: enumerate needs exactly one of --m or --n\n";
    return kExitError;
  }
  const c4_options opts = ToOptions(f);
  std::FILE* out = stdout;
  if (!f.output.empty() && f.output != "-") {
    out = std::fopen(f.output.c_str(), "w");
    if (out == nullptr) {
      std::cerr << "c4free: cannot open " << f.output << '\n';
      return kExitError;
    }
  }
  long count = 0;
  const c4_status s =
      c4_enumerate(f.m > 0 ? C4_BY_EDGES : C4_BY_ORDER, f.m > 0 ? f.m : f.n,
                   f.k, &opts, WriteGraph6, out, &count);
  const bool write_failed = out != stdout && std::fclose(out) != 0;
  if (s != C4_OK) return Fail(s);
  if (write_failed) {
    std::cerr << "c4free: failed writing " << f.output << '\n';
    return kExitError;
  }
  std::cerr << count << " graphs\n";
  return 0;
}

int RunSearch(const Flags& f) {
  const c4_options opts = ToOptions(f);
  c4_search* raw = nullptr;
  if (c4_status s = c4_search_run(f.m, &opts, &raw)) return Fail(s);
  std::unique_ptr<c4_search, SearchDeleter> search(raw);
  std::cout << c4_search_json(search.get()) << '\n';
  // Beating sqrt(m) for m >= 9 would be an anomaly worth flagging.
  const double mu = c4_search_mu(search.get());
  if (f.m >= 9 && mu > std::sqrt(static_cast<double>(f.m)) + 1e-9)
    return kExitViolation;
  return 0;
}

int RunSnk(const Flags& f) {
  char* raw = nullptr;
  if (c4_status s = c4_snk_report_json(f.n, f.k, &raw)) return Fail(s);
  OwnedString json(raw);
  std::cout << json.get() << '\n';
  return 0;
}

int RunSrgTable() {
  char* raw = nullptr;
  int all_exact = 0;
  if (c4_status s = c4_srg_table_json(&raw, &all_exact)) return Fail(s);
  OwnedString json(raw);
  std::cout << json.get() << '\n';
  return all_exact ? 0 : kExitViolation;
}

// Reads graph6 lines from stdin and prints "<graph6> <mu>" per line.
int RunRadius(const Flags& f) {
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    c4_graph* raw = nullptr;
    if (c4_status s = c4_graph_from_graph6(line.c_str(), &raw)) return Fail(s);
    std::unique_ptr<c4_graph, GraphDeleter> g(raw);
    double mu = 0;
    if (c4_status s =
            c4_spectral_radius(g.get(), f.tol, &mu, nullptr, nullptr, nullptr))
      return Fail(s);
    char buf[32];
    auto end = std::to_chars(buf, buf + sizeof buf, mu).ptr;
    std::cout << line << ' ' << std::string_view(buf, end - buf) << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral extremal checks for C4-free graphs"};
  app.require_subcommand(1);
  Flags f;

  const auto tolerance = CLI::Validator(
      [](std::string& s) -> std::string {
        double v = 0;
        try {
          v = std::stod(s);
        } catch (...) {
          return "not a number";
        }
        if (!(v > 0 && v <= 1e-6)) return "tol must lie in (0, 1e-6]";
        return {};
      },
      "(0,1e-6]");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--tol", f.tol, "Eigensolver residual tolerance")
        ->check(tolerance);
    sub->add_option("--workers", f.workers, "Worker threads")
        ->check(CLI::Range(1, 256));
    sub->add_option("--max-edges", f.max_edges, "Edge cap for enumeration")
        ->check(CLI::Range(1, 63));
    sub->add_option("--max-order", f.max_order, "Order cap for enumeration")
        ->check(CLI::Range(1, 64));
  };
  auto records = [&](CLI::App* sub) {
    sub->add_option("--output", f.output, "Record file, - for stdout");
    sub->add_option("--format", f.format, "Record format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--cert-dir", f.cert_dir, "Directory for certificates");
  };

  struct VerifyCommand {
    const char* name;
    const char* help;
    c4_check check;
    bool by_edges;
  };
  const VerifyCommand verify_commands[] = {
      {"verify-th1", "mu^2 <= m over C4-free graphs with m edges",
       C4_CHECK_THEOREM1, true},
      {"verify-th2", "as verify-th1, with the equality set pinned down",
       C4_CHECK_THEOREM2, true},
      {"verify-small-m", "graphs with mu > sqrt(m)", C4_CHECK_SMALL_M, true},
      {"verify-in3", "mu^2 - mu <= n - 1 over C4-free graphs of order n",
       C4_CHECK_IN3, false},
      {"verify-conjecture", "cubic bound for even n", C4_CHECK_CONJECTURE,
       false},
      {"verify-k2k1", "bound for graphs without K_{2,k+1}", C4_CHECK_K2K1,
       false},
  };
  std::vector<std::pair<CLI::App*, const VerifyCommand*>> verify_subs;
  for (const VerifyCommand& vc : verify_commands) {
    CLI::App* sub = app.add_subcommand(vc.name, vc.help);
    if (vc.by_edges) {
      sub->add_option("--m", f.m, "Edge count")->required()->check(
          CLI::PositiveNumber);
    } else {
      sub->add_option("--n", f.n, "Order")->required()->check(
          CLI::PositiveNumber);
    }
    if (vc.check == C4_CHECK_K2K1)
      sub->add_option("--k", f.k, "Codegree bound")->check(CLI::PositiveNumber);
    common(sub);
    records(sub);
    verify_subs.emplace_back(sub, &vc);
  }

  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "List graphs as graph6 lines, one per isomorphism class");
  enumerate->add_option("--m", f.m, "Edge count")->check(CLI::PositiveNumber);
  enumerate->add_option("--n", f.n, "Order")->check(CLI::PositiveNumber);
  enumerate->add_option("--k", f.k, "Largest codegree (1 = C4-free)")
      ->check(CLI::PositiveNumber);
  enumerate->add_option("--output", f.output, "Output file, - for stdout");
  enumerate->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"graph6-lines"}))
      ->default_val("graph6-lines");
  common(enumerate);

  CLI::App* search = app.add_subcommand("search", "Hill-climb mu at fixed m");
  search->add_option("--m", f.m, "Edge count")->required()->check(
      CLI::PositiveNumber);
  search->add_option("--seed", f.seed, "Master seed");
  search->add_option("--restarts", f.restarts, "Restarts")
      ->check(CLI::Range(1, 100000));
  common(search);

  CLI::App* snk = app.add_subcommand("snk", "Spectral radius of S_{n,k}");
  snk->add_option("--n", f.n, "Order")->required();
  snk->add_option("--k", f.k, "Matching size")->required();

  CLI::App* srg = app.add_subcommand("srg-table", "Strongly regular rows");

  CLI::App* radius =
      app.add_subcommand("radius", "Spectral radius of graph6 lines on stdin");
  radius->add_option("--tol", f.tol, "Eigensolver residual tolerance")
      ->check(tolerance);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  for (const auto& [sub, vc] : verify_subs) {
    if (sub->parsed())
      return RunVerify(vc->check, vc->by_edges ? f.m : f.n, f);
  }
  if (enumerate->parsed()) return RunEnumerate(f);
  if (search->parsed()) return RunSearch(f);
  if (snk->parsed()) return RunSnk(f);
  if (srg->parsed()) return RunSrgTable();
  if (radius->parsed()) return RunRadius(f);
  return kExitError;
}
