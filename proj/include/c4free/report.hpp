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

#ifndef C4FREE_REPORT_HPP_
#define C4FREE_REPORT_HPP_

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "c4free/search.hpp"
#include "c4free/verify.hpp"
#include "json.hpp"

namespace c4free {

using Json = nlohmann::ordered_json;

enum class RecordFormat { kJsonLines, kCsv };

// Shortest text that parses back to the same double.
std::string format_double(double x);

// Streams verification records, one per line. CSV output starts with the
// header graph6,n,m,mu,bound,slack,classification.
class RecordWriter {
 public:
  RecordWriter(std::ostream& out, RecordFormat format);
  void write(const VerificationRecord& rec);

 private:
  std::ostream& out_;
  RecordFormat format_;
};

Json to_json(const VerificationRecord& rec);
Json to_json(const StructuralWitness& w);
Json to_json(const Certificate& c);
Json to_json(const VerifySummary& s);
Json to_json(const SearchState& s);
Json to_json(const std::vector<MoveRecord>& moves);
Json to_json(const std::vector<SrgRow>& rows);

VerificationRecord record_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

// mu(S_{n,k}) from the cubic and from the eigensolver, the cubic's
// coefficients, xmin(n), and both sides of the sqrt(n-1+k) identity.
Json snk_report(SnkParams p);

// Writes a self-contained certificate document. Throws IoError naming
// the path on I/O failure.
void emit_certificate(const Certificate& c, const std::filesystem::path& path);

// Writes every equality, violation, anomaly and witness certificate of a
// summary into `dir` as <check>-<index>-<classification>.json and returns
// the paths written.
std::vector<std::filesystem::path> emit_certificates(
    const VerifySummary& s, const std::filesystem::path& dir);

}  // namespace c4free

#endif  // C4FREE_REPORT_HPP_
