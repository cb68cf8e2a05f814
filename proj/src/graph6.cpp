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

#include "c4free/graph6.hpp"

#include <cstdint>
#include <vector>

#include "c4free/errors.hpp"

namespace c4free {
namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void AppendOrder(std::string& out, int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
}

int SixBits(char c) {
  const int v = static_cast<unsigned char>(c) - kOffset;
  if (v < 0 || v > 63) {
    throw ParseError("graph6: byte " + std::to_string(static_cast<int>(
                                           static_cast<unsigned char>(c))) +
                     " outside printable range 63..126");
  }
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  AppendOrder(out, n);
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kOffset));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  size_t pos = 0;
  int64_t n = 0;
  if (text[0] != 126) {
    n = SixBits(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    for (size_t i = 1; i <= 3; ++i) n = (n << 6) | SixBits(text[i]);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated order field");
    for (size_t i = 2; i <= 7; ++i) n = (n << 6) | SixBits(text[i]);
    pos = 8;
  }
  if (n > (1 << 20)) throw ParseError("graph6: order too large");

  const int64_t nbits = n * (n - 1) / 2;
  const int64_t nbytes = (nbits + 5) / 6;
  if (static_cast<int64_t>(text.size() - pos) != nbytes) {
    throw ParseError("graph6: expected " + std::to_string(nbytes) +
                     " data bytes for order " + std::to_string(n) + ", got " +
                     std::to_string(text.size() - pos));
  }

  std::vector<Edge> edges;
  int64_t bit = 0;
  auto take = [&]() -> bool {
    const int byte = SixBits(text[pos + bit / 6]);
    const bool set = (byte >> (5 - bit % 6)) & 1;
    ++bit;
    return set;
  };
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i)
      if (take()) edges.emplace_back(i, j);
  while (bit < nbytes * 6) {
    if (take()) throw ParseError("graph6: non-zero padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

}  // namespace c4free
