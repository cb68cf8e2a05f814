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

#ifndef C4FREE_GRAPH6_HPP_
#define C4FREE_GRAPH6_HPP_

#include <string>
#include <string_view>

#include "c4free/graph.hpp"

namespace c4free {

// graph6: the order N(n) followed by the upper triangle of the adjacency
// matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte with printable offset 63 and zero padding.
std::string to_graph6(const Graph& g);

// Accepts an optional ">>graph6<<" header and trailing newline. Throws
// ParseError on malformed input, including non-zero padding bits.
Graph from_graph6(std::string_view text);

}  // namespace c4free

#endif  // C4FREE_GRAPH6_HPP_
