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

#ifndef C4FREE_ERRORS_HPP_
#define C4FREE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace c4free {

// Thrown when an enumeration or verification parameter exceeds a desk-scale
// cap. The message names the cap and the flag that overrides it.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The eigensolver hit its iteration cap without meeting the residual
// tolerance. Never swallowed: callers either propagate or report it.
class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of a property check does not hold for the given instance.
class PreconditionFailed : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace c4free

#endif  // C4FREE_ERRORS_HPP_
