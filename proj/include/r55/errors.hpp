// Copyright 2026 The r55 Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace r55 {

// Bad input: malformed graph6, out-of-range vertex, precondition violation.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configured budget (nodes, seconds, catalog bytes) ran out.
class ResourceExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; always a bug or corrupted input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

#define R55_CHECK(cond, msg)                                                 \
  do {                                                                       \
    if (!(cond)) {                                                           \
      throw ::r55::InvariantViolation(std::string(__FILE__) + ":" +          \
                                      std::to_string(__LINE__) + ": " + msg); \
    }                                                                        \
  } while (false)

}  // namespace r55
