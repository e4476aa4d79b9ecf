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

#include <string>
#include <string_view>

#include "r55/graph.hpp"

namespace r55 {

// Standard graph6: order byte(s), then the upper triangle taken column by
// column (x(0,1), x(0,2), x(1,2), x(0,3), ...) in big-endian 6-bit groups,
// each offset by 63. Orders up to 62 use one header byte; 63 and 64 use the
// '~' + 3 byte form.
std::string graph6_encode(const Graph& g);

// Throws ValidationError on malformed input. A trailing newline and an
// optional ">>graph6<<" header are accepted.
Graph graph6_decode(std::string_view text);

}  // namespace r55
