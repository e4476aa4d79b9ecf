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

#include "r55/graph6.hpp"

#include "r55/errors.hpp"

namespace r55 {

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  out.reserve(4 + (bits + 5) / 6);
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    const VertexSet col = g.row(j);
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>((col >> i) & 1U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ValidationError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ValidationError("graph6: byte out of range in '" +
                            std::string(text) + "'");
    }
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == '~') {
      throw ValidationError("graph6: unsupported order header");
    }
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n > kMaxVertices) {
    throw ValidationError("graph6: order " + std::to_string(n) +
                          " exceeds 64");
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ValidationError("graph6: expected " + std::to_string(bytes) +
                          " data bytes for order " + std::to_string(n));
  }
  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad = static_cast<int>(6 - bits % 6);
    const int last = text.back() - 63;
    if (last & ((1 << pad) - 1)) {
      throw ValidationError("graph6: nonzero padding bits");
    }
  }
  return g;
}

}  // namespace r55
