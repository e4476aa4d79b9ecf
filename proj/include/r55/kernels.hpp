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

// Bit-row kernels shared by refinement, edge counting and the excess
// identity. Each kernel has a portable scalar reference and vector variants
// (AVX2, AVX-512 VPOPCNTDQ); the variant is picked once at startup from CPU
// features and may be overridden with R55_SIMD=scalar|avx2|avx512 or
// set_backend(). All variants must return identical results.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "r55/graph.hpp"

namespace r55::kernels {

enum class Backend { kScalar, kAvx2, kAvx512 };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
std::vector<Backend> supported_backends();
Backend active_backend();
// Throws ValidationError when the CPU lacks the requested instructions.
void set_backend(Backend b);

// out[i] = popcount(rows[i] & mask). out.size() >= rows.size().
void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out);

// Sum over i in `subset` of popcount(rows[i] & subset): twice the number of
// edges induced on `subset`. Bits of `subset` at or past rows.size() are
// ignored.
std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset);

// Edge counts of the neighbourhood and co-neighbourhood of every vertex:
// plus[v] = e(G[N(v)]), minus[v] = e(G[V \ N[v]]).
void split_edge_counts(const Graph& g, std::span<int> plus,
                       std::span<int> minus);

// Per-variant entry points, exposed for equivalence tests and benchmarks.
namespace scalar {
void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out);
std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset);
}  // namespace scalar

namespace avx2 {
void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out);
std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset);
}  // namespace avx2

namespace avx512 {
void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out);
std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset);
}  // namespace avx512

}  // namespace r55::kernels
