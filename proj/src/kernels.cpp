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

#include "r55/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "r55/errors.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define R55_X86 1
#include <immintrin.h>
#else
#define R55_X86 0
#endif

namespace r55::kernels {

// ---------------------------------------------------------------------------
// Scalar reference
// ---------------------------------------------------------------------------

namespace scalar {

void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(popcount(rows[i] & mask));
  }
}

std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset) {
  subset &= first_n(static_cast<int>(rows.size()));
  std::uint64_t total = 0;
  for_each_vertex(subset, [&](int v) { total += popcount(rows[v] & subset); });
  return total;
}

}  // namespace scalar

// ---------------------------------------------------------------------------
// AVX2: per-byte popcount through a nibble lookup, summed with vpsadbw.
// ---------------------------------------------------------------------------

namespace avx2 {

#if R55_X86
namespace {

__attribute__((target("avx2"))) inline __m256i popcount_epi64(__m256i v) {
  const __m256i lookup =
      _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1,
                       2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                        _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

// All-ones lanes where bit (base + lane) of `bits` is set.
__attribute__((target("avx2"))) inline __m256i lane_mask(VertexSet bits,
                                                         int base) {
  const __m256i select = _mm256_setr_epi64x(1, 2, 4, 8);
  const __m256i shifted =
      _mm256_set1_epi64x(static_cast<long long>(bits >> base));
  return _mm256_cmpeq_epi64(_mm256_and_si256(shifted, select), select);
}

}  // namespace

__attribute__((target("avx2"))) void masked_popcounts(
    std::span<const VertexSet> rows, VertexSet mask,
    std::span<std::uint8_t> out) {
  const std::size_t n = rows.size();
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(mask));
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= n; i += 4) {
    const __m256i r = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(rows.data() + i));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes),
                       popcount_epi64(_mm256_and_si256(r, m)));
    for (int j = 0; j < 4; ++j) out[i + j] = static_cast<std::uint8_t>(lanes[j]);
  }
  for (; i < n; ++i) out[i] = static_cast<std::uint8_t>(popcount(rows[i] & mask));
}

__attribute__((target("avx2"))) std::uint64_t induced_degree_sum(
    std::span<const VertexSet> rows, VertexSet subset) {
  const std::size_t n = rows.size();
  subset &= first_n(static_cast<int>(n));
  const __m256i m = _mm256_set1_epi64x(static_cast<long long>(subset));
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    if (((subset >> i) & 0xF) == 0) continue;
    const __m256i r = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(rows.data() + i));
    const __m256i keep = lane_mask(subset, static_cast<int>(i));
    acc = _mm256_add_epi64(
        acc, popcount_epi64(_mm256_and_si256(_mm256_and_si256(r, m), keep)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) {
    if ((subset >> i) & 1U) total += popcount(rows[i] & subset);
  }
  return total;
}

#else

void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out) {
  scalar::masked_popcounts(rows, mask, out);
}
std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset) {
  return scalar::induced_degree_sum(rows, subset);
}

#endif

}  // namespace avx2

// ---------------------------------------------------------------------------
// AVX-512 with native 64-bit popcount; tails use masked loads.
// ---------------------------------------------------------------------------

namespace avx512 {

#if R55_X86

__attribute__((target("avx512f,avx512vpopcntdq"))) void masked_popcounts(
    std::span<const VertexSet> rows, VertexSet mask,
    std::span<std::uint8_t> out) {
  const std::size_t n = rows.size();
  const __m512i m = _mm512_set1_epi64(static_cast<long long>(mask));
  for (std::size_t i = 0; i < n; i += 8) {
    const std::size_t left = n - i;
    const __mmask8 k =
        left >= 8 ? __mmask8{0xFF} : static_cast<__mmask8>((1U << left) - 1);
    const __m512i r = _mm512_maskz_loadu_epi64(k, rows.data() + i);
    const __m512i counts = _mm512_popcnt_epi64(_mm512_and_si512(r, m));
    _mm512_mask_cvtepi64_storeu_epi8(out.data() + i, k, counts);
  }
}

__attribute__((target("avx512f,avx512vpopcntdq"))) std::uint64_t
induced_degree_sum(std::span<const VertexSet> rows, VertexSet subset) {
  const std::size_t n = rows.size();
  subset &= first_n(static_cast<int>(n));
  const __m512i m = _mm512_set1_epi64(static_cast<long long>(subset));
  __m512i acc = _mm512_setzero_si512();
  for (std::size_t i = 0; i < n; i += 8) {
    const __mmask8 k = static_cast<__mmask8>((subset >> i) & 0xFF);
    if (k == 0) continue;
    const __m512i r = _mm512_maskz_loadu_epi64(k, rows.data() + i);
    acc = _mm512_add_epi64(acc, _mm512_popcnt_epi64(_mm512_and_si512(r, m)));
  }
  return static_cast<std::uint64_t>(_mm512_reduce_add_epi64(acc));
}

#else

void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out) {
  scalar::masked_popcounts(rows, mask, out);
}
std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset) {
  return scalar::induced_degree_sum(rows, subset);
}

#endif

}  // namespace avx512

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

namespace {

struct Table {
  void (*masked_popcounts)(std::span<const VertexSet>, VertexSet,
                           std::span<std::uint8_t>);
  std::uint64_t (*induced_degree_sum)(std::span<const VertexSet>, VertexSet);
};

constexpr Table kScalarTable{scalar::masked_popcounts,
                             scalar::induced_degree_sum};
constexpr Table kAvx2Table{avx2::masked_popcounts, avx2::induced_degree_sum};
constexpr Table kAvx512Table{avx512::masked_popcounts,
                             avx512::induced_degree_sum};

const Table& table_for(Backend b) {
  switch (b) {
    case Backend::kAvx2:
      return kAvx2Table;
    case Backend::kAvx512:
      return kAvx512Table;
    case Backend::kScalar:
      break;
  }
  return kScalarTable;
}

Backend best_backend() {
  if (const char* env = std::getenv("R55_SIMD")) {
    const std::string want(env);
    for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kAvx512}) {
      if (want == backend_name(b) && backend_supported(b)) return b;
    }
  }
  if (backend_supported(Backend::kAvx512)) return Backend::kAvx512;
  if (backend_supported(Backend::kAvx2)) return Backend::kAvx2;
  return Backend::kScalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{best_backend()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kAvx2:
      return "avx2";
    case Backend::kAvx512:
      return "avx512";
    case Backend::kScalar:
      break;
  }
  return "scalar";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
#if R55_X86
    case Backend::kAvx2:
      return __builtin_cpu_supports("avx2");
    case Backend::kAvx512:
      return __builtin_cpu_supports("avx512f") &&
             __builtin_cpu_supports("avx512vpopcntdq");
#else
    default:
      return false;
#endif
  }
  return false;
}

std::vector<Backend> supported_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kAvx512}) {
    if (backend_supported(b)) out.push_back(b);
  }
  return out;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_supported(b)) {
    throw ValidationError("SIMD backend not supported on this CPU: " +
                          std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

void masked_popcounts(std::span<const VertexSet> rows, VertexSet mask,
                      std::span<std::uint8_t> out) {
  table_for(active_backend()).masked_popcounts(rows, mask, out);
}

std::uint64_t induced_degree_sum(std::span<const VertexSet> rows,
                                 VertexSet subset) {
  return table_for(active_backend()).induced_degree_sum(rows, subset);
}

void split_edge_counts(const Graph& g, std::span<int> plus,
                       std::span<int> minus) {
  const auto& t = table_for(active_backend());
  const auto rows = g.rows();
  for (int v = 0; v < g.order(); ++v) {
    plus[v] = static_cast<int>(t.induced_degree_sum(rows, g.row(v)) / 2);
    minus[v] = static_cast<int>(t.induced_degree_sum(rows, g.co_row(v)) / 2);
  }
}

}  // namespace r55::kernels
