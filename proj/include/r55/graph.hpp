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

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace r55 {

// One bit per vertex; graphs never exceed 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline int popcount(VertexSet s) { return std::popcount(s); }

// Calls f(v) for every vertex in s, in increasing order.
template <class F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s) {
    const int v = std::countr_zero(s);
    s &= s - 1;
    f(v);
  }
}

// Undirected simple graph with adjacency rows stored as bitsets.
//
// Invariants: rows are symmetric, no loops, and bits at positions >= order()
// are zero. Rows past order() are zero as well, so defaulted equality
// compares graphs exactly.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }
  VertexSet vertices() const { return first_n(n_); }

  VertexSet row(int v) const { return adj_[v]; }
  // Non-neighbours of v, excluding v itself.
  VertexSet co_row(int v) const { return ~adj_[v] & vertices() & ~bit(v); }
  std::span<const VertexSet> rows() const {
    return {adj_.data(), static_cast<std::size_t>(n_)};
  }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj_[v]); }
  int edge_count() const;
  std::vector<int> degrees() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_edge(int u, int v, bool present) {
    present ? add_edge(u, v) : remove_edge(u, v);
  }

  Graph complement() const;
  // Induced subgraph on `verts`, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const int> verts) const;
  // Induced subgraph on a vertex set, in increasing vertex order.
  Graph induced(VertexSet s) const;
  // Relabels vertex v as perm[v].
  Graph permuted(std::span<const int> perm) const;
  // Appends vertex order() adjacent to exactly `neighbours`.
  Graph with_vertex(VertexSet neighbours) const;

  // Throws InvariantViolation if the representation invariants fail.
  void check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

  static Graph empty(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  // K_{1,leaves}; the centre is vertex 0.
  static Graph star(int leaves);
  // Paley graph on q vertices, q prime and q = 1 mod 4.
  static Graph paley(int q);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  // Builds a graph from adjacency rows; throws ValidationError unless the
  // rows describe a simple undirected graph on rows.size() vertices.
  static Graph from_rows(std::span<const VertexSet> rows);

 private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Ramsey graph type (s, t): no s-clique and no independent t-set.
struct RamseyType {
  int s = 2;
  int t = 2;

  RamseyType() = default;
  RamseyType(int s_, int t_);
  RamseyType dual() const { return RamseyType{t, s}; }
  std::string str() const;
  friend bool operator==(const RamseyType&, const RamseyType&) = default;
};

struct VertexSplit {
  Graph plus;   // induced on the neighbours of v
  Graph minus;  // induced on the non-neighbours of v, v excluded
  std::vector<int> plus_map;
  std::vector<int> minus_map;
};

bool has_clique(const Graph& g, int k);
// Clique of size k using only vertices in `candidates`.
bool has_clique_in(const Graph& g, VertexSet candidates, int k);
// Independent set of size k using only vertices in `candidates`.
bool has_independent_set_in(const Graph& g, VertexSet candidates, int k);
// Returns some k-clique within `candidates`, or an empty vector.
std::vector<int> find_clique_in(const Graph& g, VertexSet candidates, int k);

bool is_ramsey(const Graph& g, RamseyType rt);

VertexSplit vertex_split(const Graph& g, int v);

// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);
// Same search, returning the embedding h-vertex -> g-vertex when found.
std::vector<int> find_induced(const Graph& g, const Graph& h);

}  // namespace r55
