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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "r55/catalog.hpp"
#include "r55/graph.hpp"

namespace r55 {

// Known two-colour Ramsey numbers, symmetric in (s,t).
class RamseyTable {
 public:
  std::optional<int> get(int s, int t) const;
  void set(int s, int t, int value);

  // R(1,t) = 1, R(2,t) = t, R(3,t) for t <= 9, R(4,4) = 18, R(4,5) = 25.
  static RamseyTable known();

 private:
  std::map<std::pair<int, int>, int> values_;
};

struct VertexExcess {
  int v = 0;
  int degree = 0;
  int minus_edges = 0;  // e(F_v^-)
  int plus_edges = 0;   // e(F_v^+)
  // 2 * (e(F_v^-) - e(F_v^+) - d(n - 2d) / 2), exact.
  std::int64_t contribution2 = 0;
};

struct ExcessReport {
  std::int64_t total2 = 0;  // twice the total
  std::vector<VertexExcess> per_vertex;

  // The total itself; throws InvariantViolation if it is not an integer.
  std::int64_t total() const;
};

// Per-vertex terms e(F_v^-) - e(F_v^+) - d(v)(n - 2d(v))/2. Their sum
// vanishes for every graph.
ExcessReport excess(const Graph& f);

// degree -> (co_edge_ref, edge_ref)
using ExcessOffsets = std::map<int, std::pair<int, int>>;

struct ContributionReport {
  // (e(F_v^-) - co_edge_ref(d)) + (edge_ref(d) - e(F_v^+)) + 1 per vertex.
  std::vector<std::int64_t> values;
  std::int64_t sum = 0;
};

// True iff co_edge_ref(d) - edge_ref(d) - d(n - 2d)/2 = 1, i.e. the
// per-degree terms add up to the excess.
bool offsets_consistent(int n, int degree, std::pair<int, int> ref);

// Throws ValidationError when a degree of f has no entry or an entry fails
// offsets_consistent; checks that the sum equals excess(f).total().
ContributionReport excess_contributions(const Graph& f,
                                        const ExcessOffsets& offsets);

struct DegreeBounds {
  int lo = 0;
  int hi = 0;
};

// lo = max(0, m - R(s,t-1)), hi = min(m-1, R(s-1,t) - 1).
DegreeBounds degree_bounds(RamseyType rt, int m,
                           const RamseyTable& table = RamseyTable::known());

enum class NeighborMode { kNeighbors, kNonNeighbors };

struct CliqueNeighborReport {
  std::vector<int> clique;
  // sets[i]: neighbours (or non-neighbours) of clique[i] within the universe.
  std::vector<VertexSet> sets;
  // intersection[mask] = |intersection of sets[i] over bits i of mask|.
  std::vector<int> intersection;
  // membership[k] = number of universe vertices in exactly k of the sets.
  std::vector<int> membership;
  int union_size = 0;

  // Sum of |A_I| over index sets I of size j.
  std::int64_t level_sum(int j) const;
};

// Clique of at most 16 vertices; universe must avoid the clique.
CliqueNeighborReport clique_neighbor_partition(const Graph& f,
                                               std::span<const int> clique,
                                               VertexSet universe,
                                               NeighborMode mode);

// Some k-clique of g with degree sum at most degree_sum_max, found by
// exhaustive search.
std::optional<std::vector<int>> find_clique_with_degree_bound(
    const Graph& g, int k, int degree_sum_max);

// Predicates, one per string:
//   min_degree|max_degree|edges  followed by <=, >=, <, >, = or !=  and an
//                                integer
//   regular
//   contains=<graph6>  lacks=<graph6>    (induced subgraph)
//   nonadjacent_low_pair<=d              two non-adjacent vertices of
//                                        degree at most d
//   clique_degree_sum=k:m                a k-clique of degree sum <= m
class GraphPredicate {
 public:
  static GraphPredicate parse(const std::string& spec);
  bool operator()(const Graph& g) const;
  const std::string& spec() const { return spec_; }

 private:
  std::string spec_;
  std::string name_;
  std::string op_;
  int value_ = 0;
  int value2_ = 0;
  Graph pattern_;
};

Catalog catalog_filter(const Catalog& cat,
                       std::span<const GraphPredicate> predicates,
                       int workers = 1);
Catalog catalog_filter(const Catalog& cat,
                       const std::vector<std::string>& predicates,
                       int workers = 1);

}  // namespace r55
