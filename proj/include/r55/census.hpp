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

// Catalogs of Ramsey graphs built one vertex at a time, and by gluing an
// apex between a graph of type (s-1,t) and a graph of type (s,t-1).

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "r55/catalog.hpp"
#include "r55/graph.hpp"

namespace r55 {

struct CensusSpec {
  RamseyType rt;
  int n = 1;
  std::optional<int> e_min{};
  std::optional<int> e_max{};

  // Throws ValidationError unless n is in [1, 64] and the bounds are ordered.
  void validate() const;
  EdgeBounds bounds() const { return {e_min, e_max}; }
};

// Receives one JSON object per line describing census progress.
using ProgressSink = std::function<void(const std::string& json_line)>;

struct CensusOptions {
  int workers = 1;
  // Parents per work unit. Units, not workers, fix the merge order, so the
  // result does not depend on the worker count.
  std::size_t unit_size = 256;
  // Abort with ResourceExhausted once any level holds more key bytes than
  // this. Zero means unlimited.
  std::uint64_t max_catalog_bytes = 0;
  // When set, finished levels and a journal of finished units are written
  // here and a rerun resumes from them.
  std::optional<std::filesystem::path> checkpoint_dir;
  ProgressSink progress;
};

// Candidate neighbourhoods S of a new vertex: S has no (s-1)-clique and the
// rest of V(G) has no independent (t-1)-set. Calls visit(S) in a fixed
// order. Only neighbourhoods whose size lies in [min_size, max_size] are
// reported.
void for_each_extension_set(const Graph& g, RamseyType rt, int min_size,
                            int max_size,
                            const std::function<void(VertexSet)>& visit);

// All graphs on |G|+1 vertices in R(s,t) extending G, up to isomorphism,
// sorted by canonical key.
std::vector<Graph> extensions(const Graph& g, RamseyType rt);

Catalog census(const CensusSpec& spec, const CensusOptions& opts = {});

// Complete catalogs R(s,t,1), ..., R(s,t,max_n). Stops after the first
// empty level when stop_at_empty is set.
std::vector<Catalog> census_levels(RamseyType rt, int max_n,
                                   const CensusOptions& opts = {},
                                   bool stop_at_empty = true);

// Edge bounds that each smaller order has to satisfy so that the final
// level can still reach `final` (index k holds the bounds for order k).
std::vector<EdgeBounds> level_bounds(int n, const EdgeBounds& final);

struct ConeGlueOptions {
  // Placed H-vertices after which partial graphs are deduplicated.
  int dedup_prefix = 4;
  // Restrict attachment sizes with the degree bounds implied by the known
  // Ramsey numbers R(s-1,t) and R(s,t-1).
  bool use_degree_bounds = true;
};

// All F on |G|+|H|+1 vertices in R(s,t) with e(F) >= e_min whose apex
// (vertex |G|) has neighbourhood G and non-neighbourhood H. Vertex layout of
// every generated F: G on 0..p-1, apex p, H after it.
Catalog cone_glue(const Graph& g, const Graph& h, RamseyType rt, int e_min,
                  const ConeGlueOptions& opts = {});

// Order in which cone_glue attaches the vertices of H: greedily the vertex
// with the largest attachment cap, then most edges into the placed prefix,
// then the smallest index.
// The cap of h is min(p, degree_cap - deg_H(h)), or p without a degree cap.
std::vector<int> cone_vertex_order(const Graph& h, int p,
                                   std::optional<int> degree_cap);

// R(s,t,n) with the given bounds assembled from cone_glue over all p+q+1=n.
Catalog cone_census(const CensusSpec& spec, const CensusOptions& opts = {});

// R(s,t,m) as plain graphs, including the degenerate classes: the empty
// graph on 0 vertices belongs to every type, and s == 1 or t == 1 admits
// nothing else.
std::vector<Graph> ramsey_class(int s, int t, int m,
                                const CensusOptions& opts = {});

}  // namespace r55
