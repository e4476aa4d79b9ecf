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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "r55/graph.hpp"

namespace r55 {

// Inclusive edge-count bounds; an absent side is unbounded.
struct EdgeBounds {
  std::optional<int> lo;
  std::optional<int> hi;

  bool contains(int e) const {
    return (!lo || e >= *lo) && (!hi || e <= *hi);
  }
  friend bool operator==(const EdgeBounds&, const EdgeBounds&) = default;
};

struct Provenance {
  std::string generator;
  std::map<std::string, std::string> params;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Deduplicated set of canonical graphs in R(s,t,n), optionally restricted
// to an edge range, with an exact histogram by edge count.
class Catalog {
 public:
  Catalog(RamseyType rt, int n, EdgeBounds bounds = {});

  RamseyType type() const { return rt_; }
  int order() const { return n_; }
  const EdgeBounds& bounds() const { return bounds_; }

  // Canonicalises g, validates order, Ramsey property and edge bounds
  // (ValidationError with the reason otherwise) and inserts it. Returns
  // false when an isomorphic graph is already present.
  bool insert(const Graph& g);

  // Inserts a key that the caller guarantees is canonical. The decoded graph
  // is still checked against the catalog's order, type and bounds when it
  // is new.
  bool insert_canonical(const std::string& key);

  bool contains(const Graph& g) const;
  bool contains_key(const std::string& key) const {
    return members_.contains(key);
  }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  // Edge count -> number of members.
  const std::map<int, std::size_t>& histogram() const { return histogram_; }
  std::optional<int> min_edges() const;
  std::optional<int> max_edges() const;
  std::size_t count_with_edges(int e) const;

  // Sum of key lengths; the catalog's on-disk payload size minus newlines.
  std::uint64_t byte_size() const { return bytes_; }

  std::vector<std::string> sorted_keys() const;
  std::vector<Graph> graphs() const;

  // Set union. Throws ValidationError unless type, order and bounds agree.
  void merge_from(const Catalog& other);

  // r{s}-{t}-n{n}[-e{lo}-{hi}]
  std::string directory_name() const;

  Provenance provenance;

  // Checks every stored invariant (canonical keys, Ramsey property, bounds,
  // histogram tallies); throws InvariantViolation.
  void verify() const;

 private:
  void add_new(const std::string& key, int edges);

  RamseyType rt_;
  int n_;
  EdgeBounds bounds_;
  std::unordered_set<std::string> members_;
  std::map<int, std::size_t> histogram_;
  std::uint64_t bytes_ = 0;
};

Catalog merge(const Catalog& a, const Catalog& b);

// Writes one graph6 shard per edge count (e{E}.g6, lexicographically
// sorted lines) and meta.json with counts and provenance.
void save_catalog(const Catalog& cat, const std::filesystem::path& dir);

// Reads a directory written by save_catalog. With verify set, every member
// is re-canonicalised and checked; otherwise keys are trusted.
Catalog load_catalog(const std::filesystem::path& dir, bool verify = true);

// Parses a directory name of the form r{s}-{t}-n{n}[-e{lo}-{hi}].
struct CatalogName {
  RamseyType rt;
  int n = 0;
  EdgeBounds bounds;
};
std::optional<CatalogName> parse_directory_name(const std::string& name);

}  // namespace r55
