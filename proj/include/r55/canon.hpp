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

// Canonical labelling by individualisation and equitable refinement.
//
// The search tree is the usual one: refine the unit (or colour) partition to
// an equitable one, individualise each vertex of the first non-singleton
// cell in increasing vertex order, refine again, and so on down to discrete
// partitions. Each leaf relabels the graph; the canonical labelling is the
// leaf whose relabelled adjacency rows compare greatest. Automorphisms found
// when two leaves coincide prune sibling subtrees in the same orbit.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "r55/graph.hpp"

namespace r55 {

struct CanonicalForm {
  // graph6 of the canonically relabelled graph; coloured forms append
  // "#" and the colour class sizes.
  std::string key;
  // perm[v] is the canonical label of input vertex v.
  std::vector<int> perm;
};

CanonicalForm canonical_form(const Graph& g);

// Canonical form under colour-preserving isomorphism. colours[v] >= 0;
// classes are ordered by colour value, so two graphs only share a key when
// their colour classes correspond value for value.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colours);

// Faster path when only the key is needed.
std::string canonical_key(const Graph& g);

// The canonically relabelled graph itself.
Graph canonical_graph(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// A permutation p with a.permuted(p) == b, if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& a,
                                                 const Graph& b);

struct AutomorphismSet {
  // Full group including the identity, unless generators_only is set, in
  // which case this is a generating set.
  std::vector<std::vector<int>> perms;
  bool generators_only = false;
  std::uint64_t group_order = 1;
};

inline constexpr int kMaxAutomorphismOrder = 16;

// Exact automorphism group of k (|k| <= 16). The full element list is
// materialised when the group has at most max_elements members.
AutomorphismSet automorphisms(const Graph& k,
                              std::size_t max_elements = 1U << 20);

// True iff p maps g onto itself.
bool is_automorphism(const Graph& g, std::span<const int> p);

}  // namespace r55
