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

#include <unordered_set>

#include "doctest.h"
#include "r55/canon.hpp"
#include "r55/errors.hpp"
#include "r55/graph6.hpp"
#include "support.hpp"

using namespace r55;

TEST_CASE("canonical form examples") {
  const std::pair<int, int> relabeled[] = {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}};
  CHECK(canonical_key(Graph::cycle(5)) == canonical_key(Graph::from_edges(5, relabeled)));
  const std::pair<int, int> k3k1[] = {{0, 1}, {1, 2}, {0, 2}};
  CHECK(canonical_key(Graph::from_edges(4, k3k1)) != canonical_key(Graph::path(4)));
  CHECK(canonical_key(Graph()) == graph6_encode(Graph()));
}

TEST_CASE("canonical form is a labeling invariant and returns its permutation") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 400; ++i) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Graph g = testing::random_graph(rng, n, (i % 3 == 0) ? 0.1 : 0.5);
    const auto cf = canonical_form(g);
    CHECK(graph6_encode(g.permuted(cf.perm)) == cf.key);
    const Graph h = g.permuted(testing::random_permutation(rng, n));
    CHECK(canonical_key(h) == cf.key);
    const auto iso = find_isomorphism(g, h);
    REQUIRE(iso.has_value());
    CHECK(g.permuted(*iso) == h);
  }
}

TEST_CASE("canonical keys separate exactly the isomorphism classes") {
  // Compare with the brute-force minimum over all relabelings.
  std::mt19937_64 rng(43);
  std::map<std::string, std::string> fast_to_slow;
  std::map<std::string, std::string> slow_to_fast;
  for (int i = 0; i < 600; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = testing::random_graph(rng, n, 0.5);
    const std::string fast = canonical_key(g);
    const std::string slow = testing::brute_canonical(g);
    const auto [it1, new1] = fast_to_slow.emplace(fast, slow);
    const auto [it2, new2] = slow_to_fast.emplace(slow, fast);
    CHECK(it1->second == slow);
    CHECK(it2->second == fast);
  }
}

TEST_CASE("isomorphism classes of small orders") {
  // Labeled graphs on n vertices fall into 1, 2, 4, 11, 34, 156, 1044
  // classes for n = 1..7.
  const std::size_t expect[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::unordered_set<std::string> keys;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      keys.insert(canonical_key(testing::graph_from_mask(n, mask)));
    }
    CHECK(keys.size() == expect[n - 1]);
  }
}

TEST_CASE("coloured canonical forms respect colours") {
  const Graph p = Graph::path(3);
  const std::vector<int> end_coloured = {1, 0, 0};
  const std::vector<int> other_end = {0, 0, 1};
  const std::vector<int> middle = {0, 1, 0};
  CHECK(canonical_form(p, end_coloured).key == canonical_form(p, other_end).key);
  CHECK(canonical_form(p, end_coloured).key != canonical_form(p, middle).key);

  std::mt19937_64 rng(47);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const Graph g = testing::random_graph(rng, n, 0.4);
    std::vector<int> col(n);
    for (int& c : col) c = static_cast<int>(rng() % 3);
    const auto perm = testing::random_permutation(rng, n);
    std::vector<int> col2(n);
    for (int v = 0; v < n; ++v) col2[perm[v]] = col[v];
    CHECK(canonical_form(g, col).key == canonical_form(g.permuted(perm), col2).key);
  }
}

TEST_CASE("automorphism examples") {
  const auto k3 = automorphisms(Graph::complete(3));
  CHECK(k3.group_order == 6);
  CHECK(k3.perms.size() == 6);
  const auto p3 = automorphisms(Graph::path(3));
  CHECK(p3.group_order == 2);
  REQUIRE(p3.perms.size() == 2);
  const auto c5 = automorphisms(Graph::cycle(5));
  CHECK(c5.group_order == 10);
  CHECK(automorphisms(Graph::paley(13)).group_order == 78);
  CHECK_THROWS_AS(automorphisms(Graph::paley(17)), ValidationError);
  CHECK(automorphisms(Graph::empty(6)).group_order == 720);
  for (const auto& p : c5.perms) CHECK(is_automorphism(Graph::cycle(5), p));
}

TEST_CASE("automorphism group orders match brute force") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 150; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph g = testing::random_graph(rng, n, 0.5);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t count = 0;
    do {
      count += is_automorphism(g, p);
    } while (std::next_permutation(p.begin(), p.end()));
    const auto aut = automorphisms(g);
    CHECK(aut.group_order == count);
    std::set<std::vector<int>> distinct(aut.perms.begin(), aut.perms.end());
    CHECK(distinct.size() == aut.perms.size());
    if (!aut.generators_only) CHECK(aut.perms.size() == count);
  }
}
