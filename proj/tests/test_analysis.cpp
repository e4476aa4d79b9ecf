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

#include "doctest.h"
#include "r55/analysis.hpp"
#include "r55/census.hpp"
#include "r55/errors.hpp"
#include "r55/graph6.hpp"
#include "support.hpp"

using namespace r55;

namespace {

// e(F_v^-) and e(F_v^+) counted pair by pair on the adjacency matrix.
std::pair<int, int> naive_split_edges(const testing::Matrix& m, int v) {
  const int n = static_cast<int>(m.size());
  int minus = 0, plus = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (a == v || b == v || !m[a][b]) continue;
      if (m[v][a] && m[v][b]) ++plus;
      if (!m[v][a] && !m[v][b]) ++minus;
    }
  }
  return {minus, plus};
}

// Degrees in [21, 24] on 46 vertices: a 24-regular circulant with random
// edges removed.
Graph degree_band_graph(std::mt19937_64& rng) {
  Graph g(46);
  for (int u = 0; u < 46; ++u) {
    for (int d = 1; d <= 12; ++d) g.add_edge(u, (u + d) % 46);
  }
  for (int i = 0; i < 200; ++i) {
    const int u = static_cast<int>(rng() % 46);
    const int v = static_cast<int>(rng() % 46);
    if (u != v && g.adjacent(u, v) && g.degree(u) > 21 && g.degree(v) > 21) {
      g.remove_edge(u, v);
    }
  }
  return g;
}

std::int64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("excess examples") {
  const auto c5 = excess(Graph::cycle(5));
  CHECK(c5.total() == 0);
  for (const auto& x : c5.per_vertex) {
    CHECK(x.contribution2 == 0);
    CHECK(x.minus_edges == 1);
    CHECK(x.plus_edges == 0);
  }
  CHECK(excess(Graph::complete(6)).total() == 0);
  CHECK(excess(Graph()).total() == 0);
}

TEST_CASE("excess terms match direct counting and sum to zero") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const Graph g = testing::random_graph(rng, n, (i % 10) / 9.0);
    const auto r = excess(g);
    CHECK(r.total2 == 0);
    const auto m = testing::to_matrix(g);
    std::int64_t sum2 = 0;
    for (int v = 0; v < n; ++v) {
      const auto [minus, plus] = naive_split_edges(m, v);
      const int d = g.degree(v);
      CHECK(r.per_vertex[v].minus_edges == minus);
      CHECK(r.per_vertex[v].plus_edges == plus);
      const std::int64_t c2 = 2 * minus - 2 * plus - static_cast<std::int64_t>(d) * (n - 2 * d);
      CHECK(r.per_vertex[v].contribution2 == c2);
      sum2 += c2;
    }
    CHECK(sum2 == 0);
  }
}

TEST_CASE("vertex-transitive graphs have equal contributions") {
  for (const Graph& g : {Graph::paley(17), Graph::cycle(7), Graph::paley(13), Graph::complete(5)}) {
    const auto r = excess(g);
    for (const auto& x : r.per_vertex) CHECK(x.contribution2 == r.per_vertex[0].contribution2);
    CHECK(r.per_vertex[0].contribution2 == 0);
  }
}

TEST_CASE("reference constants on 46 vertices") {
  const ExcessOffsets offsets = {
      {24, {104, 127}}, {23, {119, 118}}, {22, {135, 112}}, {21, {149, 106}}};
  for (const auto& [d, ref] : offsets) CHECK(offsets_consistent(46, d, ref));
  CHECK_FALSE(offsets_consistent(46, 24, {105, 127}));
  CHECK_FALSE(offsets_consistent(46, 23, {104, 127}));

  std::mt19937_64 rng(73);
  for (int i = 0; i < 20; ++i) {
    const Graph g = degree_band_graph(rng);
    const auto r = excess_contributions(g, offsets);
    CHECK(r.sum == 0);
    CHECK(r.sum == excess(g).total());
    REQUIRE(r.values.size() == 46);
    for (int v = 0; v < 46; ++v) {
      const auto [co, ed] = offsets.at(g.degree(v));
      const auto [minus, plus] = naive_split_edges(testing::to_matrix(g), v);
      CHECK(r.values[v] == (minus - co) + (ed - plus) + 1);
    }
  }
}

TEST_CASE("synthetic offsets built from the consistency equation") {
  // 10-vertex 3-regular graph (Petersen) and random 10-vertex graphs.
  const std::pair<int, int> petersen_edges[] = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
      {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  std::vector<Graph> graphs = {Graph::from_edges(10, petersen_edges)};
  std::mt19937_64 rng(79);
  for (int i = 0; i < 50; ++i) graphs.push_back(testing::random_graph(rng, 10, 0.5));
  for (const Graph& g : graphs) {
    ExcessOffsets offsets;
    for (int d = 0; d < 10; ++d) {
      const int edge_ref = static_cast<int>(rng() % 20);
      const int twice = 2 + 2 * edge_ref + d * (10 - 2 * d);
      if (twice % 2 != 0) continue;
      offsets[d] = {twice / 2, edge_ref};
      CHECK(offsets_consistent(10, d, offsets[d]));
    }
    const auto r = excess_contributions(g, offsets);
    CHECK(r.sum == excess(g).total());
  }
  ExcessOffsets bad = {{3, {0, 0}}};
  CHECK_THROWS_AS(excess_contributions(graphs[0], bad), ValidationError);
  CHECK_THROWS_AS(excess_contributions(graphs[0], ExcessOffsets{}), ValidationError);
}

TEST_CASE("degree bounds") {
  const auto b55 = degree_bounds(RamseyType(5, 5), 46);
  CHECK(b55.lo == 21);
  CHECK(b55.hi == 24);
  const auto b33 = degree_bounds(RamseyType(3, 3), 5);
  CHECK(b33.lo == 2);
  CHECK(b33.hi == 2);
  const auto b44 = degree_bounds(RamseyType(4, 4), 17);
  CHECK(b44.lo == 8);
  CHECK(b44.hi == 8);
  CHECK(Graph::paley(17).degrees() == std::vector<int>(17, 8));
  CHECK_THROWS_AS(degree_bounds(RamseyType(6, 6), 40), ValidationError);

  // Every member of a census respects the bounds.
  const RamseyTable table = RamseyTable::known();
  CHECK(table.get(3, 5) == 14);
  CHECK(table.get(5, 4) == 25);
  CHECK_FALSE(table.get(5, 5).has_value());
  for (int n = 8; n <= 13; ++n) {
    const auto b = degree_bounds(RamseyType(3, 5), n);
    for (const auto& g : census({RamseyType(3, 5), n}).graphs()) {
      for (int d : g.degrees()) {
        CHECK(d >= b.lo);
        CHECK(d <= b.hi);
      }
    }
  }
}

TEST_CASE("clique neighbour partition examples") {
  const std::vector<int> clique = {0, 1, 2, 3};
  const auto r = clique_neighbor_partition(Graph::complete(5), clique, bit(4),
                                           NeighborMode::kNeighbors);
  for (int i = 0; i < 4; ++i) CHECK(popcount(r.sets[i]) == 1);
  CHECK(r.union_size == 1);
  CHECK(r.membership[4] == 1);
  CHECK(r.intersection[0b1111] == 1);

  std::mt19937_64 rng(83);
  for (int i = 0; i < 10; ++i) {
    const Graph g = testing::random_ramsey(rng, 14, 5, 5);
    REQUIRE(g.order() == 14);
    const auto c = find_clique_in(g, g.vertices(), 4);
    if (c.empty()) continue;
    VertexSet universe = g.vertices();
    for (int v : c) universe &= ~bit(v);
    const auto p = clique_neighbor_partition(g, c, universe, NeighborMode::kNeighbors);
    CHECK(p.membership[4] == 0);
  }
  CHECK_THROWS_AS(clique_neighbor_partition(Graph::complete(5), clique, bit(0) | bit(4),
                                            NeighborMode::kNeighbors),
                  ValidationError);
}

TEST_CASE("clique neighbour counts match membership counting") {
  std::mt19937_64 rng(89);
  for (int i = 0; i < 200; ++i) {
    // A 4-clique on 0..3 and a universe whose vertices see either any number
    // of clique vertices or, in half the cases, exactly two or three.
    const bool restricted = i % 2 == 0;
    const int m = 4 + static_cast<int>(rng() % 20);
    Graph g(4 + m);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) g.add_edge(a, b);
    }
    for (int u = 4; u < 4 + m; ++u) {
      int want = restricted ? 2 + static_cast<int>(rng() % 2) : -1;
      std::vector<int> idx = {0, 1, 2, 3};
      std::shuffle(idx.begin(), idx.end(), rng);
      for (int j = 0; j < 4; ++j) {
        if (restricted ? j < want : (rng() & 1U)) g.add_edge(u, idx[j]);
      }
      for (int w = 4; w < u; ++w) {
        if (rng() & 1U) g.add_edge(u, w);
      }
    }
    const std::vector<int> clique = {0, 1, 2, 3};
    const VertexSet universe = g.vertices() & ~VertexSet{0xF};
    for (auto mode : {NeighborMode::kNeighbors, NeighborMode::kNonNeighbors}) {
      const auto r = clique_neighbor_partition(g, clique, universe, mode);
      std::vector<int> member(5, 0);
      int union_size = 0;
      for (int u = 4; u < 4 + m; ++u) {
        int k = 0;
        for (int c : clique) k += (g.adjacent(u, c) == (mode == NeighborMode::kNeighbors));
        ++member[k];
        union_size += k > 0;
      }
      CHECK(r.membership == member);
      CHECK(r.union_size == union_size);
      for (int j = 1; j <= 4; ++j) {
        std::int64_t expect = 0;
        for (int k = 0; k <= 4; ++k) expect += binom(k, j) * member[k];
        CHECK(r.level_sum(j) == expect);
      }
      if (member[1] == 0 && member[4] == 0) {
        CHECK(r.level_sum(1) == 2 * r.level_sum(2) - 3 * r.level_sum(3));
      }
    }
  }
}

TEST_CASE("clique with degree bound") {
  const auto k4 = find_clique_with_degree_bound(Graph::complete(4), 4, 12);
  REQUIRE(k4.has_value());
  CHECK(k4->size() == 4);
  CHECK_FALSE(find_clique_with_degree_bound(Graph::complete(4), 4, 11).has_value());
  CHECK_FALSE(find_clique_with_degree_bound(Graph::cycle(5), 3, 100).has_value());

  for (const auto& g : census({RamseyType(3, 4), 8}).graphs()) {
    CHECK_FALSE(find_clique_with_degree_bound(g, 3, 21).has_value());
  }
  std::mt19937_64 rng(97);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(rng, 3 + static_cast<int>(rng() % 9), 0.6);
    const int bound = static_cast<int>(rng() % 20);
    const auto m = testing::to_matrix(g);
    const bool expect = testing::any_subset(g.order(), 3, [&](const std::vector<int>& s) {
      return m[s[0]][s[1]] && m[s[0]][s[2]] && m[s[1]][s[2]] &&
             g.degree(s[0]) + g.degree(s[1]) + g.degree(s[2]) <= bound;
    });
    const auto got = find_clique_with_degree_bound(g, 3, bound);
    CHECK(got.has_value() == expect);
    if (got) {
      int sum = 0;
      for (int v : *got) sum += g.degree(v);
      CHECK(sum <= bound);
    }
  }
}

TEST_CASE("predicates and filtering") {
  const Catalog c5 = census({RamseyType(3, 3), 5});
  CHECK(catalog_filter(c5, std::vector<std::string>{"max_degree<=2"}).size() == 1);
  CHECK(catalog_filter(c5, std::vector<std::string>{"max_degree<2"}).size() == 0);

  const Catalog cat = census({RamseyType(4, 5), 8});
  struct Case {
    std::string spec;
    std::function<bool(const Graph&)> oracle;
  };
  const Graph p3 = Graph::path(3);
  const std::vector<Case> cases = {
      {"edges=12", [](const Graph& g) { return g.edge_count() == 12; }},
      {"edges!=12", [](const Graph& g) { return g.edge_count() != 12; }},
      {"edges>15", [](const Graph& g) { return g.edge_count() > 15; }},
      {"min_degree>=3", [](const Graph& g) {
         auto d = g.degrees();
         return *std::min_element(d.begin(), d.end()) >= 3;
       }},
      {"regular", [](const Graph& g) {
         auto d = g.degrees();
         return *std::min_element(d.begin(), d.end()) == *std::max_element(d.begin(), d.end());
       }},
      {"contains=" + graph6_encode(p3), [&](const Graph& g) {
         return testing::any_subset(g.order(), 3, [&](const std::vector<int>& s) {
           return g.induced(s).edge_count() == 2;
         });
       }},
      {"lacks=" + graph6_encode(Graph::complete(3)), [&](const Graph& g) {
         return !testing::naive_clique(g, 3);
       }},
      {"nonadjacent_low_pair<=3", [](const Graph& g) {
         for (int u = 0; u < g.order(); ++u) {
           for (int v = u + 1; v < g.order(); ++v) {
             if (!g.adjacent(u, v) && g.degree(u) <= 3 && g.degree(v) <= 3) return true;
           }
         }
         return false;
       }},
      {"clique_degree_sum=3:12", [](const Graph& g) {
         return testing::any_subset(g.order(), 3, [&](const std::vector<int>& s) {
           return g.adjacent(s[0], s[1]) && g.adjacent(s[0], s[2]) && g.adjacent(s[1], s[2]) &&
                  g.degree(s[0]) + g.degree(s[1]) + g.degree(s[2]) <= 12;
         });
       }},
  };
  for (const auto& c : cases) {
    CAPTURE(c.spec);
    std::size_t expect = 0;
    for (const auto& g : cat.graphs()) expect += c.oracle(g);
    const Catalog got = catalog_filter(cat, std::vector<std::string>{c.spec}, 3);
    CHECK(got.size() == expect);
    CHECK(got.provenance.params.at("filter") == c.spec);
  }
  for (const char* bad : {"", "edges", "edges<<3", "nonsense=1", "contains=", "clique_degree_sum=3"}) {
    CHECK_THROWS_AS(GraphPredicate::parse(bad), ValidationError);
  }
}
