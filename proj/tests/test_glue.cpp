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
#include "glue_gen.hpp"
#include "r55/analysis.hpp"
#include "r55/errors.hpp"
#include "r55/glue.hpp"
#include "r55/graph6.hpp"
#include "support.hpp"

using namespace r55;

namespace {

int count_role(const GlueProblem& p, Role r) { return popcount(p.role_set(r)); }

}  // namespace

TEST_CASE("pointed graph classes") {
  CHECK(pointed_graphs(Graph::cycle(5), 1).size() == 1);
  CHECK(pointed_graphs(Graph::star(3), 1).size() == 2);
  CHECK(pointed_graphs(Graph::path(4), 1).size() == 2);

  const auto star = pointed_graphs(Graph::star(3), 1);
  // The centre has the larger K and comes first.
  CHECK(star[0].a == 0);
  CHECK(star[0].k.order() == 3);
  CHECK(star[0].k_automorphisms == 6);
  CHECK(pointed_graphs(Graph::star(3), 2).size() == 1);

  const PointedGraph pg = make_pointed(Graph::cycle(5), 2);
  CHECK(pg.k.order() == 2);
  CHECK(pg.k_edges == 0);
  for (int i = 0; i < 2; ++i) CHECK(Graph::cycle(5).adjacent(2, pg.k_map[i]));
  CHECK_THROWS_AS(make_pointed(Graph::complete(18), 0), ValidationError);
}

TEST_CASE("pointed graph classes of random Ramsey graphs") {
  std::mt19937_64 rng(131);
  for (int i = 0; i < 100; ++i) {
    const int n = 5 + static_cast<int>(rng() % 8);
    const Graph g = testing::random_ramsey(rng, n, 4, 4);
    REQUIRE(g.order() == n);
    const auto p1 = pointed_graphs(g, 1);
    CHECK(p1.size() <= static_cast<std::size_t>(n));
    std::set<std::string> k1;
    for (const auto& p : p1) CHECK(k1.insert(p.key).second);
    // Every pointed graph is represented, and P_k only keeps members of P.
    for (int a = 0; a < n; ++a) CHECK(k1.contains(make_pointed(g, a).key));
    for (int k = 2; k <= 4; ++k) {
      for (const auto& p : pointed_graphs(g, k)) CHECK(k1.contains(p.key));
    }
    for (std::size_t j = 1; j < p1.size(); ++j) CHECK_FALSE(harder(p1[j], p1[j - 1]));
  }
}

TEST_CASE("problem layout") {
  // Two paths pointed at an end: K is the middle vertex, A and B the far ends.
  const PointedGraph pg = make_pointed(Graph::path(3), 0);
  const std::vector<int> id = {0};
  const GlueProblem p = build_glue_problem(pg, pg, id, 5, RamseyType(3, 3));
  CHECK(p.c1_size() == 0);
  const auto fp = p.free_pairs();
  REQUIRE(fp.size() == 1);
  CHECK(p.roles[fp[0].first] == Role::kA);
  CHECK(p.roles[fp[0].second] == Role::kB);
  p.check_invariants();

  std::mt19937_64 rng(137);
  testing::GlueGenerator gen(RamseyType(4, 4), 6);
  for (int i = 0; i < 100; ++i) {
    const auto q = gen.next(rng, 200);
    REQUIRE(q.has_value());
    CHECK(2 + count_role(*q, Role::kK) + count_role(*q, Role::kA) +
              count_role(*q, Role::kB) + count_role(*q, Role::kC1) ==
          q->order());
    CHECK(q->c1_size() == q->order() - q->base_order());
    for (const auto& [u, v] : q->free_pairs()) {
      const bool ab = (q->roles[u] == Role::kA && q->roles[v] == Role::kB);
      CHECK((ab || q->roles[u] == Role::kC1 || q->roles[v] == Role::kC1));
    }
    CHECK(q->free_pairs().size() ==
          static_cast<std::size_t>(count_role(*q, Role::kA) * count_role(*q, Role::kB) +
                                   q->c1_size() * (q->order() - 2 - q->c1_size()) +
                                   q->c1_size() * (q->c1_size() - 1) / 2));
  }
  CHECK_THROWS_AS(build_glue_problem(pg, pg, id, 4, RamseyType(3, 3)), ValidationError);
  const std::vector<int> bad = {1};
  CHECK_THROWS_AS(build_glue_problem(pg, pg, bad, 5, RamseyType(3, 3)), ValidationError);
}

TEST_CASE("problem keys identify isomorphic problems") {
  const PointedGraph pg = make_pointed(Graph::cycle(5), 0);
  const auto probs = glue_problems(pg, pg, 8, RamseyType(3, 4));
  // K is two non-adjacent vertices; both automorphisms give the same problem
  // up to relabeling because the pointed C5 has a reflection.
  CHECK(probs.size() == 1);
  CHECK(glue_problems(pg, make_pointed(Graph::complete(3), 0), 6, RamseyType(3, 4)).empty());
}

TEST_CASE("fixed violations give no solutions") {
  const PointedGraph pg = make_pointed(Graph::complete(5), 0);
  const std::vector<int> id = {0, 1, 2, 3};
  const GlueProblem p = build_glue_problem(pg, pg, id, 6, RamseyType(5, 5));
  CHECK(p.has_fixed_violation());
  const auto r = solve_glue(p);
  CHECK(r.status == SolveStatus::kUnsat);
  CHECK(r.solutions.empty());
}

TEST_CASE("solutions equal brute force") {
  const PointedGraph c5 = make_pointed(Graph::cycle(5), 0);
  for (int target : {8, 9}) {
    for (const auto& p : glue_problems(c5, c5, target, RamseyType(3, 4))) {
      CHECK(solve_glue(p).solutions == brute_force_glue(p));
    }
  }

  std::mt19937_64 rng(139);
  for (auto [s, t] : {std::pair{3, 3}, {3, 4}, {4, 4}, {3, 5}}) {
    testing::GlueGenerator gen(RamseyType(s, t), 6);
    for (int i = 0; i < 40; ++i) {
      const auto p = gen.next(rng, 16);
      REQUIRE(p.has_value());
      const auto expect = brute_force_glue(*p);
      for (bool sb : {true, false}) {
        GlueSolveOptions opts;
        opts.symmetry_breaking = sb;
        const auto r = solve_glue(*p, opts);
        CHECK(r.solutions == expect);
        CHECK(r.status == (expect.empty() ? SolveStatus::kUnsat : SolveStatus::kSat));
      }
      GlueSolveOptions first;
      first.mode = SolveMode::kFirst;
      const auto f = solve_glue(*p, first);
      CHECK(f.solutions.size() == (expect.empty() ? 0U : 1U));
    }
  }
}

TEST_CASE("two pointed graphs from R(3,4,8)") {
  const auto cat = census({RamseyType(3, 4), 8}).graphs();
  std::size_t problems = 0;
  for (const auto& g : cat) {
    for (const auto& h : cat) {
      for (const auto& pg1 : pointed_graphs(g)) {
        for (const auto& pg2 : pointed_graphs(h)) {
          const int base = 16 - pg1.k.order();
          for (const auto& p : glue_problems(pg1, pg2, base, RamseyType(3, 4))) {
            if (p.free_pairs().size() > 16) continue;
            CHECK(solve_glue(p).solutions == brute_force_glue(p));
            ++problems;
          }
        }
      }
    }
  }
  CHECK(problems > 0);
}

TEST_CASE("symmetry breaking keeps every solution class") {
  std::mt19937_64 rng(149);
  testing::GlueGenerator gen(RamseyType(3, 5), 7);
  std::size_t with_classes = 0;
  for (int i = 0; i < 60; ++i) {
    auto p = gen.next(rng, 60);
    REQUIRE(p.has_value());
    GlueSolveOptions on, off;
    off.symmetry_breaking = false;
    const auto a = solve_glue(*p, on);
    const auto b = solve_glue(*p, off);
    CHECK(a.solutions == b.solutions);
    CHECK(a.model_count <= b.model_count);
    with_classes += encode(*p).symmetry_scheme != "none";
  }
  CHECK(with_classes > 0);
}

TEST_CASE("seed rule parsing") {
  for (const char* name : {"degree_target", "adjacent_to_w", "edge_near_v", "triangle"}) {
    CHECK(SeedRule::parse(name).name() == name);
  }
  const auto g = SeedRule::parse("gadget:" + graph6_encode(Graph::path(3)) + ":14");
  CHECK(g.kind == SeedRule::Kind::kInducedGadget);
  CHECK(g.gadget == Graph::path(3));
  CHECK(g.gadget_m == 14);
  CHECK(SeedRule::parse(g.name()).name() == g.name());
  CHECK_THROWS_AS(SeedRule::parse("gadget:Bw"), ValidationError);
  CHECK_THROWS_AS(SeedRule::parse("nope"), ValidationError);
}

TEST_CASE("seed rules") {
  const PointedGraph pg = make_pointed(Graph::path(3), 0);
  const std::vector<int> id = {0};
  const RamseyType r55t(5, 5);

  // No rules: unchanged.
  const GlueProblem base = build_glue_problem(pg, pg, id, 8, r55t, 46);
  const GlueProblem same = seed_c1(base, {});
  CHECK(same.fixed == base.fixed);
  CHECK(same.known == base.known);
  CHECK(same.notes.empty());

  // Triangle: |C1| = 3 and |C| >= R(3,4) = 9.
  const std::vector<SeedRule> tri = {SeedRule::parse("triangle")};
  const GlueProblem t = seed_c1(base, tri);
  const auto c1 = t.role_set(Role::kC1);
  REQUIRE(popcount(c1) == 3);
  CHECK(t.fixed.induced(c1) == Graph::complete(3));
  REQUIRE(t.notes.size() == 1);
  CHECK(t.notes[0].rfind("applied", 0) == 0);
  const GlueProblem small = build_glue_problem(pg, pg, id, 8, r55t, 12);
  CHECK(seed_c1(small, tri).notes[0].rfind("skipped", 0) == 0);

  // Degree target: delta = 46 - 25 = 21, v has degree 2 in K plus a, b.
  const std::vector<SeedRule> deg = {SeedRule::parse("degree_target")};
  const GlueProblem d = seed_c1(base, deg);
  const int v = std::countr_zero(d.role_set(Role::kK));
  const int before = base.fixed.degree(v);
  CHECK(d.fixed.degree(v) == before + std::min(3, 21 - before));
  CHECK(!d.priority.empty());

  // Only the first applicable rule is used.
  const std::vector<SeedRule> both = {SeedRule::parse("triangle"),
                                      SeedRule::parse("degree_target")};
  const GlueProblem tb = seed_c1(base, both);
  REQUIRE(tb.notes.size() == 2);
  CHECK(tb.notes[1].rfind("skipped", 0) == 0);
  CHECK(tb.fixed.degree(v) == before);

  // |C1| = 1 and |C1| = 2 rules.
  const GlueProblem one = build_glue_problem(pg, pg, id, 6, r55t, 46);
  const GlueProblem w = seed_c1(one, std::vector<SeedRule>{SeedRule::parse("adjacent_to_w")});
  CHECK(w.fixed.degree(v) == before + 1);
  const GlueProblem two = build_glue_problem(pg, pg, id, 7, r55t, 46);
  const GlueProblem e = seed_c1(two, std::vector<SeedRule>{SeedRule::parse("edge_near_v")});
  const auto c1e = e.role_set(Role::kC1);
  CHECK(e.fixed.induced(c1e).edge_count() == 1);
  CHECK(popcount(e.fixed.row(v) & c1e) == 2);
  CHECK(seed_c1(two, tri).notes[0].rfind("skipped", 0) == 0);
}

TEST_CASE("seeded solutions are unseeded solutions") {
  // Aimed at order 17 under (4,4), every vertex needs degree 8.
  std::mt19937_64 rng(151);
  testing::GlueGenerator gen(RamseyType(4, 4), 5);
  std::size_t applied = 0;
  for (int i = 0; i < 80; ++i) {
    auto p = gen.next(rng, 18);
    REQUIRE(p.has_value());
    if (p->c1_size() == 0) continue;
    p->final_n = 17;
    for (const char* rule : {"degree_target", "adjacent_to_w", "edge_near_v"}) {
      const GlueProblem s = seed_c1(*p, std::vector<SeedRule>{SeedRule::parse(rule)});
      if (s.notes.empty() || s.notes[0].rfind("applied", 0) != 0) continue;
      ++applied;
      const auto full = brute_force_glue(*p);
      const auto seeded = solve_glue(s).solutions;
      CHECK(seeded == brute_force_glue(s));
      for (const auto& k : seeded) CHECK(std::binary_search(full.begin(), full.end(), k));
    }
  }
  CHECK(applied > 0);
}

TEST_CASE("gadget validation") {
  const Catalog c33 = census({RamseyType(3, 3), 5});
  const auto edge = SeedRule::parse("gadget:" + graph6_encode(Graph::complete(2)) + ":5");
  validate_gadget(edge, c33);
  const auto tri = SeedRule::parse("gadget:" + graph6_encode(Graph::complete(3)) + ":5");
  CHECK_THROWS_AS(validate_gadget(tri, c33), ValidationError);
  const auto wrong_m = SeedRule::parse("gadget:" + graph6_encode(Graph::complete(2)) + ":4");
  CHECK_THROWS_AS(validate_gadget(wrong_m, c33), ValidationError);
}

TEST_CASE("campaigns") {
  CampaignConfig cfg;
  cfg.rt = RamseyType(3, 4);
  cfg.final_n = 9;
  const auto none = run_campaign({}, cfg);
  CHECK(none.phases.empty());
  CHECK(none.solutions.empty());
  CHECK(none.undecided.empty());

  // Neighbourhoods in a triangle-free graph are independent sets.
  CampaignEntry entry;
  for (int m = 1; m <= 3; ++m) {
    entry.left.push_back(Graph::empty(m));
    entry.right.push_back(Graph::empty(m));
  }
  const std::vector<CampaignEntry> schedule = {entry};
  const auto nine = run_campaign(schedule, cfg);
  CHECK(nine.solutions.empty());
  CHECK(nine.undecided.empty());
  CHECK(!nine.phases.empty());

  cfg.final_n = 8;
  const auto eight = run_campaign(schedule, cfg);
  const Catalog direct = census({RamseyType(3, 4), 8});
  CHECK(eight.solutions == direct.sorted_keys());
  for (const auto& k : eight.solutions) {
    const Graph g = graph6_decode(k);
    CHECK(is_ramsey(g, RamseyType(3, 4)));
    // Removing any vertex lands in the census one level down.
    const Catalog seven = census({RamseyType(3, 4), 7});
    for (int v = 0; v < 8; ++v) {
      VertexSet keep = g.vertices() & ~bit(v);
      CHECK(seven.contains(g.induced(keep)));
    }
  }

  cfg.workers = 4;
  const auto eight4 = run_campaign(schedule, cfg);
  CHECK(eight4.solutions == eight.solutions);
  REQUIRE(eight4.phases.size() == eight.phases.size());
  for (std::size_t i = 0; i < eight.phases.size(); ++i) {
    CHECK(eight4.phases[i].sat == eight.phases[i].sat);
    CHECK(eight4.phases[i].unsat == eight.phases[i].unsat);
  }

  // A tiny budget leaves undecided tasks, and they are listed.
  cfg.solve.budget.max_decisions = 1;
  const auto starved = run_campaign(schedule, cfg);
  CHECK(!starved.undecided.empty());
}

TEST_CASE("gluing recovers the unique R(4,4,17) graph") {
  CampaignEntry entry;
  entry.left = census({RamseyType(3, 4), 8}).graphs();
  entry.right = entry.left;
  CampaignConfig cfg;
  cfg.rt = RamseyType(4, 4);
  cfg.final_n = 17;
  cfg.start_c1 = 4;
  const std::vector<CampaignEntry> schedule = {entry};
  const auto r = run_campaign(schedule, cfg);
  CHECK(r.undecided.empty());
  REQUIRE(r.solutions.size() == 1);
  CHECK(r.solutions[0] == canonical_key(Graph::paley(17)));
}
