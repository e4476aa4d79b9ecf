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

// Gluing two pointed graphs along an edge ab.
//
// With G the neighbourhood of b (containing a) and H the neighbourhood of a
// (containing b), both share K = G_a^+ = H_b^+. The problem vertices are
// a, b, K, A = G - a - K, B = H - b - K and a set C1 adjacent to neither a
// nor b. Pairs inside G, inside H and at a or b are fixed; the pairs in
// A x B, A x C1, B x C1, C1 x C1 and K x C1 are free.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "r55/catalog.hpp"
#include "r55/graph.hpp"
#include "r55/sat.hpp"

namespace r55 {

struct PointedGraph {
  Graph g;
  int a = 0;
  Graph k;                 // induced on the neighbours of a
  std::vector<int> k_map;  // vertex i of k is vertex k_map[i] of g
  int k_edges = 0;
  std::uint64_t k_automorphisms = 1;
  // Position in the hardest-first order of the source graph's pointed
  // graphs; 0 is the hardest.
  int difficulty = 0;
  // Canonical key of g with a as its own colour class.
  std::string key;
};

PointedGraph make_pointed(const Graph& g, int a);

// Hardest first: larger |K|, then fewer edges in K, then more
// automorphisms of K, then the smaller point.
bool harder(const PointedGraph& x, const PointedGraph& y);

// Builds all |G| pointed graphs, sorts them hardest first, drops the first
// k-1 and removes isomorphic duplicates (keeping the hardest copy).
std::vector<PointedGraph> pointed_graphs(const Graph& g, int k = 1);

enum class Role : std::uint8_t { kPointA, kPointB, kK, kA, kB, kC1 };

std::string_view role_name(Role r);

struct GlueProblem {
  RamseyType rt;
  // The order every solution should eventually reach; rule preconditions
  // about |C| refer to it.
  int final_n = 0;
  std::vector<Role> roles;
  Graph fixed;                  // pairs known to be edges
  std::vector<VertexSet> known;  // known[v] has u iff pair uv is decided
  // Free pairs to branch on first.
  std::vector<std::pair<int, int>> priority;
  // Applied and skipped seed rules, in order.
  std::vector<std::string> notes;
  std::string origin;

  int order() const { return fixed.order(); }
  int base_order() const;  // |G| + |H| - |K|
  int c1_size() const;
  // |C| in a solution of order final_n.
  int c_size() const { return final_n - base_order(); }
  VertexSet role_set(Role r) const;

  bool is_free(int u, int v) const { return !((known[u] >> v) & 1U); }
  bool is_edge(int u, int v) const { return fixed.adjacent(u, v); }
  // Pairs (u < v) that are undecided, in lexicographic order.
  std::vector<std::pair<int, int>> free_pairs() const;
  // Decides a free pair; throws ValidationError if it is already decided.
  void fix(int u, int v, bool present);

  // Rows of pairs that may still be edges / non-edges.
  VertexSet maybe_edge(int v) const { return fixed.row(v) | free_row(v); }
  VertexSet maybe_non_edge(int v) const {
    return (fixed.co_row(v) & known[v]) | free_row(v);
  }
  VertexSet free_row(int v) const {
    return ~known[v] & fixed.vertices() & ~bit(v);
  }

  // An s-clique of fixed edges or a t-set of fixed non-edges.
  bool has_fixed_violation() const;

  // Equal for problems that are isomorphic by a role-preserving map; empty
  // when the problem is too large to hash (more than 32 vertices).
  std::string canonical_key() const;

  void check_invariants() const;
};

// iso maps pg1.k onto pg2.k: pg1.k.permuted(iso) == pg2.k. final_n
// defaults to target_n.
GlueProblem build_glue_problem(const PointedGraph& pg1, const PointedGraph& pg2,
                               std::span<const int> iso, int target_n,
                               RamseyType rt,
                               std::optional<int> final_n = std::nullopt);

// One problem per automorphism of K composed with a fixed isomorphism,
// minus problems isomorphic to an earlier one. Empty when the two K are
// not isomorphic.
std::vector<GlueProblem> glue_problems(const PointedGraph& pg1,
                                       const PointedGraph& pg2, int target_n,
                                       RamseyType rt,
                                       std::optional<int> final_n = std::nullopt);

struct SeedRule {
  enum class Kind {
    // v in K of maximal degree d becomes adjacent to min(|C1|, delta - d)
    // C1 vertices, delta the minimum degree allowed at final_n.
    kDegreeTarget,
    // |C1| = 1: the K vertex w of largest degree below delta is adjacent to
    // some vertex of C, taken as C1.
    kAdjacentToW,
    // |C1| = 2: the K vertex v of least degree k_min has at least t-1
    // neighbours in C when delta - k_min >= t-1; they span an edge, which
    // becomes C1 with both ends adjacent to v.
    kEdgeNearV,
    // |C1| = 3 and |C| >= R(3,t-1): C contains a triangle.
    kTriangle,
    // |C1| = |gadget| and |C| >= m: every graph in R(s,t-1,m) contains the
    // gadget as an induced subgraph, so C does too.
    kInducedGadget,
  };
  Kind kind = Kind::kDegreeTarget;
  Graph gadget;
  int gadget_m = 0;

  std::string name() const;
  // "degree_target", "adjacent_to_w", "edge_near_v", "triangle" or
  // "gadget:<graph6>:<m>".
  static SeedRule parse(const std::string& spec);
};

// Checks an induced-gadget rule against a catalog of R(s,t-1,m); throws
// ValidationError naming a member that lacks the gadget.
void validate_gadget(const SeedRule& rule, const Catalog& cat);

// Applies the first rule whose precondition holds; every rule that does not
// apply leaves a notice. Each rule picks C1 itself, so at most one is used.
GlueProblem seed_c1(const GlueProblem& p, std::span<const SeedRule> rules);

struct GlueSolveOptions {
  SolveMode mode = SolveMode::kAll;
  SolveBudget budget;
  bool symmetry_breaking = true;
};

struct GlueResult {
  SolveStatus status = SolveStatus::kUndecided;
  // Canonical keys of the solution graphs, sorted and deduplicated.
  std::vector<std::string> solutions;
  std::uint64_t model_count = 0;
  SolveStats stats;
};

GlueResult solve_glue(const GlueProblem& p, const GlueSolveOptions& opts = {});

// Every assignment of the free pairs checked directly; for testing.
std::vector<std::string> brute_force_glue(const GlueProblem& p);

struct CampaignEntry {
  std::vector<Graph> left;
  std::vector<Graph> right;
  int drop = 1;  // left side uses P_drop, right side P
};

struct CampaignConfig {
  RamseyType rt;
  int final_n = 0;
  int start_c1 = 0;
  std::vector<SeedRule> rules;
  GlueSolveOptions solve;
  int workers = 1;
};

struct CampaignTask {
  std::string id;
  GlueProblem problem;
  SolveStatus status = SolveStatus::kUndecided;
  std::size_t solutions = 0;
};

struct CampaignPhase {
  int phase = 0;
  std::size_t tasks = 0;
  std::size_t sat = 0;
  std::size_t unsat = 0;
  std::size_t undecided = 0;
};

struct CampaignReport {
  std::vector<CampaignPhase> phases;
  // Solutions of order final_n, canonical keys sorted.
  std::vector<std::string> solutions;
  // Tasks still undecided when the campaign stopped, with their phase.
  std::vector<std::string> undecided;
  std::size_t skipped = 0;  // pairs whose glued base exceeds final_n
};

// Phase 1 solves every task at |C1| = start_c1 (clamped so the problem does
// not exceed final_n). Satisfiable and undecided tasks re-enter the next
// phase with one more C1 vertex until they reach final_n.
CampaignReport run_campaign(std::span<const CampaignEntry> schedule,
                            const CampaignConfig& config);

}  // namespace r55
