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

#include "r55/glue.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "r55/analysis.hpp"
#include "r55/canon.hpp"
#include "r55/errors.hpp"
#include "r55/graph6.hpp"
#include "r55/parallel.hpp"

namespace r55 {

PointedGraph make_pointed(const Graph& g, int a) {
  if (a < 0 || a >= g.order()) throw ValidationError("point out of range");
  PointedGraph pg;
  pg.g = g;
  pg.a = a;
  for_each_vertex(g.row(a), [&](int v) { pg.k_map.push_back(v); });
  pg.k = g.induced(pg.k_map);
  pg.k_edges = pg.k.edge_count();
  if (pg.k.order() > kMaxAutomorphismOrder) {
    throw ValidationError("pointed graph type has more than " +
                          std::to_string(kMaxAutomorphismOrder) + " vertices");
  }
  pg.k_automorphisms = automorphisms(pg.k, 1).group_order;
  std::vector<int> colours(g.order(), 0);
  colours[a] = 1;
  pg.key = canonical_form(g, colours).key;
  return pg;
}

bool harder(const PointedGraph& x, const PointedGraph& y) {
  if (x.k.order() != y.k.order()) return x.k.order() > y.k.order();
  if (x.k_edges != y.k_edges) return x.k_edges < y.k_edges;
  if (x.k_automorphisms != y.k_automorphisms) {
    return x.k_automorphisms > y.k_automorphisms;
  }
  return x.a < y.a;
}

std::vector<PointedGraph> pointed_graphs(const Graph& g, int k) {
  if (k < 1) throw ValidationError("pointed_graphs: drop count k must be >= 1");
  std::vector<PointedGraph> all;
  for (int a = 0; a < g.order(); ++a) all.push_back(make_pointed(g, a));
  std::sort(all.begin(), all.end(), harder);
  for (std::size_t i = 0; i < all.size(); ++i) all[i].difficulty = static_cast<int>(i);
  std::vector<PointedGraph> out;
  std::unordered_set<std::string> seen;
  for (std::size_t i = static_cast<std::size_t>(k - 1); i < all.size(); ++i) {
    if (seen.insert(all[i].key).second) out.push_back(std::move(all[i]));
  }
  return out;
}

std::string_view role_name(Role r) {
  switch (r) {
    case Role::kPointA:
      return "a";
    case Role::kPointB:
      return "b";
    case Role::kK:
      return "K";
    case Role::kA:
      return "A";
    case Role::kB:
      return "B";
    case Role::kC1:
      return "C1";
  }
  return "?";
}

int GlueProblem::base_order() const { return order() - c1_size(); }

int GlueProblem::c1_size() const { return popcount(role_set(Role::kC1)); }

VertexSet GlueProblem::role_set(Role r) const {
  VertexSet out = 0;
  for (std::size_t v = 0; v < roles.size(); ++v) {
    if (roles[v] == r) out |= bit(static_cast<int>(v));
  }
  return out;
}

std::vector<std::pair<int, int>> GlueProblem::free_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for_each_vertex(free_row(u) & ~first_n(u + 1), [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

void GlueProblem::fix(int u, int v, bool present) {
  if (u == v || u < 0 || v < 0 || u >= order() || v >= order()) {
    throw ValidationError("fix: bad vertex pair");
  }
  if (!is_free(u, v)) throw ValidationError("fix: pair is already decided");
  known[u] |= bit(v);
  known[v] |= bit(u);
  if (present) fixed.add_edge(u, v);
}

bool GlueProblem::has_fixed_violation() const {
  if (has_clique(fixed, rt.s)) return true;
  std::vector<VertexSet> rows(order());
  for (int v = 0; v < order(); ++v) rows[v] = fixed.co_row(v) & known[v];
  return has_clique(Graph::from_rows(rows), rt.t);
}

std::string GlueProblem::canonical_key() const {
  const int n = order();
  if (2 * n > kMaxVertices) return {};
  Graph layered(2 * n);
  std::vector<int> colours(2 * n);
  for (int v = 0; v < n; ++v) {
    colours[v] = static_cast<int>(roles[v]);
    colours[n + v] = 6 + static_cast<int>(roles[v]);
    layered.add_edge(v, n + v);
    for (int u = v + 1; u < n; ++u) {
      if (is_edge(u, v)) layered.add_edge(u, v);
      if (is_free(u, v)) layered.add_edge(n + u, n + v);
    }
  }
  return canonical_form(layered, colours).key + "|" + rt.str() + "|" +
         std::to_string(final_n);
}

void GlueProblem::check_invariants() const {
  fixed.check_invariants();
  R55_CHECK(static_cast<int>(roles.size()) == order(), "roles size mismatch");
  R55_CHECK(static_cast<int>(known.size()) == order(), "known size mismatch");
  R55_CHECK(order() >= 2 && roles[0] == Role::kPointA && roles[1] == Role::kPointB,
            "vertices 0 and 1 must be a and b");
  for (int v = 0; v < order(); ++v) {
    R55_CHECK(!((known[v] >> v) & 1U), "pair with itself marked known");
    R55_CHECK((fixed.row(v) & ~known[v]) == 0, "edge on an undecided pair");
    for (int u = 0; u < order(); ++u) {
      R55_CHECK(((known[v] >> u) & 1U) == ((known[u] >> v) & 1U), "known not symmetric");
    }
  }
  R55_CHECK(is_edge(0, 1), "a and b must be adjacent");
  const VertexSet k = role_set(Role::kK);
  const VertexSet a_side = role_set(Role::kA);
  const VertexSet b_side = role_set(Role::kB);
  const VertexSet c1 = role_set(Role::kC1);
  R55_CHECK(fixed.row(0) == (bit(1) | k | b_side), "N(a) must be {b} + K + B");
  R55_CHECK(fixed.row(1) == (bit(0) | k | a_side), "N(b) must be {a} + K + A");
  R55_CHECK((known[0] & known[1] & c1) == c1, "a, b to C1 must be decided");
  // Free pairs only in the allowed blocks.
  for (const auto& [u, v] : free_pairs()) {
    const Role ru = roles[u];
    const Role rv = roles[v];
    const bool ok = (ru == Role::kA && rv == Role::kB) ||
                    (ru == Role::kB && rv == Role::kA) || ru == Role::kC1 ||
                    rv == Role::kC1;
    R55_CHECK(ok, "free pair outside A x B and the C1 blocks");
    R55_CHECK(ru != Role::kPointA && ru != Role::kPointB &&
                  rv != Role::kPointA && rv != Role::kPointB,
              "pairs at a or b must be decided");
  }
}

GlueProblem build_glue_problem(const PointedGraph& pg1, const PointedGraph& pg2,
                               std::span<const int> iso, int target_n,
                               RamseyType rt, std::optional<int> final_n) {
  const int kn = pg1.k.order();
  if (static_cast<int>(iso.size()) != kn || pg2.k.order() != kn) {
    throw ValidationError("glue: isomorphism has the wrong size");
  }
  std::vector<int> inverse(kn, -1);
  for (int i = 0; i < kn; ++i) {
    if (iso[i] < 0 || iso[i] >= kn || inverse[iso[i]] != -1) {
      throw ValidationError("glue: isomorphism is not a permutation");
    }
    inverse[iso[i]] = i;
  }
  if (!(pg1.k.permuted(iso) == pg2.k)) {
    throw ValidationError("glue: map is not an isomorphism between the two types");
  }
  const int g_order = pg1.g.order();
  const int h_order = pg2.g.order();
  const int base = g_order + h_order - kn;
  if (target_n < base) {
    throw ValidationError("glue: target order " + std::to_string(target_n) +
                          " is below |G| + |H| - |K| = " + std::to_string(base));
  }
  if (target_n > kMaxVertices) throw ValidationError("glue: target exceeds 64 vertices");

  GlueProblem p;
  p.rt = rt;
  p.final_n = final_n.value_or(target_n);
  if (p.final_n < target_n) throw ValidationError("glue: final order below target");
  p.fixed = Graph(target_n);
  p.known.assign(target_n, 0);
  p.roles.assign(target_n, Role::kC1);

  // Problem vertex of each vertex of G and H.
  std::vector<int> g_map(g_order, -1);
  std::vector<int> h_map(h_order, -1);
  g_map[pg1.a] = 0;
  h_map[pg2.a] = 1;
  p.roles[0] = Role::kPointA;
  p.roles[1] = Role::kPointB;
  for (int i = 0; i < kn; ++i) {
    g_map[pg1.k_map[i]] = 2 + i;
    h_map[pg2.k_map[iso[i]]] = 2 + i;
    p.roles[2 + i] = Role::kK;
  }
  int next = 2 + kn;
  for (int v = 0; v < g_order; ++v) {
    if (g_map[v] < 0) {
      p.roles[next] = Role::kA;
      g_map[v] = next++;
    }
  }
  for (int v = 0; v < h_order; ++v) {
    if (h_map[v] < 0) {
      p.roles[next] = Role::kB;
      h_map[v] = next++;
    }
  }
  auto decide = [&](int u, int v, bool present) {
    if (u == v) return;
    if ((p.known[u] >> v) & 1U) {
      R55_CHECK(p.fixed.adjacent(u, v) == present, "glue: conflicting fixed pair");
      return;
    }
    p.known[u] |= bit(v);
    p.known[v] |= bit(u);
    if (present) p.fixed.add_edge(u, v);
  };
  // G is the neighbourhood of b, H that of a.
  VertexSet g_side = 0;
  VertexSet h_side = 0;
  for (int u = 0; u < g_order; ++u) {
    g_side |= bit(g_map[u]);
    for (int v = u + 1; v < g_order; ++v) decide(g_map[u], g_map[v], pg1.g.adjacent(u, v));
  }
  for (int u = 0; u < h_order; ++u) {
    h_side |= bit(h_map[u]);
    for (int v = u + 1; v < h_order; ++v) decide(h_map[u], h_map[v], pg2.g.adjacent(u, v));
  }
  for_each_vertex(g_side, [&](int v) { decide(1, v, true); });
  for_each_vertex(h_side, [&](int v) { decide(0, v, true); });
  for (int v = base; v < target_n; ++v) {
    decide(0, v, false);
    decide(1, v, false);
  }
  p.origin = pg1.key + " @ " + pg2.key;
  p.check_invariants();
  return p;
}

std::vector<GlueProblem> glue_problems(const PointedGraph& pg1,
                                       const PointedGraph& pg2, int target_n,
                                       RamseyType rt, std::optional<int> final_n) {
  const auto iso = find_isomorphism(pg1.k, pg2.k);
  if (!iso) return {};
  const AutomorphismSet auts = automorphisms(pg1.k);
  if (auts.generators_only) {
    throw ResourceExhausted("glue: automorphism group of K is too large to list");
  }
  std::vector<GlueProblem> out;
  std::unordered_set<std::string> seen;
  for (const auto& sigma : auts.perms) {
    std::vector<int> composed(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) composed[i] = (*iso)[sigma[i]];
    GlueProblem p = build_glue_problem(pg1, pg2, composed, target_n, rt, final_n);
    const std::string key = p.canonical_key();
    if (!key.empty() && !seen.insert(key).second) continue;
    out.push_back(std::move(p));
  }
  return out;
}

std::string SeedRule::name() const {
  switch (kind) {
    case Kind::kDegreeTarget:
      return "degree_target";
    case Kind::kAdjacentToW:
      return "adjacent_to_w";
    case Kind::kEdgeNearV:
      return "edge_near_v";
    case Kind::kTriangle:
      return "triangle";
    case Kind::kInducedGadget:
      return "gadget:" + graph6_encode(gadget) + ":" + std::to_string(gadget_m);
  }
  return "?";
}

SeedRule SeedRule::parse(const std::string& spec) {
  SeedRule r;
  if (spec == "degree_target") {
    r.kind = Kind::kDegreeTarget;
  } else if (spec == "adjacent_to_w") {
    r.kind = Kind::kAdjacentToW;
  } else if (spec == "edge_near_v") {
    r.kind = Kind::kEdgeNearV;
  } else if (spec == "triangle") {
    r.kind = Kind::kTriangle;
  } else if (spec.rfind("gadget:", 0) == 0) {
    const auto colon = spec.rfind(':');
    if (colon <= 7) throw ValidationError("expected gadget:<graph6>:<m>, got " + spec);
    r.kind = Kind::kInducedGadget;
    r.gadget = graph6_decode(spec.substr(7, colon - 7));
    try {
      r.gadget_m = std::stoi(spec.substr(colon + 1));
    } catch (const std::exception&) {
      throw ValidationError("bad gadget size in " + spec);
    }
    if (r.gadget.order() < 1 || r.gadget_m < r.gadget.order()) {
      throw ValidationError("gadget must be nonempty and fit in m vertices: " + spec);
    }
  } else {
    throw ValidationError("unknown seed rule '" + spec + "'");
  }
  return r;
}

void validate_gadget(const SeedRule& rule, const Catalog& cat) {
  if (rule.kind != SeedRule::Kind::kInducedGadget) return;
  if (cat.order() != rule.gadget_m) {
    throw ValidationError("gadget validation needs a catalog of order " +
                          std::to_string(rule.gadget_m));
  }
  if (cat.bounds().lo || cat.bounds().hi) {
    throw ValidationError("gadget validation needs a complete catalog");
  }
  for (const auto& key : cat.sorted_keys()) {
    if (!contains_induced(graph6_decode(key), rule.gadget)) {
      throw ValidationError("gadget " + graph6_encode(rule.gadget) +
                            " is not induced in catalog member " + key);
    }
  }
}

namespace {

// Degree of v counting decided edges only.
int fixed_degree(const GlueProblem& p, int v) { return p.fixed.degree(v); }

std::vector<int> c1_vertices(const GlueProblem& p) {
  std::vector<int> out;
  for_each_vertex(p.role_set(Role::kC1), [&](int v) { out.push_back(v); });
  return out;
}

std::optional<int> minimum_degree(const GlueProblem& p) {
  const RamseyTable table = RamseyTable::known();
  if (!table.get(p.rt.s - 1, p.rt.t) || !table.get(p.rt.s, p.rt.t - 1)) {
    return std::nullopt;
  }
  return degree_bounds(p.rt, p.final_n, table).lo;
}

void skip(GlueProblem& p, const SeedRule& r, const std::string& why) {
  p.notes.push_back("skipped " + r.name() + ": " + why);
}

void apply(GlueProblem& p, const SeedRule& rule) {
  const std::vector<int> c1 = c1_vertices(p);
  const VertexSet k = p.role_set(Role::kK);
  const int c1n = static_cast<int>(c1.size());
  switch (rule.kind) {
    case SeedRule::Kind::kDegreeTarget: {
      const auto delta = minimum_degree(p);
      if (!delta) return skip(p, rule, "minimum degree unknown for this type");
      if (c1n == 0 || k == 0) return skip(p, rule, "needs K and C1 nonempty");
      int v = -1;
      for_each_vertex(k, [&](int x) {
        if (v < 0 || fixed_degree(p, x) > fixed_degree(p, v)) v = x;
      });
      const int d = fixed_degree(p, v);
      const int want = std::min(c1n, *delta - d);
      if (want <= 0) return skip(p, rule, "vertex already reaches the minimum degree");
      for (int i = 0; i < c1n; ++i) {
        if (!p.is_free(v, c1[i])) {
          return skip(p, rule, "pairs at the target vertex already decided");
        }
      }
      for (int i = 0; i < want; ++i) p.fix(v, c1[i], true);
      // Branch first on pairs at v, then on pairs inside N(v).
      for (int u = 0; u < p.order(); ++u) {
        if (u != v && p.is_free(v, u)) p.priority.emplace_back(std::min(u, v), std::max(u, v));
      }
      const VertexSet nv = p.maybe_edge(v);
      for (const auto& [x, y] : p.free_pairs()) {
        if ((nv >> x & 1U) && (nv >> y & 1U)) p.priority.emplace_back(x, y);
      }
      p.notes.push_back("applied degree_target: v=" + std::to_string(v) + " d=" +
                        std::to_string(d) + " joined to " + std::to_string(want) +
                        " of C1");
      return;
    }
    case SeedRule::Kind::kAdjacentToW: {
      const auto delta = minimum_degree(p);
      if (!delta) return skip(p, rule, "minimum degree unknown for this type");
      if (c1n != 1) return skip(p, rule, "needs |C1| = 1");
      int w = -1;
      for_each_vertex(k, [&](int x) {
        const int dx = fixed_degree(p, x);
        if (dx < *delta && (w < 0 || dx > fixed_degree(p, w))) w = x;
      });
      if (w < 0) return skip(p, rule, "every K vertex already has degree >= delta");
      if (!p.is_free(w, c1[0])) return skip(p, rule, "pair already decided");
      p.fix(w, c1[0], true);
      p.notes.push_back("applied adjacent_to_w: w=" + std::to_string(w));
      return;
    }
    case SeedRule::Kind::kEdgeNearV: {
      const auto delta = minimum_degree(p);
      if (!delta) return skip(p, rule, "minimum degree unknown for this type");
      if (c1n != 2) return skip(p, rule, "needs |C1| = 2");
      if (k == 0) return skip(p, rule, "K is empty");
      int v = -1;
      for_each_vertex(k, [&](int x) {
        if (v < 0 || fixed_degree(p, x) < fixed_degree(p, v)) v = x;
      });
      const int kmin = fixed_degree(p, v);
      if (*delta - kmin < p.rt.t - 1) {
        return skip(p, rule, "k_min too large to force t-1 neighbours in C");
      }
      if (!p.is_free(c1[0], c1[1]) || !p.is_free(v, c1[0]) || !p.is_free(v, c1[1])) {
        return skip(p, rule, "pairs already decided");
      }
      p.fix(c1[0], c1[1], true);
      p.fix(v, c1[0], true);
      p.fix(v, c1[1], true);
      p.notes.push_back("applied edge_near_v: v=" + std::to_string(v) +
                        " k_min=" + std::to_string(kmin));
      return;
    }
    case SeedRule::Kind::kTriangle: {
      if (c1n != 3) return skip(p, rule, "needs |C1| = 3");
      const auto r = RamseyTable::known().get(3, p.rt.t - 1);
      if (p.rt.t < 3 || !r) return skip(p, rule, "R(3,t-1) unknown");
      if (p.c_size() < *r) return skip(p, rule, "|C| below R(3,t-1)");
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
          if (!p.is_free(c1[i], c1[j])) return skip(p, rule, "pairs already decided");
        }
      }
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) p.fix(c1[i], c1[j], true);
      }
      p.notes.push_back("applied triangle");
      return;
    }
    case SeedRule::Kind::kInducedGadget: {
      const int m = rule.gadget.order();
      if (c1n != m) return skip(p, rule, "needs |C1| = |gadget|");
      if (p.c_size() < rule.gadget_m) return skip(p, rule, "|C| below the gadget bound");
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          if (!p.is_free(c1[i], c1[j])) return skip(p, rule, "pairs already decided");
        }
      }
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) p.fix(c1[i], c1[j], rule.gadget.adjacent(i, j));
      }
      p.notes.push_back("applied " + rule.name());
      return;
    }
  }
}

}  // namespace

GlueProblem seed_c1(const GlueProblem& p, std::span<const SeedRule> rules) {
  GlueProblem out = p;
  // Each rule picks which vertices of C form C1, so at most one may apply.
  bool chosen = false;
  for (const auto& rule : rules) {
    if (chosen) {
      skip(out, rule, "C1 already chosen by an earlier rule");
      continue;
    }
    const std::size_t before = out.notes.size();
    apply(out, rule);
    chosen = out.notes.size() > before && out.notes.back().rfind("applied", 0) == 0;
  }
  out.check_invariants();
  return out;
}

GlueResult solve_glue(const GlueProblem& p, const GlueSolveOptions& opts) {
  const Cnf cnf = encode(p, {opts.symmetry_breaking});
  const SolveOutcome outcome = solve(cnf, opts.mode, opts.budget);
  GlueResult r;
  r.status = outcome.status;
  r.model_count = outcome.model_count;
  r.stats = outcome.stats;
  std::set<std::string> keys;
  for (const auto& model : outcome.models) {
    keys.insert(canonical_key(from_model(cnf, model, p)));
  }
  r.solutions.assign(keys.begin(), keys.end());
  return r;
}

std::vector<std::string> brute_force_glue(const GlueProblem& p) {
  const auto pairs = p.free_pairs();
  if (pairs.size() > 24) throw ValidationError("brute force limited to 24 free pairs");
  std::set<std::string> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g = p.fixed;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
    }
    if (is_ramsey(g, p.rt)) keys.insert(canonical_key(g));
  }
  return {keys.begin(), keys.end()};
}

namespace {

struct TaskSeed {
  std::string id;
  PointedGraph pg1;
  PointedGraph pg2;
  std::vector<int> iso;
  int base = 0;
};

}  // namespace

CampaignReport run_campaign(std::span<const CampaignEntry> schedule,
                            const CampaignConfig& config) {
  CampaignReport report;
  std::vector<TaskSeed> tasks;
  for (std::size_t e = 0; e < schedule.size(); ++e) {
    const auto& entry = schedule[e];
    std::vector<std::vector<PointedGraph>> right_pointed;
    for (const auto& h : entry.right) right_pointed.push_back(pointed_graphs(h, 1));
    for (std::size_t li = 0; li < entry.left.size(); ++li) {
      for (const auto& pg1 : pointed_graphs(entry.left[li], entry.drop)) {
        for (std::size_t ri = 0; ri < entry.right.size(); ++ri) {
          for (const auto& pg2 : right_pointed[ri]) {
            const auto iso = find_isomorphism(pg1.k, pg2.k);
            if (!iso) continue;
            const int base = pg1.g.order() + pg2.g.order() - pg1.k.order();
            if (base > config.final_n) {
              ++report.skipped;
              continue;
            }
            const AutomorphismSet auts = automorphisms(pg1.k);
            if (auts.generators_only) {
              throw ResourceExhausted("campaign: automorphism group of K too large");
            }
            std::unordered_set<std::string> seen;
            for (std::size_t ai = 0; ai < auts.perms.size(); ++ai) {
              std::vector<int> composed(auts.perms[ai].size());
              for (std::size_t i = 0; i < composed.size(); ++i) {
                composed[i] = (*iso)[auts.perms[ai][i]];
              }
              const GlueProblem probe =
                  build_glue_problem(pg1, pg2, composed, base, config.rt, config.final_n);
              const std::string key = probe.canonical_key();
              if (!key.empty() && !seen.insert(key).second) continue;
              tasks.push_back({"e" + std::to_string(e) + ":l" + std::to_string(li) +
                                   "." + std::to_string(pg1.a) + ":r" +
                                   std::to_string(ri) + "." + std::to_string(pg2.a) +
                                   ":k" + std::to_string(ai),
                               pg1, pg2, composed, base});
            }
          }
        }
      }
    }
  }

  std::set<std::string> solutions;
  std::vector<std::size_t> active(tasks.size());
  std::iota(active.begin(), active.end(), 0);
  std::vector<int> c1(tasks.size(), config.start_c1);
  for (int phase = 1; !active.empty(); ++phase) {
    std::vector<GlueResult> results(active.size());
    std::vector<int> targets(active.size());
    parallel_for(active.size(), config.workers, [&](std::size_t i) {
      const TaskSeed& t = tasks[active[i]];
      const int target = std::min(config.final_n, t.base + c1[active[i]]);
      targets[i] = target;
      GlueProblem p =
          build_glue_problem(t.pg1, t.pg2, t.iso, target, config.rt, config.final_n);
      p = seed_c1(p, config.rules);
      GlueSolveOptions opts = config.solve;
      // Only final-size problems need their solutions listed.
      if (target < config.final_n && opts.mode == SolveMode::kAll) {
        opts.mode = SolveMode::kFirst;
      }
      results[i] = solve_glue(p, opts);
    });
    CampaignPhase stats;
    stats.phase = phase;
    stats.tasks = active.size();
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const std::size_t t = active[i];
      const GlueResult& r = results[i];
      switch (r.status) {
        case SolveStatus::kUnsat:
          ++stats.unsat;
          break;
        case SolveStatus::kSat:
          ++stats.sat;
          break;
        case SolveStatus::kUndecided:
          ++stats.undecided;
          break;
      }
      const bool at_final = targets[i] >= config.final_n;
      if (at_final) {
        solutions.insert(r.solutions.begin(), r.solutions.end());
        if (r.status == SolveStatus::kUndecided) {
          report.undecided.push_back(tasks[t].id + "@n=" + std::to_string(targets[i]));
        }
      } else if (r.status != SolveStatus::kUnsat) {
        ++c1[t];
        next.push_back(t);
      }
    }
    report.phases.push_back(stats);
    active = std::move(next);
  }
  report.solutions.assign(solutions.begin(), solutions.end());
  return report;
}

}  // namespace r55
