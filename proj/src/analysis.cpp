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

#include "r55/analysis.hpp"

#include <algorithm>
#include <charconv>

#include "r55/errors.hpp"
#include "r55/graph6.hpp"
#include "r55/kernels.hpp"
#include "r55/parallel.hpp"

namespace r55 {

std::optional<int> RamseyTable::get(int s, int t) const {
  if (s > t) std::swap(s, t);
  const auto it = values_.find({s, t});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

void RamseyTable::set(int s, int t, int value) {
  if (s > t) std::swap(s, t);
  values_[{s, t}] = value;
}

RamseyTable RamseyTable::known() {
  RamseyTable table;
  for (int t = 1; t <= 64; ++t) {
    table.set(1, t, 1);
    if (t >= 2) table.set(2, t, t);
  }
  const int r3[] = {6, 9, 14, 18, 23, 28, 36};
  for (int t = 3; t <= 9; ++t) table.set(3, t, r3[t - 3]);
  table.set(4, 4, 18);
  table.set(4, 5, 25);
  return table;
}

std::int64_t ExcessReport::total() const {
  R55_CHECK(total2 % 2 == 0, "excess total is not an integer");
  return total2 / 2;
}

ExcessReport excess(const Graph& f) {
  const int n = f.order();
  ExcessReport report;
  report.per_vertex.reserve(n);
  std::vector<int> plus(n);
  std::vector<int> minus(n);
  kernels::split_edge_counts(f, plus, minus);
  for (int v = 0; v < n; ++v) {
    VertexExcess x;
    x.v = v;
    x.degree = f.degree(v);
    x.plus_edges = plus[v];
    x.minus_edges = minus[v];
    x.contribution2 = 2 * static_cast<std::int64_t>(x.minus_edges) -
                      2 * static_cast<std::int64_t>(x.plus_edges) -
                      static_cast<std::int64_t>(x.degree) * (n - 2 * x.degree);
    report.total2 += x.contribution2;
    report.per_vertex.push_back(x);
  }
  return report;
}

bool offsets_consistent(int n, int degree, std::pair<int, int> ref) {
  const std::int64_t lhs =
      2 * static_cast<std::int64_t>(ref.first) - 2 * ref.second -
      static_cast<std::int64_t>(degree) * (n - 2 * degree);
  return lhs == 2;
}

ContributionReport excess_contributions(const Graph& f,
                                        const ExcessOffsets& offsets) {
  const int n = f.order();
  const ExcessReport base = excess(f);
  ContributionReport out;
  out.values.reserve(n);
  for (const auto& x : base.per_vertex) {
    const auto it = offsets.find(x.degree);
    if (it == offsets.end()) {
      throw ValidationError("no reference constants for degree " +
                            std::to_string(x.degree));
    }
    if (!offsets_consistent(n, x.degree, it->second)) {
      throw ValidationError(
          "reference constants (" + std::to_string(it->second.first) + "," +
          std::to_string(it->second.second) + ") are inconsistent for degree " +
          std::to_string(x.degree) + " on " + std::to_string(n) + " vertices");
    }
    const std::int64_t value = (x.minus_edges - it->second.first) +
                               (it->second.second - x.plus_edges) + 1;
    out.values.push_back(value);
    out.sum += value;
  }
  R55_CHECK(out.sum == base.total(),
            "contribution sum differs from the excess total");
  return out;
}

DegreeBounds degree_bounds(RamseyType rt, int m, const RamseyTable& table) {
  const auto down = table.get(rt.s - 1, rt.t);
  const auto left = table.get(rt.s, rt.t - 1);
  if (!down || !left) {
    throw ValidationError("degree_bounds needs R(" + std::to_string(rt.s - 1) +
                          "," + std::to_string(rt.t) + ") and R(" +
                          std::to_string(rt.s) + "," +
                          std::to_string(rt.t - 1) + ")");
  }
  return {std::max(0, m - *left), std::min(m - 1, *down - 1)};
}

std::int64_t CliqueNeighborReport::level_sum(int j) const {
  std::int64_t sum = 0;
  for (std::size_t mask = 1; mask < intersection.size(); ++mask) {
    if (std::popcount(mask) == j) sum += intersection[mask];
  }
  return sum;
}

CliqueNeighborReport clique_neighbor_partition(const Graph& f,
                                               std::span<const int> clique,
                                               VertexSet universe,
                                               NeighborMode mode) {
  const int k = static_cast<int>(clique.size());
  if (k > 16) throw ValidationError("clique_neighbor_partition: clique too large");
  VertexSet members = 0;
  for (int w : clique) {
    if (w < 0 || w >= f.order()) throw ValidationError("clique vertex out of range");
    members |= bit(w);
  }
  if (popcount(members) != k) {
    throw ValidationError("clique_neighbor_partition: repeated clique vertex");
  }
  for (int w : clique) {
    if ((members & ~bit(w) & ~f.row(w)) != 0) {
      throw ValidationError("clique_neighbor_partition: not a clique");
    }
  }
  if (universe & members) {
    throw ValidationError("clique_neighbor_partition: universe meets the clique");
  }
  universe &= f.vertices();

  CliqueNeighborReport r;
  r.clique.assign(clique.begin(), clique.end());
  for (int w : clique) {
    const VertexSet row = mode == NeighborMode::kNeighbors ? f.row(w) : f.co_row(w);
    r.sets.push_back(row & universe);
  }
  r.intersection.assign(std::size_t{1} << k, 0);
  for (std::size_t mask = 1; mask < r.intersection.size(); ++mask) {
    VertexSet common = universe;
    for (int i = 0; i < k; ++i) {
      if (mask >> i & 1U) common &= r.sets[i];
    }
    r.intersection[mask] = popcount(common);
  }
  r.membership.assign(k + 1, 0);
  VertexSet all = 0;
  for_each_vertex(universe, [&](int u) {
    int c = 0;
    for (int i = 0; i < k; ++i) c += (r.sets[i] >> u) & 1U;
    ++r.membership[c];
  });
  for (VertexSet s : r.sets) all |= s;
  r.union_size = popcount(all);
  return r;
}

namespace {

bool clique_with_bound(const Graph& g, VertexSet cand, int k, int budget,
                       std::vector<int>& path) {
  if (k == 0) return true;
  while (popcount(cand) >= k) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (g.degree(v) > budget) continue;
    path.push_back(v);
    if (clique_with_bound(g, cand & g.row(v), k - 1, budget - g.degree(v), path)) {
      return true;
    }
    path.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_clique_with_degree_bound(
    const Graph& g, int k, int degree_sum_max) {
  if (k < 0) throw ValidationError("clique size must be non-negative");
  std::vector<int> path;
  if (clique_with_bound(g, g.vertices(), k, degree_sum_max, path)) return path;
  return std::nullopt;
}

namespace {

int parse_int(const std::string& spec, std::string_view text) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("bad number in predicate '" + spec + "'");
  }
  return value;
}

bool compare(int lhs, const std::string& op, int rhs) {
  if (op == "<=") return lhs <= rhs;
  if (op == ">=") return lhs >= rhs;
  if (op == "<") return lhs < rhs;
  if (op == ">") return lhs > rhs;
  if (op == "=") return lhs == rhs;
  return lhs != rhs;
}

}  // namespace

GraphPredicate GraphPredicate::parse(const std::string& spec) {
  GraphPredicate p;
  p.spec_ = spec;
  if (spec == "regular") {
    p.name_ = spec;
    return p;
  }
  const auto op_pos = spec.find_first_of("<>=!");
  if (op_pos == std::string::npos || op_pos == 0) {
    throw ValidationError("unknown predicate '" + spec + "'");
  }
  p.name_ = spec.substr(0, op_pos);
  std::size_t op_len = 1;
  if (op_pos + 1 < spec.size() && spec[op_pos + 1] == '=') op_len = 2;
  p.op_ = spec.substr(op_pos, op_len);
  if (p.op_ == "!") throw ValidationError("unknown operator in '" + spec + "'");
  const std::string arg = spec.substr(op_pos + op_len);
  if (p.name_ == "min_degree" || p.name_ == "max_degree" || p.name_ == "edges") {
    p.value_ = parse_int(spec, arg);
  } else if (p.name_ == "contains" || p.name_ == "lacks") {
    if (p.op_ != "=") throw ValidationError("expected '=' in '" + spec + "'");
    p.pattern_ = graph6_decode(arg);
  } else if (p.name_ == "nonadjacent_low_pair") {
    if (p.op_ != "<=") throw ValidationError("expected '<=' in '" + spec + "'");
    p.value_ = parse_int(spec, arg);
  } else if (p.name_ == "clique_degree_sum") {
    const auto colon = arg.find(':');
    if (p.op_ != "=" || colon == std::string::npos) {
      throw ValidationError("expected clique_degree_sum=k:max, got '" + spec + "'");
    }
    p.value_ = parse_int(spec, std::string_view(arg).substr(0, colon));
    p.value2_ = parse_int(spec, std::string_view(arg).substr(colon + 1));
  } else {
    throw ValidationError("unknown predicate '" + spec + "'");
  }
  return p;
}

bool GraphPredicate::operator()(const Graph& g) const {
  if (name_ == "regular") {
    const auto d = g.degrees();
    return std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) == d.end();
  }
  if (name_ == "min_degree" || name_ == "max_degree") {
    const auto d = g.degrees();
    if (d.empty()) return false;
    const int x = name_ == "min_degree" ? *std::min_element(d.begin(), d.end())
                                        : *std::max_element(d.begin(), d.end());
    return compare(x, op_, value_);
  }
  if (name_ == "edges") return compare(g.edge_count(), op_, value_);
  if (name_ == "contains") return contains_induced(g, pattern_);
  if (name_ == "lacks") return !contains_induced(g, pattern_);
  if (name_ == "nonadjacent_low_pair") {
    VertexSet low = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) <= value_) low |= bit(v);
    }
    for (int v = 0; v < g.order(); ++v) {
      if ((low >> v & 1U) && (g.co_row(v) & low)) return true;
    }
    return false;
  }
  return find_clique_with_degree_bound(g, value_, value2_).has_value();
}

Catalog catalog_filter(const Catalog& cat,
                       std::span<const GraphPredicate> predicates, int workers) {
  const std::vector<std::string> keys = cat.sorted_keys();
  std::vector<char> keep(keys.size(), 0);
  parallel_for(keys.size(), workers, [&](std::size_t i) {
    const Graph g = graph6_decode(keys[i]);
    keep[i] = std::all_of(predicates.begin(), predicates.end(),
                          [&](const GraphPredicate& p) { return p(g); });
  });
  Catalog out(cat.type(), cat.order(), cat.bounds());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (keep[i]) out.insert_canonical(keys[i]);
  }
  out.provenance = cat.provenance;
  std::string joined;
  for (const auto& p : predicates) {
    if (!joined.empty()) joined += ";";
    joined += p.spec();
  }
  out.provenance.params["filter"] = joined;
  return out;
}

Catalog catalog_filter(const Catalog& cat,
                       const std::vector<std::string>& predicates, int workers) {
  std::vector<GraphPredicate> parsed;
  for (const auto& spec : predicates) parsed.push_back(GraphPredicate::parse(spec));
  return catalog_filter(cat, parsed, workers);
}

}  // namespace r55
