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

#include "r55/census.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "r55/analysis.hpp"
#include "r55/canon.hpp"
#include "r55/errors.hpp"
#include "r55/graph6.hpp"
#include "r55/parallel.hpp"

namespace r55 {

namespace fs = std::filesystem;
using nlohmann::json;

void CensusSpec::validate() const {
  if (n < 1 || n > kMaxVertices) {
    throw ValidationError("census order must be in [1, 64]");
  }
  if (e_min && e_max && *e_min > *e_max) {
    throw ValidationError("census edge bounds are empty (e_min > e_max)");
  }
}

namespace {

void emit(const ProgressSink& sink, const json& record) {
  if (sink) sink(record.dump());
}

class ExtensionSearch {
 public:
  ExtensionSearch(const Graph& g, RamseyType rt, int min_size, int max_size,
                  const std::function<void(VertexSet)>& visit)
      : g_(g),
        s2_(rt.s - 2),
        t2_(rt.t - 2),
        min_size_(min_size),
        max_size_(max_size),
        visit_(visit) {}

  void run() { step(0, 0, 0, 0); }

 private:
  void step(int v, VertexSet in, VertexSet out, int size) {
    if (size + (g_.order() - v) < min_size_) return;
    if (v == g_.order()) {
      visit_(in);
      return;
    }
    if (size < max_size_ && !has_clique_in(g_, in & g_.row(v), s2_)) {
      step(v + 1, in | bit(v), out, size + 1);
    }
    if (!has_independent_set_in(g_, out & g_.co_row(v), t2_)) {
      step(v + 1, in, out | bit(v), size);
    }
  }

  const Graph& g_;
  int s2_;
  int t2_;
  int min_size_;
  int max_size_;
  const std::function<void(VertexSet)>& visit_;
};

// Canonical keys of the admissible children of one parent.
std::vector<std::string> children_of(const Graph& parent, RamseyType rt,
                                     const EdgeBounds& child_bounds) {
  const int e = parent.edge_count();
  const int min_size = child_bounds.lo ? *child_bounds.lo - e : 0;
  const int max_size =
      child_bounds.hi ? *child_bounds.hi - e : parent.order();
  std::vector<std::string> keys;
  if (max_size < 0 || min_size > parent.order()) return keys;
  for_each_extension_set(parent, rt, min_size, max_size, [&](VertexSet s) {
    keys.push_back(canonical_key(parent.with_vertex(s)));
  });
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

json spec_json(RamseyType rt, int n, const EdgeBounds& b) {
  return json{{"s", rt.s},
              {"t", rt.t},
              {"n", n},
              {"e_min", b.lo ? json(*b.lo) : json(nullptr)},
              {"e_max", b.hi ? json(*b.hi) : json(nullptr)}};
}

fs::path level_dir(const fs::path& root, int k) {
  return root / ("level-" + std::to_string(k));
}

fs::path journal_path(const fs::path& root, int k) {
  return root / ("level-" + std::to_string(k) + ".journal");
}

// Reads the journal of a level in progress: keys of every unit whose
// "#done" marker was written go into `cat`; the unit ids are returned.
// Keys after the last marker belong to an interrupted unit and are dropped.
std::set<std::size_t> replay_journal(const fs::path& path, Catalog& cat) {
  std::set<std::size_t> done;
  std::ifstream in(path);
  if (!in) return done;
  std::vector<std::string> pending;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("#done ", 0) == 0) {
      for (const auto& key : pending) cat.insert_canonical(key);
      pending.clear();
      done.insert(std::stoull(line.substr(6)));
    } else if (!line.empty()) {
      pending.push_back(line);
    }
  }
  return done;
}

void check_budget(const Catalog& cat, const CensusOptions& opts,
                  const std::string& where) {
  if (opts.max_catalog_bytes != 0 && cat.byte_size() > opts.max_catalog_bytes) {
    throw ResourceExhausted(
        "catalog for order " + std::to_string(cat.order()) + " exceeds " +
        std::to_string(opts.max_catalog_bytes) + " bytes" + where);
  }
}

// Extends every parent in `prev` to order prev.order()+1 within `bounds`.
Catalog extend_level(const Catalog& prev, const EdgeBounds& bounds,
                     const CensusOptions& opts) {
  const int k = prev.order() + 1;
  const RamseyType rt = prev.type();
  Catalog next(rt, k, bounds);
  const std::vector<std::string> parents = prev.sorted_keys();
  const std::size_t unit_size = std::max<std::size_t>(1, opts.unit_size);
  const std::size_t units = (parents.size() + unit_size - 1) / unit_size;

  std::set<std::size_t> done;
  std::ofstream journal;
  std::string where;
  if (opts.checkpoint_dir) {
    const fs::path path = journal_path(*opts.checkpoint_dir, k);
    done = replay_journal(path, next);
    journal.open(path, std::ios::app);
    if (!journal) throw std::runtime_error("cannot open " + path.string());
    where = "; finished units journaled in " + path.string();
  }

  std::vector<std::size_t> todo;
  for (std::size_t u = 0; u < units; ++u) {
    if (!done.contains(u)) todo.push_back(u);
  }
  const std::size_t batch =
      std::max<std::size_t>(1, static_cast<std::size_t>(opts.workers)) * 8;
  for (std::size_t first = 0; first < todo.size(); first += batch) {
    const std::size_t count = std::min(batch, todo.size() - first);
    std::vector<std::vector<std::string>> results(count);
    parallel_for(count, opts.workers, [&](std::size_t i) {
      const std::size_t u = todo[first + i];
      const std::size_t lo = u * unit_size;
      const std::size_t hi = std::min(parents.size(), lo + unit_size);
      std::vector<std::string> keys;
      for (std::size_t p = lo; p < hi; ++p) {
        auto children = children_of(graph6_decode(parents[p]), rt, bounds);
        keys.insert(keys.end(), children.begin(), children.end());
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      results[i] = std::move(keys);
    });
    for (std::size_t i = 0; i < count; ++i) {
      for (const auto& key : results[i]) {
        if (next.insert_canonical(key) && journal.is_open()) {
          journal << key << '\n';
        }
      }
      if (journal.is_open()) journal << "#done " << todo[first + i] << '\n';
    }
    if (journal.is_open()) journal.flush();
    check_budget(next, opts, where);
  }
  return next;
}

Catalog first_level(RamseyType rt, const EdgeBounds& bounds) {
  Catalog cat(rt, 1, bounds);
  if (bounds.contains(0)) cat.insert(Graph(1));
  return cat;
}

}  // namespace

void for_each_extension_set(const Graph& g, RamseyType rt, int min_size,
                            int max_size,
                            const std::function<void(VertexSet)>& visit) {
  if (g.order() >= kMaxVertices) {
    throw ValidationError("cannot extend a graph on 64 vertices");
  }
  ExtensionSearch(g, rt, std::max(0, min_size), max_size, visit).run();
}

std::vector<Graph> extensions(const Graph& g, RamseyType rt) {
  if (!is_ramsey(g, rt)) {
    throw ValidationError("extensions: input is not a Ramsey graph of type " +
                          rt.str());
  }
  std::vector<Graph> out;
  for (const auto& key : children_of(g, rt, {})) {
    out.push_back(graph6_decode(key));
  }
  return out;
}

std::vector<EdgeBounds> level_bounds(int n, const EdgeBounds& final) {
  std::vector<EdgeBounds> out(n + 1);
  out[n] = final;
  for (int k = n; k >= 2; --k) {
    EdgeBounds b;
    // Deleting a vertex of minimum degree keeps at least e - floor(2e/k)
    // edges; when only an upper bound is given, deleting one of maximum
    // degree keeps at most e - ceil(2e/k).
    if (out[k].lo) {
      const int lo = *out[k].lo;
      if (lo > 0) b.lo = lo - (2 * lo) / k;
      b.hi = out[k].hi;
    } else if (out[k].hi) {
      const int hi = *out[k].hi;
      b.hi = hi - (2 * hi + k - 1) / k;
    }
    if (b.lo && *b.lo <= 0) b.lo.reset();
    out[k - 1] = b;
  }
  return out;
}

Catalog census(const CensusSpec& spec, const CensusOptions& opts) {
  spec.validate();
  const RamseyType rt = spec.rt;
  const std::vector<EdgeBounds> bounds = level_bounds(spec.n, spec.bounds());

  int start = 1;
  std::optional<Catalog> level;
  if (opts.checkpoint_dir) {
    const fs::path root = *opts.checkpoint_dir;
    fs::create_directories(root);
    const json want = spec_json(rt, spec.n, spec.bounds());
    const fs::path spec_path = root / "census.json";
    if (fs::exists(spec_path)) {
      std::ifstream in(spec_path);
      json have;
      try {
        have = json::parse(in);
      } catch (const json::exception&) {
        throw ValidationError("unreadable checkpoint " + spec_path.string());
      }
      if (have != want) {
        throw ValidationError("checkpoint in " + root.string() +
                              " belongs to a different census");
      }
    } else {
      std::ofstream(spec_path) << want.dump() << '\n';
    }
    for (int k = spec.n; k >= 1; --k) {
      if (fs::exists(level_dir(root, k) / "meta.json")) {
        level = load_catalog(level_dir(root, k), /*verify=*/false);
        start = k;
        emit(opts.progress, {{"event", "resume"}, {"n", k}});
        break;
      }
    }
  }
  if (!level) level = first_level(rt, bounds[1]);

  auto finish_level = [&](const Catalog& cat) {
    emit(opts.progress, {{"event", "level"},
                         {"n", cat.order()},
                         {"graphs", cat.size()},
                         {"bytes", cat.byte_size()}});
    if (opts.checkpoint_dir) {
      save_catalog(cat, level_dir(*opts.checkpoint_dir, cat.order()));
      fs::remove(journal_path(*opts.checkpoint_dir, cat.order()));
    }
  };
  if (start == 1) finish_level(*level);
  for (int k = start + 1; k <= spec.n; ++k) {
    Catalog next = extend_level(*level, bounds[k], opts);
    finish_level(next);
    level = std::move(next);
  }
  level->provenance.generator = "census/extension";
  level->provenance.params = {{"s", std::to_string(rt.s)},
                              {"t", std::to_string(rt.t)},
                              {"n", std::to_string(spec.n)},
                              {"unit_size", std::to_string(opts.unit_size)}};
  if (spec.e_min) level->provenance.params["e_min"] = std::to_string(*spec.e_min);
  if (spec.e_max) level->provenance.params["e_max"] = std::to_string(*spec.e_max);
  return std::move(*level);
}

std::vector<Catalog> census_levels(RamseyType rt, int max_n,
                                   const CensusOptions& opts,
                                   bool stop_at_empty) {
  if (max_n < 1 || max_n > kMaxVertices) {
    throw ValidationError("census order must be in [1, 64]");
  }
  std::vector<Catalog> out;
  out.push_back(first_level(rt, {}));
  emit(opts.progress, {{"event", "level"}, {"n", 1}, {"graphs", 1}});
  CensusOptions level_opts = opts;
  level_opts.checkpoint_dir.reset();
  while (out.back().order() < max_n) {
    if (stop_at_empty && out.back().empty()) break;
    out.push_back(extend_level(out.back(), {}, level_opts));
    emit(opts.progress, {{"event", "level"},
                         {"n", out.back().order()},
                         {"graphs", out.back().size()},
                         {"bytes", out.back().byte_size()}});
  }
  for (auto& cat : out) {
    cat.provenance.generator = "census/extension";
    cat.provenance.params = {{"s", std::to_string(rt.s)},
                             {"t", std::to_string(rt.t)},
                             {"n", std::to_string(cat.order())}};
  }
  return out;
}

std::vector<Graph> ramsey_class(int s, int t, int m, const CensusOptions& opts) {
  if (s < 1 || t < 1 || m < 0) {
    throw ValidationError("ramsey_class needs s, t >= 1 and m >= 0");
  }
  if (m == 0) return {Graph(0)};
  if (s == 1 || t == 1) return {};
  return census({RamseyType(s, t), m, {}, {}}, opts).graphs();
}

std::vector<int> cone_vertex_order(const Graph& h, int p,
                                   std::optional<int> degree_cap) {
  const int q = h.order();
  std::vector<int> cap(q);
  for (int v = 0; v < q; ++v) {
    cap[v] = degree_cap ? std::clamp(*degree_cap - h.degree(v), 0, p) : p;
  }
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < q) {
    int best = -1;
    for (int v = 0; v < q; ++v) {
      if (placed & bit(v)) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      const int into_v = popcount(h.row(v) & placed);
      const int into_b = popcount(h.row(best) & placed);
      if (cap[v] > cap[best] || (cap[v] == cap[best] && into_v > into_b)) {
        best = v;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

namespace {

struct ConeState {
  Graph f;
  int attached = 0;  // edges from placed H-vertices into G
};

class ConeSearch {
 public:
  ConeSearch(const Graph& g, const Graph& h, RamseyType rt, int e_min,
             const ConeGlueOptions& opts)
      : g_(g), h_(h), rt_(rt), e_min_(e_min), opts_(opts) {
    p_ = g.order();
    q_ = h.order();
    apex_ = p_;
    std::optional<int> degree_cap;
    int degree_floor = 0;
    if (opts.use_degree_bounds) {
      const RamseyTable table = RamseyTable::known();
      if (auto r = table.get(rt.s - 1, rt.t)) degree_cap = *r - 1;
      if (auto r = table.get(rt.s, rt.t - 1)) {
        degree_floor = p_ + q_ + 1 - *r;
      }
    }
    order_ = cone_vertex_order(h, p_, degree_cap);
    lo_.resize(q_);
    hi_.resize(q_);
    for (int j = 0; j < q_; ++j) {
      const int d = h.degree(order_[j]);
      hi_[j] = degree_cap ? std::clamp(*degree_cap - d, 0, p_) : p_;
      lo_[j] = std::clamp(degree_floor - d, 0, p_ + 1);
    }
    suffix_hi_.assign(q_ + 1, 0);
    for (int j = q_ - 1; j >= 0; --j) suffix_hi_[j] = suffix_hi_[j + 1] + hi_[j];
  }

  Catalog run() {
    const int n = p_ + q_ + 1;
    Catalog out(rt_, n, EdgeBounds{e_min_ > 0 ? std::optional(e_min_) : std::nullopt, {}});
    out.provenance.generator = "census/cone";
    base_edges_ = g_.edge_count() + p_ + h_.edge_count();
    ConeState root{g_.with_vertex(g_.vertices()), 0};
    std::vector<ConeState> states{root};
    for (int j = 0; j < q_ && !states.empty(); ++j) {
      std::vector<ConeState> next;
      for (const auto& state : states) attach(state, j, next);
      if (j + 1 >= opts_.dedup_prefix && j + 1 < q_) next = dedup(next);
      states = std::move(next);
    }
    for (const auto& state : states) {
      if (base_edges_ + state.attached < e_min_) continue;
      R55_CHECK(is_ramsey(state.f, rt_), "cone_glue produced a non-Ramsey graph");
      out.insert(state.f);
    }
    return out;
  }

 private:
  // Adds H-vertex order_[j] as vertex p+1+j in every admissible way.
  void attach(const ConeState& state, int j, std::vector<ConeState>& out) {
    const int h = order_[j];
    VertexSet h_in = 0;
    VertexSet h_out = 0;
    for (int i = 0; i < j; ++i) {
      (h_.adjacent(order_[i], h) ? h_in : h_out) |= bit(p_ + 1 + i);
    }
    const Graph& f = state.f;
    if (has_clique_in(f, h_in, rt_.s - 1)) return;
    if (has_independent_set_in(f, h_out | bit(apex_), rt_.t - 1)) return;
    const int need =
        e_min_ - base_edges_ - state.attached - suffix_hi_[j + 1];
    const int lo = std::max(lo_[j], need);
    const int hi = hi_[j];
    if (lo > hi) return;
    pick(f, state.attached, 0, h_in, h_out | bit(apex_), 0, lo, hi, out);
  }

  void pick(const Graph& f, int attached, int v, VertexSet in_set,
            VertexSet out_set, int size, int lo, int hi,
            std::vector<ConeState>& out) {
    if (size + (p_ - v) < lo) return;
    if (v == p_) {
      out.push_back({f.with_vertex(in_set), attached + size});
      return;
    }
    if (size < hi && !has_clique_in(f, in_set & f.row(v), rt_.s - 2)) {
      pick(f, attached, v + 1, in_set | bit(v), out_set, size + 1, lo, hi, out);
    }
    if (!has_independent_set_in(f, out_set & f.co_row(v), rt_.t - 2)) {
      pick(f, attached, v + 1, in_set, out_set | bit(v), size, lo, hi, out);
    }
  }

  std::vector<ConeState> dedup(std::vector<ConeState>& states) const {
    std::vector<ConeState> kept;
    std::unordered_map<std::string, int> seen;
    for (auto& state : states) {
      const int n = state.f.order();
      std::vector<int> colours(n);
      for (int v = 0; v < n; ++v) {
        colours[v] = v < p_ ? 0 : v - p_ + 1;
      }
      auto key = canonical_form(state.f, colours).key;
      if (seen.emplace(std::move(key), 1).second) kept.push_back(std::move(state));
    }
    return kept;
  }

  const Graph& g_;
  const Graph& h_;
  RamseyType rt_;
  int e_min_;
  ConeGlueOptions opts_;
  int p_ = 0;
  int q_ = 0;
  int apex_ = 0;
  int base_edges_ = 0;
  std::vector<int> order_;
  std::vector<int> lo_;
  std::vector<int> hi_;
  std::vector<int> suffix_hi_;
};

}  // namespace

Catalog cone_glue(const Graph& g, const Graph& h, RamseyType rt, int e_min,
                  const ConeGlueOptions& opts) {
  const int n = g.order() + h.order() + 1;
  if (n > kMaxVertices) throw ValidationError("cone_glue: result exceeds 64 vertices");
  auto in_class = [](const Graph& x, int s, int t) {
    if (s == 1 || t == 1) return x.order() == 0;
    return is_ramsey(x, RamseyType(s, t));
  };
  if (!in_class(g, rt.s - 1, rt.t)) {
    throw ValidationError("cone_glue: G is not in R(" + std::to_string(rt.s - 1) +
                          "," + std::to_string(rt.t) + ")");
  }
  if (!in_class(h, rt.s, rt.t - 1)) {
    throw ValidationError("cone_glue: H is not in R(" + std::to_string(rt.s) +
                          "," + std::to_string(rt.t - 1) + ")");
  }
  return ConeSearch(g, h, rt, e_min, opts).run();
}

Catalog cone_census(const CensusSpec& spec, const CensusOptions& opts) {
  spec.validate();
  const RamseyType rt = spec.rt;
  const int n = spec.n;
  CensusOptions sub = opts;
  sub.checkpoint_dir.reset();
  sub.progress = nullptr;

  // Classes of both sides for every order up to n-1.
  auto side = [&](int s, int t) {
    std::vector<std::vector<Graph>> out(n);
    out[0] = {Graph(0)};
    if (s == 1 || t == 1 || n == 1) return out;
    auto levels = census_levels(RamseyType(s, t), n - 1, sub, true);
    for (const auto& cat : levels) out[cat.order()] = cat.graphs();
    return out;
  };
  const auto left = side(rt.s - 1, rt.t);
  const auto right = side(rt.s, rt.t - 1);

  struct Task {
    const Graph* g;
    const Graph* h;
  };
  std::vector<Task> tasks;
  for (int p = 0; p < n; ++p) {
    for (const auto& g : left[p]) {
      for (const auto& h : right[n - 1 - p]) tasks.push_back({&g, &h});
    }
  }
  std::vector<std::vector<std::string>> results(tasks.size());
  const int e_min = spec.e_min.value_or(0);
  parallel_for(tasks.size(), opts.workers, [&](std::size_t i) {
    const Catalog part = cone_glue(*tasks[i].g, *tasks[i].h, rt, e_min);
    for (const auto& key : part.sorted_keys()) results[i].push_back(key);
  });
  Catalog out(rt, n, spec.bounds());
  for (const auto& keys : results) {
    for (const auto& key : keys) {
      const Graph f = graph6_decode(key);
      if (spec.bounds().contains(f.edge_count())) out.insert_canonical(key);
    }
    check_budget(out, opts, "");
  }
  out.provenance.generator = "census/cone";
  out.provenance.params = {{"s", std::to_string(rt.s)},
                           {"t", std::to_string(rt.t)},
                           {"n", std::to_string(n)},
                           {"vertex_order", "cap desc, prefix edges desc, index asc"}};
  emit(opts.progress, {{"event", "cone"}, {"n", n}, {"graphs", out.size()},
                       {"tasks", tasks.size()}});
  return out;
}

}  // namespace r55
