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

#include "r55/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>
#include <unordered_set>

#include "r55/errors.hpp"
#include "r55/graph6.hpp"
#include "r55/kernels.hpp"

namespace r55 {

namespace {

using Row64 = std::array<VertexSet, kMaxVertices>;
using Perm64 = std::array<std::uint8_t, kMaxVertices>;

// Ordered partition of the vertex set. Cells are contiguous ranges of `lab`;
// `start[pos]` is the first position of the cell holding `pos` and
// `len[s]` is the size of the cell starting at s.
struct Partition {
  int n = 0;
  int cells = 0;
  Perm64 lab{};
  Perm64 start{};
  Perm64 len{};

  VertexSet cell_set(int s) const {
    VertexSet out = 0;
    for (int i = s; i < s + len[s]; ++i) out |= bit(lab[i]);
    return out;
  }

  int first_nonsingleton() const {
    for (int s = 0; s < n; s += len[s]) {
      if (len[s] > 1) return s;
    }
    return -1;
  }

  bool same_shape(const Partition& o) const {
    if (cells != o.cells) return false;
    for (int s = 0; s < n; s += len[s]) {
      if (o.start[s] != s || o.len[s] != len[s]) return false;
    }
    return true;
  }
};

Partition unit_partition(int n, std::span<const int> colours) {
  Partition p;
  p.n = n;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!colours.empty()) {
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return colours[a] < colours[b]; });
  }
  for (int i = 0; i < n; ++i) p.lab[i] = static_cast<std::uint8_t>(order[i]);
  int s = 0;
  while (s < n) {
    int e = s + 1;
    while (e < n && !colours.empty() &&
           colours[order[e]] == colours[order[s]]) {
      ++e;
    }
    if (colours.empty()) e = n;
    p.len[s] = static_cast<std::uint8_t>(e - s);
    for (int i = s; i < e; ++i) p.start[i] = static_cast<std::uint8_t>(s);
    ++p.cells;
    s = e;
  }
  return p;
}

// Splits the cell at s by neighbour counts into the splitter; fragments
// are ordered by increasing count. Newly created fragments join `pending`
// (all but the first largest, unless the cell itself was pending).
void split_cell(Partition& p, int s, const std::uint8_t* cnt,
                VertexSet& pending) {
  const int len = p.len[s];
  const std::uint8_t c0 = cnt[p.lab[s]];
  bool uniform = true;
  for (int i = s + 1; i < s + len; ++i) {
    if (cnt[p.lab[i]] != c0) {
      uniform = false;
      break;
    }
  }
  if (uniform) return;

  // Stable insertion sort of the cell by count.
  for (int i = s + 1; i < s + len; ++i) {
    const std::uint8_t v = p.lab[i];
    const std::uint8_t key = cnt[v];
    int j = i - 1;
    while (j >= s && cnt[p.lab[j]] > key) {
      p.lab[j + 1] = p.lab[j];
      --j;
    }
    p.lab[j + 1] = v;
  }

  const bool was_pending = (pending >> s) & 1U;
  int largest_start = -1;
  int largest_len = 0;
  int frag = s;
  int fragments = 0;
  for (int i = s; i <= s + len; ++i) {
    if (i == s + len || cnt[p.lab[i]] != cnt[p.lab[frag]]) {
      const int flen = i - frag;
      p.len[frag] = static_cast<std::uint8_t>(flen);
      for (int k = frag; k < i; ++k) p.start[k] = static_cast<std::uint8_t>(frag);
      pending |= bit(frag);
      if (flen > largest_len) {
        largest_len = flen;
        largest_start = frag;
      }
      ++fragments;
      frag = i;
    }
  }
  if (!was_pending) pending &= ~bit(largest_start);
  p.cells += fragments - 1;
}

void refine(const Graph& g, Partition& p, VertexSet pending) {
  std::array<std::uint8_t, kMaxVertices> cnt;
  const auto rows = g.rows();
  while (pending && p.cells < p.n) {
    const int w = std::countr_zero(pending);
    pending &= pending - 1;
    const VertexSet splitter = p.cell_set(w);
    kernels::masked_popcounts(rows, splitter, cnt);
    for (int s = 0; s < p.n;) {
      const int len = p.len[s];
      if (len > 1) split_cell(p, s, cnt.data(), pending);
      s += len;
    }
  }
}

// Moves v to the front of its cell as a singleton; returns its position.
int individualize(Partition& p, int v) {
  int pos = 0;
  while (p.lab[pos] != v) ++pos;
  const int s = p.start[pos];
  const int len = p.len[s];
  std::swap(p.lab[pos], p.lab[s]);
  p.len[s] = 1;
  p.len[s + 1] = static_cast<std::uint8_t>(len - 1);
  for (int i = s + 1; i < s + len; ++i) p.start[i] = static_cast<std::uint8_t>(s + 1);
  ++p.cells;
  return s;
}

void relabel_rows(const Graph& g, const Partition& p, Row64& out) {
  Perm64 inv;
  for (int i = 0; i < p.n; ++i) inv[p.lab[i]] = static_cast<std::uint8_t>(i);
  for (int i = 0; i < p.n; ++i) {
    VertexSet r = 0;
    for_each_vertex(g.row(p.lab[i]), [&](int u) { r |= bit(inv[u]); });
    out[i] = r;
  }
}

int compare_rows(const Row64& a, const Row64& b, int n) {
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

struct Leaf {
  Row64 rows{};
  Perm64 lab{};
  Perm64 path{};
  int depth = 0;
};

class CanonSearch {
 public:
  explicit CanonSearch(const Graph& g) : g_(g), n_(g.order()) {}

  void run(Partition root) {
    refine(g_, root, all_starts(root));
    node(root, 0);
  }

  const Leaf& best() const { return best_; }

 private:
  static VertexSet all_starts(const Partition& p) {
    VertexSet out = 0;
    for (int s = 0; s < p.n; s += p.len[s]) out |= bit(s);
    return out;
  }

  // Returns the level at which the search continues; a value below `level`
  // unwinds to that ancestor.
  int node(const Partition& p, int level) {
    if (p.cells == n_) return leaf(p, level);
    const int s = p.first_nonsingleton();
    const int len = p.len[s];
    std::array<std::uint8_t, kMaxVertices> children;
    std::copy_n(p.lab.begin() + s, len, children.begin());
    std::sort(children.begin(), children.begin() + len);

    std::array<std::uint8_t, kMaxVertices> explored;
    int n_explored = 0;
    Perm64 orbit;
    std::size_t orbit_autos = static_cast<std::size_t>(-1);

    for (int c = 0; c < len; ++c) {
      const int w = children[c];
      if (n_explored > 0 && !autos_.empty()) {
        if (orbit_autos != autos_.size()) {
          stabiliser_orbits(level, orbit);
          orbit_autos = autos_.size();
        }
        bool skip = false;
        for (int e = 0; e < n_explored && !skip; ++e) {
          skip = find(orbit, explored[e]) == find(orbit, w);
        }
        if (skip) continue;
      }
      explored[n_explored++] = static_cast<std::uint8_t>(w);
      Partition q = p;
      const int pos = individualize(q, w);
      refine(g_, q, bit(pos));
      path_[level] = static_cast<std::uint8_t>(w);
      const int r = node(q, level + 1);
      if (r < level) return r;
    }
    return level - 1;
  }

  int leaf(const Partition& p, int level) {
    relabel_rows(g_, p, scratch_.rows);
    scratch_.lab = p.lab;
    scratch_.path = path_;
    scratch_.depth = level;
    if (!have_first_) {
      first_ = scratch_;
      best_ = scratch_;
      have_first_ = true;
      return level - 1;
    }
    if (compare_rows(scratch_.rows, first_.rows, n_) == 0) {
      record_automorphism(first_.lab, p.lab);
      return common_prefix(first_, level);
    }
    const int c = compare_rows(scratch_.rows, best_.rows, n_);
    if (c == 0) {
      record_automorphism(best_.lab, p.lab);
      return common_prefix(best_, level);
    }
    if (c > 0) best_ = scratch_;
    return level - 1;
  }

  int common_prefix(const Leaf& ref, int level) const {
    int g = 0;
    const int limit = std::min(level, ref.depth);
    while (g < limit && path_[g] == ref.path[g]) ++g;
    return g;
  }

  void record_automorphism(const Perm64& from, const Perm64& to) {
    if (autos_.size() >= kMaxStoredAutos) return;
    Perm64 gamma{};
    for (int i = 0; i < n_; ++i) gamma[from[i]] = to[i];
    autos_.push_back(gamma);
  }

  // Union-find orbits of the stored automorphisms fixing path_[0..level).
  void stabiliser_orbits(int level, Perm64& parent) const {
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(v);
    for (const auto& gamma : autos_) {
      bool fixes = true;
      for (int i = 0; i < level && fixes; ++i) fixes = gamma[path_[i]] == path_[i];
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
  }

  static int find(Perm64& parent, int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  static constexpr std::size_t kMaxStoredAutos = 256;

  const Graph& g_;
  const int n_;
  bool have_first_ = false;
  Leaf first_;
  Leaf best_;
  Leaf scratch_;
  Perm64 path_{};
  std::vector<Perm64> autos_;
};

CanonicalForm run_canonical(const Graph& g, std::span<const int> colours) {
  CanonicalForm out;
  const int n = g.order();
  out.perm.resize(n);
  if (n == 0) {
    out.key = graph6_encode(g);
    return out;
  }
  CanonSearch search(g);
  search.run(unit_partition(n, colours));
  const Leaf& best = search.best();
  for (int i = 0; i < n; ++i) out.perm[best.lab[i]] = i;
  out.key = graph6_encode(
      Graph::from_rows(std::span<const VertexSet>(best.rows.data(), n)));
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return run_canonical(g, {}); }

CanonicalForm canonical_form(const Graph& g, std::span<const int> colours) {
  if (static_cast<int>(colours.size()) != g.order()) {
    throw ValidationError("colour vector length does not match graph order");
  }
  std::vector<int> sorted(colours.begin(), colours.end());
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() < 0) {
    throw ValidationError("colours must be non-negative");
  }
  CanonicalForm out = run_canonical(g, colours);
  out.key.push_back('#');
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    if (i > 0) out.key.push_back(',');
    out.key += std::to_string(sorted[i]) + ":" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string canonical_key(const Graph& g) { return run_canonical(g, {}).key; }

Graph canonical_graph(const Graph& g) {
  const CanonicalForm cf = canonical_form(g);
  return g.permuted(cf.perm);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_key(a) == canonical_key(b);
}

std::optional<std::vector<int>> find_isomorphism(const Graph& a,
                                                 const Graph& b) {
  if (a.order() != b.order()) return std::nullopt;
  const CanonicalForm ca = canonical_form(a);
  const CanonicalForm cb = canonical_form(b);
  if (ca.key != cb.key) return std::nullopt;
  std::vector<int> inv_b(b.order());
  for (int v = 0; v < b.order(); ++v) inv_b[cb.perm[v]] = v;
  std::vector<int> p(a.order());
  for (int v = 0; v < a.order(); ++v) p[v] = inv_b[ca.perm[v]];
  return p;
}

bool is_automorphism(const Graph& g, std::span<const int> p) {
  if (static_cast<int>(p.size()) != g.order()) return false;
  VertexSet seen = 0;
  for (int v : p) {
    if (v < 0 || v >= g.order() || (seen & bit(v))) return false;
    seen |= bit(v);
  }
  return g.permuted(p) == g;
}

// ---------------------------------------------------------------------------
// Automorphism group: for each level of the first path, test every sibling of
// the first-path child for a leaf matching the first leaf. Matches are coset
// representatives of the pointwise stabilisers, so together they generate the
// group and the orbit sizes multiply to its order.
// ---------------------------------------------------------------------------

namespace {

class AutSearch {
 public:
  explicit AutSearch(const Graph& g) : g_(g), n_(g.order()) {}

  AutomorphismSet run(std::size_t max_elements) {
    AutomorphismSet out;
    Partition p = unit_partition(n_, {});
    VertexSet all = 0;
    for (int s = 0; s < n_; s += p.len[s]) all |= bit(s);
    refine(g_, p, all);
    levels_.push_back(p);
    while (p.cells < n_) {
      const int s = p.first_nonsingleton();
      int v = p.lab[s];
      for (int i = s; i < s + p.len[s]; ++i) v = std::min<int>(v, p.lab[i]);
      path_.push_back(v);
      const int pos = individualize(p, v);
      refine(g_, p, bit(pos));
      levels_.push_back(p);
    }
    relabel_rows(g_, p, first_rows_);
    first_lab_ = p.lab;

    std::vector<Perm64> gens;
    std::uint64_t order = 1;
    for (int level = static_cast<int>(path_.size()) - 1; level >= 0; --level) {
      const Partition& node = levels_[level];
      const int s = node.first_nonsingleton();
      const int fixed = path_[level];
      Perm64 parent;
      orbits(gens, parent);
      std::vector<int> cell(node.lab.begin() + s,
                            node.lab.begin() + s + node.len[s]);
      std::sort(cell.begin(), cell.end());
      for (int w : cell) {
        if (w == fixed || find(parent, w) == find(parent, fixed)) continue;
        Partition q = node;
        const int pos = individualize(q, w);
        refine(g_, q, bit(pos));
        Perm64 lab;
        if (matches(q, level + 1, lab)) {
          Perm64 gamma{};
          for (int i = 0; i < n_; ++i) gamma[first_lab_[i]] = lab[i];
          gens.push_back(gamma);
          orbits(gens, parent);
        }
      }
      std::uint64_t orbit = 0;
      for (int w : cell) orbit += find(parent, w) == find(parent, fixed);
      order *= orbit;
    }

    out.group_order = order;
    std::vector<int> identity(n_);
    std::iota(identity.begin(), identity.end(), 0);
    auto to_vec = [&](const Perm64& p) {
      return std::vector<int>(p.begin(), p.begin() + n_);
    };
    if (order <= max_elements) {
      out.perms = closure(gens, identity, to_vec);
    } else {
      out.generators_only = true;
      out.perms.push_back(identity);
      for (const auto& gamma : gens) out.perms.push_back(to_vec(gamma));
    }
    return out;
  }

 private:
  // Depth-first search below q for a leaf equal to the first leaf.
  bool matches(const Partition& q, int level, Perm64& lab) {
    if (!q.same_shape(levels_[level])) return false;
    if (q.cells == n_) {
      Row64 rows;
      relabel_rows(g_, q, rows);
      if (compare_rows(rows, first_rows_, n_) != 0) return false;
      lab = q.lab;
      return true;
    }
    const int s = q.first_nonsingleton();
    for (int i = s; i < s + q.len[s]; ++i) {
      Partition r = q;
      const int pos = individualize(r, q.lab[i]);
      refine(g_, r, bit(pos));
      if (matches(r, level + 1, lab)) return true;
    }
    return false;
  }

  void orbits(const std::vector<Perm64>& gens, Perm64& parent) const {
    for (int v = 0; v < n_; ++v) parent[v] = static_cast<std::uint8_t>(v);
    for (const auto& gamma : gens) {
      for (int v = 0; v < n_; ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[v]);
        if (a != b) parent[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
      }
    }
  }

  static int find(Perm64& parent, int v) {
    while (parent[v] != v) v = parent[v];
    return v;
  }

  template <class ToVec>
  std::vector<std::vector<int>> closure(const std::vector<Perm64>& gens,
                                        const std::vector<int>& identity,
                                        ToVec to_vec) const {
    auto key_of = [&](const std::vector<int>& p) {
      return std::string(p.begin(), p.end());
    };
    std::vector<std::vector<int>> elements{identity};
    std::unordered_set<std::string> seen{key_of(identity)};
    for (std::size_t i = 0; i < elements.size(); ++i) {
      for (const auto& gamma : gens) {
        const std::vector<int> gv = to_vec(gamma);
        std::vector<int> next(n_);
        for (int v = 0; v < n_; ++v) next[v] = gv[elements[i][v]];
        if (seen.insert(key_of(next)).second) elements.push_back(std::move(next));
      }
    }
    std::sort(elements.begin(), elements.end());
    return elements;
  }

  const Graph& g_;
  const int n_;
  std::vector<Partition> levels_;
  std::vector<int> path_;
  Row64 first_rows_{};
  Perm64 first_lab_{};
};

}  // namespace

AutomorphismSet automorphisms(const Graph& k, std::size_t max_elements) {
  if (k.order() > kMaxAutomorphismOrder) {
    throw ValidationError("automorphisms: graph order " +
                          std::to_string(k.order()) + " exceeds " +
                          std::to_string(kMaxAutomorphismOrder));
  }
  if (k.order() == 0) {
    AutomorphismSet out;
    out.perms.push_back({});
    return out;
  }
  return AutSearch(k).run(max_elements);
}

}  // namespace r55
