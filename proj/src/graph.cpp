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

#include "r55/graph.hpp"

#include <algorithm>
#include <numeric>

#include "r55/errors.hpp"
#include "r55/kernels.hpp"

namespace r55 {

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw ValidationError("vertex " + std::to_string(v) +
                          " out of range for order " +
                          std::to_string(g.order()));
  }
}

// Upper bound on the clique number of the subgraph on `cand` from a greedy
// colouring; stops counting once `enough` colours are used.
template <class Rows>
int greedy_colour_bound(const Rows& rows, VertexSet cand, int enough) {
  int colours = 0;
  while (cand && colours < enough) {
    VertexSet avail = cand;
    while (avail) {
      const int v = std::countr_zero(avail);
      avail &= ~rows(v) & ~bit(v);
      cand &= ~bit(v);
    }
    ++colours;
  }
  return cand ? enough : colours;
}

// Exact k-clique search in the graph given by `rows`, restricted to `cand`.
template <class Rows>
bool clique_search(const Rows& rows, VertexSet cand, int k, int* out) {
  if (k <= 0) return true;
  if (popcount(cand) < k) return false;
  if (k == 1) {
    if (out) out[0] = std::countr_zero(cand);
    return true;
  }
  if (k == 2) {
    for (VertexSet c = cand; c;) {
      const int v = std::countr_zero(c);
      c &= c - 1;
      const VertexSet nb = rows(v) & c;
      if (nb) {
        if (out) {
          out[0] = v;
          out[1] = std::countr_zero(nb);
        }
        return true;
      }
    }
    return false;
  }
  if (greedy_colour_bound(rows, cand, k) < k) return false;
  while (popcount(cand) >= k) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (clique_search(rows, cand & rows(v), k - 1, out ? out + 1 : nullptr)) {
      if (out) out[0] = v;
      return true;
    }
  }
  return false;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw ValidationError("graph order must be in [0, 64], got " +
                          std::to_string(n));
  }
}

int Graph::edge_count() const {
  return static_cast<int>(kernels::induced_degree_sum(rows(), vertices()) / 2);
}

std::vector<int> Graph::degrees() const {
  std::vector<std::uint8_t> counts(n_);
  kernels::masked_popcounts(rows(), vertices(), counts);
  return {counts.begin(), counts.end()};
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw ValidationError("loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int v = 0; v < n_; ++v) c.adj_[v] = co_row(v);
  return c;
}

Graph Graph::induced(std::span<const int> verts) const {
  Graph h(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) check_vertex(*this, verts[i]);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (verts[i] == verts[j]) {
        throw ValidationError("induced: repeated vertex");
      }
      if (adjacent(verts[i], verts[j])) {
        h.adj_[i] |= bit(static_cast<int>(j));
        h.adj_[j] |= bit(static_cast<int>(i));
      }
    }
  }
  return h;
}

Graph Graph::induced(VertexSet s) const {
  std::vector<int> verts;
  for_each_vertex(s & vertices(), [&](int v) { verts.push_back(v); });
  return induced(verts);
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw ValidationError("permutation length does not match graph order");
  }
  Graph h(n_);
  for (int v = 0; v < n_; ++v) {
    VertexSet r = 0;
    for_each_vertex(adj_[v], [&](int u) { r |= bit(perm[u]); });
    h.adj_[perm[v]] = r;
  }
  return h;
}

Graph Graph::with_vertex(VertexSet neighbours) const {
  if (n_ >= kMaxVertices) throw ValidationError("graph order overflow");
  Graph h = *this;
  h.n_ = n_ + 1;
  neighbours &= vertices();
  h.adj_[n_] = neighbours;
  for_each_vertex(neighbours, [&](int u) { h.adj_[u] |= bit(n_); });
  return h;
}

void Graph::check_invariants() const {
  R55_CHECK(n_ >= 0 && n_ <= kMaxVertices, "order out of range");
  for (int v = 0; v < kMaxVertices; ++v) {
    if (v >= n_) {
      R55_CHECK(adj_[v] == 0, "row past order is nonzero");
      continue;
    }
    R55_CHECK((adj_[v] & ~vertices()) == 0, "bit past order is set");
    R55_CHECK(!adjacent(v, v), "loop");
    for_each_vertex(adj_[v],
                    [&](int u) { R55_CHECK(adjacent(u, v), "asymmetric row"); });
  }
}

Graph Graph::empty(int n) { return Graph(n); }

Graph Graph::complete(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.adj_[v] = g.vertices() & ~bit(v);
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n >= 3) {
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  } else if (n == 2) {
    g.add_edge(0, 1);
  }
  return g;
}

Graph Graph::path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph Graph::star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph Graph::paley(int q) {
  if (q < 5 || q > kMaxVertices || q % 4 != 1) {
    throw ValidationError("Paley graph needs q = 1 mod 4, 5 <= q <= 64");
  }
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) throw ValidationError("Paley graph needs prime q");
  }
  std::vector<bool> residue(q, false);
  for (int x = 1; x < q; ++x) residue[(x * x) % q] = true;
  Graph g(q);
  for (int u = 0; u < q; ++u) {
    for (int v = u + 1; v < q; ++v) {
      if (residue[(v - u) % q]) g.add_edge(u, v);
    }
  }
  return g;
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  for (int v = 0; v < g.n_; ++v) {
    if ((rows[v] & ~g.vertices()) || ((rows[v] >> v) & 1U)) {
      throw ValidationError("adjacency row has a loop or out-of-range bit");
    }
    g.adj_[v] = rows[v];
  }
  for (int v = 0; v < g.n_; ++v) {
    for_each_vertex(g.adj_[v], [&](int u) {
      if (!g.adjacent(u, v)) throw ValidationError("asymmetric adjacency rows");
    });
  }
  return g;
}

RamseyType::RamseyType(int s_, int t_) : s(s_), t(t_) {
  if (s < 2 || t < 2) {
    throw ValidationError("Ramsey type needs s >= 2 and t >= 2");
  }
}

std::string RamseyType::str() const {
  return "(" + std::to_string(s) + "," + std::to_string(t) + ")";
}

bool has_clique_in(const Graph& g, VertexSet candidates, int k) {
  if (k < 0) throw ValidationError("clique size must be non-negative");
  auto rows = [&g](int v) { return g.row(v); };
  return clique_search(rows, candidates & g.vertices(), k, nullptr);
}

bool has_independent_set_in(const Graph& g, VertexSet candidates, int k) {
  if (k < 0) throw ValidationError("set size must be non-negative");
  auto rows = [&g](int v) { return g.co_row(v); };
  return clique_search(rows, candidates & g.vertices(), k, nullptr);
}

bool has_clique(const Graph& g, int k) {
  return has_clique_in(g, g.vertices(), k);
}

std::vector<int> find_clique_in(const Graph& g, VertexSet candidates, int k) {
  if (k <= 0) return {};
  std::vector<int> out(k);
  auto rows = [&g](int v) { return g.row(v); };
  if (!clique_search(rows, candidates & g.vertices(), k, out.data())) return {};
  return out;
}

bool is_ramsey(const Graph& g, RamseyType rt) {
  return !has_clique_in(g, g.vertices(), rt.s) &&
         !has_independent_set_in(g, g.vertices(), rt.t);
}

VertexSplit vertex_split(const Graph& g, int v) {
  check_vertex(g, v);
  VertexSplit out;
  for_each_vertex(g.row(v), [&](int u) { out.plus_map.push_back(u); });
  for_each_vertex(g.co_row(v), [&](int u) { out.minus_map.push_back(u); });
  out.plus = g.induced(out.plus_map);
  out.minus = g.induced(out.minus_map);
  return out;
}

namespace {

struct InducedSearch {
  const Graph& g;
  const Graph& h;
  std::vector<int> order;  // h-vertices in placement order
  std::vector<int> image;  // h-vertex -> g-vertex
  std::vector<int> g_deg;
  std::vector<int> h_deg;

  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order.size()) return true;
    const int hv = order[depth];
    VertexSet cand = g.vertices() & ~used;
    for (std::size_t i = 0; i < depth; ++i) {
      const int hu = order[i];
      cand &= h.adjacent(hv, hu) ? g.row(image[hu]) : g.co_row(image[hu]);
    }
    const int need_in = h_deg[hv];
    const int need_out = h.order() - 1 - h_deg[hv];
    for (VertexSet c = cand; c; c &= c - 1) {
      const int gv = std::countr_zero(c);
      if (g_deg[gv] < need_in || g.order() - 1 - g_deg[gv] < need_out) continue;
      image[hv] = gv;
      if (extend(depth + 1, used | bit(gv))) return true;
    }
    return false;
  }
};

}  // namespace

std::vector<int> find_induced(const Graph& g, const Graph& h) {
  if (h.order() > g.order()) return {};
  InducedSearch search{g, h, {}, std::vector<int>(h.order(), -1), g.degrees(),
                       h.degrees()};
  // Place high-degree vertices first, then keep the placed set connected
  // where possible so adjacency constraints bite early.
  VertexSet placed = 0;
  for (int step = 0; step < h.order(); ++step) {
    int best = -1;
    int best_links = -1;
    for (int v = 0; v < h.order(); ++v) {
      if (placed & bit(v)) continue;
      const int links = popcount(h.row(v) & placed);
      if (links > best_links ||
          (links == best_links && search.h_deg[v] > search.h_deg[best])) {
        best = v;
        best_links = links;
      }
    }
    search.order.push_back(best);
    placed |= bit(best);
  }
  if (!search.extend(0, 0)) return {};
  return search.image;
}

bool contains_induced(const Graph& g, const Graph& h) {
  if (h.order() == 0) return true;
  return !find_induced(g, h).empty();
}

}  // namespace r55
