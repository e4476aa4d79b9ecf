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

// Reference implementations used as oracles. They work on plain adjacency
// matrices and enumerate subsets directly, sharing no code with the library.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "r55/graph.hpp"

namespace r55::testing {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const Graph& g) {
  const int n = g.order();
  Matrix m(n, std::vector<bool>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) m[u][v] = u != v && g.adjacent(u, v);
  }
  return m;
}

// Calls f on every k-subset of {0..n-1} until it returns true.
template <class F>
bool any_subset(int n, int k, F&& f) {
  if (k > n) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline bool naive_uniform_subset(const Matrix& m, int k, bool edges) {
  const int n = static_cast<int>(m.size());
  if (k <= 0) return true;
  return any_subset(n, k, [&](const std::vector<int>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (m[s[i]][s[j]] != edges) return false;
      }
    }
    return true;
  });
}

inline bool naive_clique(const Graph& g, int k) {
  return naive_uniform_subset(to_matrix(g), k, true);
}

inline bool naive_ramsey(const Graph& g, int s, int t) {
  const Matrix m = to_matrix(g);
  return !naive_uniform_subset(m, s, true) && !naive_uniform_subset(m, t, false);
}

inline int naive_edges(const Matrix& m) {
  int e = 0;
  for (std::size_t u = 0; u < m.size(); ++u) {
    for (std::size_t v = u + 1; v < m.size(); ++v) e += m[u][v];
  }
  return e;
}

// Lexicographically least adjacency string over all n! relabelings; only
// for tiny graphs.
inline std::string brute_canonical(const Graph& g) {
  const int n = g.order();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) s += g.adjacent(p[u], p[v]) ? '1' : '0';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(p.begin(), p.end()));
  return best + "/" + std::to_string(n);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Every labeled graph on n vertices, by edge mask over the pairs in
// lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bitpos = 0;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v, ++bitpos) {
      if ((mask >> bitpos) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

// Random graph with neither an s-clique nor an independent t-set, built by
// adding random admissible edges to an empty graph and then checking.
inline Graph random_ramsey(std::mt19937_64& rng, int n, int s, int t, int tries = 200) {
  for (int attempt = 0; attempt < tries; ++attempt) {
    Graph g(n);
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::shuffle(pairs.begin(), pairs.end(), rng);
    for (auto [u, v] : pairs) {
      g.add_edge(u, v);
      if (has_clique_in(g, g.vertices(), s)) g.remove_edge(u, v);
    }
    if (is_ramsey(g, RamseyType(s, t))) return g;
  }
  return Graph();
}

// Fresh directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("r55-test-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace r55::testing
