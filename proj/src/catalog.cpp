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

#include "r55/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <regex>

#include "json.hpp"
#include "r55/canon.hpp"
#include "r55/errors.hpp"
#include "r55/graph6.hpp"

namespace r55 {

namespace fs = std::filesystem;
using nlohmann::json;

Catalog::Catalog(RamseyType rt, int n, EdgeBounds bounds)
    : rt_(rt), n_(n), bounds_(bounds) {
  if (n < 0 || n > kMaxVertices) {
    throw ValidationError("catalog order out of range");
  }
  if (bounds.lo && bounds.hi && *bounds.lo > *bounds.hi) {
    throw ValidationError("catalog edge bounds are empty");
  }
}

void Catalog::add_new(const std::string& key, int edges) {
  members_.insert(key);
  ++histogram_[edges];
  bytes_ += key.size();
}

bool Catalog::insert(const Graph& g) {
  if (g.order() != n_) {
    throw ValidationError("insert: graph order " + std::to_string(g.order()) +
                          " does not match catalog order " +
                          std::to_string(n_));
  }
  if (!is_ramsey(g, rt_)) {
    throw ValidationError("insert: graph is not a Ramsey graph of type " +
                          rt_.str());
  }
  const int e = g.edge_count();
  if (!bounds_.contains(e)) {
    throw ValidationError("insert: edge count " + std::to_string(e) +
                          " outside catalog bounds");
  }
  std::string key = canonical_key(g);
  if (members_.contains(key)) return false;
  add_new(key, e);
  return true;
}

bool Catalog::insert_canonical(const std::string& key) {
  if (members_.contains(key)) return false;
  const Graph g = graph6_decode(key);
  R55_CHECK(g.order() == n_, "catalog member has wrong order");
  R55_CHECK(is_ramsey(g, rt_), "catalog member is not a Ramsey graph");
  const int e = g.edge_count();
  R55_CHECK(bounds_.contains(e), "catalog member violates edge bounds");
  add_new(key, e);
  return true;
}

bool Catalog::contains(const Graph& g) const {
  return g.order() == n_ && members_.contains(canonical_key(g));
}

std::optional<int> Catalog::min_edges() const {
  if (histogram_.empty()) return std::nullopt;
  return histogram_.begin()->first;
}

std::optional<int> Catalog::max_edges() const {
  if (histogram_.empty()) return std::nullopt;
  return histogram_.rbegin()->first;
}

std::size_t Catalog::count_with_edges(int e) const {
  const auto it = histogram_.find(e);
  return it == histogram_.end() ? 0 : it->second;
}

std::vector<std::string> Catalog::sorted_keys() const {
  std::vector<std::string> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Graph> Catalog::graphs() const {
  std::vector<Graph> out;
  out.reserve(members_.size());
  for (const auto& key : sorted_keys()) out.push_back(graph6_decode(key));
  return out;
}

void Catalog::merge_from(const Catalog& other) {
  if (!(other.rt_ == rt_) || other.n_ != n_ || !(other.bounds_ == bounds_)) {
    throw ValidationError("merge: catalogs differ in type, order or bounds");
  }
  for (const auto& key : other.members_) {
    if (members_.contains(key)) continue;
    add_new(key, graph6_decode(key).edge_count());
  }
}

Catalog merge(const Catalog& a, const Catalog& b) {
  Catalog out = a;
  out.merge_from(b);
  return out;
}

std::string Catalog::directory_name() const {
  std::string name = "r" + std::to_string(rt_.s) + "-" + std::to_string(rt_.t) +
                     "-n" + std::to_string(n_);
  if (bounds_.lo || bounds_.hi) {
    name += "-e" + std::to_string(bounds_.lo.value_or(0)) + "-" +
            std::to_string(bounds_.hi.value_or(n_ * (n_ - 1) / 2));
  }
  return name;
}

void Catalog::verify() const {
  std::map<int, std::size_t> tally;
  for (const auto& key : members_) {
    const Graph g = graph6_decode(key);
    R55_CHECK(g.order() == n_, "member has wrong order: " + key);
    R55_CHECK(canonical_key(g) == key, "member is not canonical: " + key);
    R55_CHECK(is_ramsey(g, rt_), "member is not a Ramsey graph: " + key);
    const int e = g.edge_count();
    R55_CHECK(bounds_.contains(e), "member violates edge bounds: " + key);
    ++tally[e];
  }
  R55_CHECK(tally == histogram_, "edge histogram does not match members");
}

std::optional<CatalogName> parse_directory_name(const std::string& name) {
  static const std::regex re(R"(r(\d+)-(\d+)-n(\d+)(?:-e(\d+)-(\d+))?)");
  std::smatch m;
  if (!std::regex_match(name, m, re)) return std::nullopt;
  CatalogName out{RamseyType(std::stoi(m[1]), std::stoi(m[2])),
                  std::stoi(m[3]),
                  {}};
  if (m[4].matched) {
    out.bounds.lo = std::stoi(m[4]);
    out.bounds.hi = std::stoi(m[5]);
  }
  return out;
}

void save_catalog(const Catalog& cat, const fs::path& dir) {
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".g6") fs::remove(entry.path());
  }
  std::map<int, std::vector<std::string>> shards;
  for (const auto& key : cat.sorted_keys()) {
    shards[graph6_decode(key).edge_count()].push_back(key);
  }
  json meta;
  meta["format"] = "r55-catalog";
  meta["version"] = 1;
  meta["type"] = {cat.type().s, cat.type().t};
  meta["order"] = cat.order();
  meta["edge_bounds"] = {cat.bounds().lo ? json(*cat.bounds().lo) : json(nullptr),
                         cat.bounds().hi ? json(*cat.bounds().hi) : json(nullptr)};
  meta["total"] = cat.size();
  json counts = json::array();
  json files = json::array();
  for (const auto& [e, keys] : shards) {
    const std::string file = "e" + std::to_string(e) + ".g6";
    std::ofstream out(dir / file, std::ios::binary);
    for (const auto& key : keys) out << key << '\n';
    if (!out) throw std::runtime_error("failed writing " + (dir / file).string());
    counts.push_back({e, keys.size()});
    files.push_back(file);
  }
  meta["counts"] = counts;
  meta["shards"] = files;
  json prov;
  prov["generator"] = cat.provenance.generator;
  prov["params"] = cat.provenance.params;
  meta["provenance"] = prov;
  std::ofstream out(dir / "meta.json", std::ios::binary);
  out << meta.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed writing meta.json");
}

Catalog load_catalog(const fs::path& dir, bool verify) {
  std::ifstream in(dir / "meta.json");
  if (!in) throw ValidationError("no meta.json in " + dir.string());
  json meta;
  try {
    meta = json::parse(in);
  } catch (const json::exception& e) {
    throw ValidationError("malformed meta.json: " + std::string(e.what()));
  }
  if (meta.value("format", "") != "r55-catalog") {
    throw ValidationError("not an r55 catalog: " + dir.string());
  }
  EdgeBounds bounds;
  if (!meta["edge_bounds"][0].is_null()) bounds.lo = meta["edge_bounds"][0].get<int>();
  if (!meta["edge_bounds"][1].is_null()) bounds.hi = meta["edge_bounds"][1].get<int>();
  Catalog cat(RamseyType(meta["type"][0].get<int>(), meta["type"][1].get<int>()),
              meta["order"].get<int>(), bounds);
  cat.provenance.generator = meta["provenance"].value("generator", "");
  cat.provenance.params =
      meta["provenance"].value("params", std::map<std::string, std::string>{});
  for (const auto& file : meta["shards"]) {
    std::ifstream shard(dir / file.get<std::string>());
    if (!shard) throw ValidationError("missing shard " + file.get<std::string>());
    std::string line;
    while (std::getline(shard, line)) {
      if (line.empty()) continue;
      if (verify) {
        const Graph g = graph6_decode(line);
        if (canonical_key(g) != line) {
          throw ValidationError("catalog line is not canonical: " + line);
        }
        cat.insert(g);
      } else {
        cat.insert_canonical(line);
      }
    }
  }
  if (cat.size() != meta["total"].get<std::size_t>()) {
    throw ValidationError("catalog total does not match meta.json");
  }
  return cat;
}

}  // namespace r55
