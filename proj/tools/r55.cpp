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

// Command-line front end. Every subcommand prints a human summary on stdout
// and, with --report, writes JSON lines starting with a provenance header.
//
// Exit status: 0 success, 1 I/O or other failure, 2 invalid input,
// 3 resource budget exhausted, 4 internal invariant violated.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "r55/analysis.hpp"
#include "r55/canon.hpp"
#include "r55/catalog.hpp"
#include "r55/census.hpp"
#include "r55/errors.hpp"
#include "r55/glue.hpp"
#include "r55/graph6.hpp"
#include "r55/sat.hpp"
#include "r55/version.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

enum ExitCode { kOk = 0, kFailure = 1, kInvalid = 2, kExhausted = 3, kInvariant = 4 };

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// JSON-lines sink; inactive without a path.
class Report {
 public:
  void open(const std::string& path) {
    if (path.empty()) return;
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) throw std::runtime_error("cannot write report " + path);
  }
  void header(const std::string& command, const json& config) {
    const std::string canonical = config.dump();
    write({{"tool", "r55"},
           {"version", r55::kVersion},
           {"command", command},
           {"config", config},
           {"config_hash", fnv1a_hex(command + canonical)}});
  }
  void write(const json& record) {
    if (out_.is_open()) out_ << record.dump() << '\n';
  }
  void close() {
    if (out_.is_open()) {
      out_.close();
      if (!out_) throw std::runtime_error("failed writing report");
    }
  }

 private:
  std::ofstream out_;
};

struct Common {
  int workers = 1;
  std::string report;
};

json bounds_json(std::optional<int> lo, std::optional<int> hi) {
  return {{"e_min", lo ? json(*lo) : json(nullptr)}, {"e_max", hi ? json(*hi) : json(nullptr)}};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

// ---------------------------------------------------------------- census

struct CensusArgs {
  int s = 0, t = 0, n = 0;
  std::optional<int> e_min, e_max;
  std::string out;
  std::string checkpoint;
  std::uint64_t max_bytes = 0;
  std::size_t unit_size = 256;
  std::string method = "extension";
};

int run_census(const CensusArgs& a, const Common& c, Report& report) {
  r55::CensusSpec spec{r55::RamseyType(a.s, a.t), a.n, a.e_min, a.e_max};
  spec.validate();
  json config = {{"s", a.s}, {"t", a.t}, {"n", a.n}, {"method", a.method},
                 {"unit_size", a.unit_size}, {"max_bytes", a.max_bytes}};
  config.update(bounds_json(a.e_min, a.e_max));
  report.header("census", config);
  r55::CensusOptions opts;
  opts.workers = c.workers;
  opts.unit_size = a.unit_size;
  opts.max_catalog_bytes = a.max_bytes;
  if (!a.checkpoint.empty()) opts.checkpoint_dir = a.checkpoint;
  opts.progress = [&](const std::string& line) { report.write(json::parse(line)); };
  r55::Catalog cat = a.method == "cone" ? r55::cone_census(spec, opts)
                                        : r55::census(spec, opts);
  json counts = json::array();
  for (const auto& [e, k] : cat.histogram()) counts.push_back({e, k});
  report.write({{"event", "result"}, {"total", cat.size()}, {"counts", counts}});
  std::cout << "R" << spec.rt.str() << " n=" << a.n << ": " << cat.size() << " graphs";
  if (cat.min_edges()) {
    std::cout << ", edges " << *cat.min_edges() << ".." << *cat.max_edges();
  }
  std::cout << '\n';
  if (!a.out.empty()) {
    const fs::path dir = fs::path(a.out) / cat.directory_name();
    r55::save_catalog(cat, dir);
    std::cout << "wrote " << dir.string() << '\n';
  }
  return kOk;
}

// ----------------------------------------------------------------- table

int run_table(int s, int t, int min_n, int max_n, const Common& c, Report& report) {
  if (min_n < 1 || max_n < min_n) throw r55::ValidationError("need 1 <= min-n <= max-n");
  report.header("table", {{"s", s}, {"t", t}, {"min_n", min_n}, {"max_n", max_n}});
  r55::CensusOptions opts;
  opts.workers = c.workers;
  const auto levels = r55::census_levels(r55::RamseyType(s, t), max_n, opts, true);
  std::printf("%4s %6s %6s %10s %10s %10s %10s %12s\n", "n", "e_min", "e_max",
              "N(emin)", "N(emin+1)", "N(emax-1)", "N(emax)", "total");
  for (const auto& cat : levels) {
    const int n = cat.order();
    if (n < min_n) continue;
    if (cat.empty()) {
      report.write({{"n", n}, {"total", 0}});
      std::printf("%4d %6s %6s %10s %10s %10s %10s %12d\n", n, "-", "-", "-", "-", "-",
                  "-", 0);
      continue;
    }
    const int lo = *cat.min_edges();
    const int hi = *cat.max_edges();
    const std::size_t c0 = cat.count_with_edges(lo);
    const std::size_t c1 = cat.count_with_edges(lo + 1);
    const std::size_t c2 = cat.count_with_edges(hi - 1);
    const std::size_t c3 = cat.count_with_edges(hi);
    report.write({{"n", n}, {"e_min", lo}, {"e_max", hi}, {"n_emin", c0},
                  {"n_emin_plus_1", c1}, {"n_emax_minus_1", c2}, {"n_emax", c3},
                  {"total", cat.size()}});
    std::printf("%4d %6d %6d %10zu %10zu %10zu %10zu %12zu\n", n, lo, hi, c0, c1, c2,
                c3, cat.size());
  }
  return kOk;
}

// ---------------------------------------------------------- excess-check

int run_excess(const std::vector<std::string>& catalogs, int random_count, int max_order,
               std::uint64_t seed, Report& report) {
  report.header("excess-check", {{"catalogs", catalogs}, {"random", random_count},
                                 {"max_order", max_order}, {"seed", seed}});
  std::size_t checked = 0;
  std::size_t nonzero = 0;
  auto check = [&](const r55::Graph& g, const std::string& source) {
    ++checked;
    const auto r = r55::excess(g);
    if (r.total2 != 0) {
      ++nonzero;
      report.write({{"event", "nonzero"}, {"source", source},
                    {"graph", r55::graph6_encode(g)}, {"total2", r.total2}});
    }
  };
  for (const auto& dir : catalogs) {
    const r55::Catalog cat = r55::load_catalog(dir, /*verify=*/false);
    for (const auto& key : cat.sorted_keys()) check(r55::graph6_decode(key), dir);
  }
  if (random_count > 0) {
    if (max_order < 1 || max_order > r55::kMaxVertices) {
      throw r55::ValidationError("max-order must be in [1, 64]");
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < random_count; ++i) {
      const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order));
      std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0, 1)(rng));
      r55::Graph g(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng)) g.add_edge(u, v);
        }
      }
      check(g, "random");
    }
  }
  report.write({{"event", "summary"}, {"checked", checked}, {"nonzero", nonzero}});
  if (nonzero == 0) {
    std::cout << "all zero (" << checked << " graphs)\n";
    return kOk;
  }
  std::cout << nonzero << " of " << checked << " graphs have nonzero excess\n";
  return kInvariant;
}

// --------------------------------------------------------- ramsey-number

int run_ramsey_number(int s, int t, int max_n, const Common& c, Report& report) {
  report.header("ramsey-number", {{"s", s}, {"t", t}, {"max_n", max_n}});
  r55::CensusOptions opts;
  opts.workers = c.workers;
  opts.progress = [&](const std::string& line) { report.write(json::parse(line)); };
  const auto levels = r55::census_levels(r55::RamseyType(s, t), max_n, opts, true);
  if (!levels.back().empty()) {
    report.write({{"event", "result"}, {"lower_bound", max_n + 1}});
    std::cout << "R(" << s << "," << t << ") > " << max_n << " (no empty level up to "
              << max_n << ")\n";
    return kOk;
  }
  const int r = levels.back().order();
  const auto& witnesses = levels[levels.size() - 2];
  const auto keys = witnesses.sorted_keys();
  report.write({{"event", "result"}, {"ramsey_number", r},
                {"witnesses", witnesses.size()}, {"witness", keys.front()}});
  std::cout << "R(" << s << "," << t << ") = " << r << "; " << witnesses.size()
            << " witness graph(s) on " << r - 1 << " vertices, e.g. " << keys.front()
            << '\n';
  return kOk;
}

// ---------------------------------------------------------------- filter

int run_filter(const std::string& catalog, const std::vector<std::string>& where,
               const std::string& out, const Common& c, Report& report) {
  report.header("filter", {{"catalog", catalog}, {"where", where}});
  const r55::Catalog cat = r55::load_catalog(catalog, /*verify=*/false);
  const r55::Catalog kept = r55::catalog_filter(cat, where, c.workers);
  report.write({{"event", "result"}, {"input", cat.size()}, {"kept", kept.size()}});
  std::cout << kept.size() << " of " << cat.size() << " graphs match\n";
  if (!out.empty()) {
    r55::save_catalog(kept, out);
    std::cout << "wrote " << out << '\n';
  }
  return kOk;
}

// ------------------------------------------------------------ glue / dimacs

struct GlueArgs {
  int s = 0, t = 0;
  std::string left, right;
  int left_point = 0, right_point = 0;
  int target = 0;
  std::optional<int> final_n;
  std::vector<std::string> rules;
  std::string mode = "all";
  std::uint64_t max_decisions = 0;
  double max_seconds = 0;
  bool no_symmetry = false;
  std::string solutions_out;
};

json glue_config(const GlueArgs& a) {
  return {{"s", a.s}, {"t", a.t}, {"left", a.left}, {"left_point", a.left_point},
          {"right", a.right}, {"right_point", a.right_point}, {"target", a.target},
          {"final_n", a.final_n ? json(*a.final_n) : json(nullptr)}, {"rules", a.rules},
          {"mode", a.mode}, {"max_decisions", a.max_decisions},
          {"max_seconds", a.max_seconds}, {"symmetry_breaking", !a.no_symmetry}};
}

r55::SolveMode parse_mode(const std::string& m) {
  if (m == "all") return r55::SolveMode::kAll;
  if (m == "first") return r55::SolveMode::kFirst;
  if (m == "count") return r55::SolveMode::kCount;
  throw r55::ValidationError("mode must be all, first or count");
}

std::vector<r55::SeedRule> parse_rules(const std::vector<std::string>& specs) {
  std::vector<r55::SeedRule> rules;
  for (const auto& s : specs) rules.push_back(r55::SeedRule::parse(s));
  return rules;
}

std::vector<r55::GlueProblem> make_problems(const GlueArgs& a) {
  const r55::RamseyType rt(a.s, a.t);
  const auto pg1 = r55::make_pointed(r55::graph6_decode(a.left), a.left_point);
  const auto pg2 = r55::make_pointed(r55::graph6_decode(a.right), a.right_point);
  const auto rules = parse_rules(a.rules);
  std::vector<r55::GlueProblem> out;
  for (auto& p : r55::glue_problems(pg1, pg2, a.target, rt, a.final_n)) {
    out.push_back(r55::seed_c1(p, rules));
  }
  return out;
}

int run_glue(const GlueArgs& a, Report& report) {
  report.header("glue", glue_config(a));
  const auto problems = make_problems(a);
  r55::GlueSolveOptions opts;
  opts.mode = parse_mode(a.mode);
  opts.budget = {a.max_decisions, a.max_seconds};
  opts.symmetry_breaking = !a.no_symmetry;
  std::set<std::string> all;
  std::size_t undecided = 0;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const auto r = r55::solve_glue(problems[i], opts);
    if (r.status == r55::SolveStatus::kUndecided) ++undecided;
    all.insert(r.solutions.begin(), r.solutions.end());
    report.write({{"problem", i}, {"status", r55::status_name(r.status)},
                  {"free_pairs", problems[i].free_pairs().size()},
                  {"models", r.model_count}, {"solutions", r.solutions.size()},
                  {"decisions", r.stats.decisions}, {"notes", problems[i].notes}});
    std::cout << "problem " << i << ": " << r55::status_name(r.status) << ", "
              << r.model_count << " models, " << r.solutions.size()
              << " non-isomorphic solutions\n";
  }
  report.write({{"event", "summary"}, {"problems", problems.size()},
                {"solutions", all.size()}, {"undecided", undecided}});
  std::cout << problems.size() << " problem(s), " << all.size()
            << " distinct solution graph(s)";
  if (undecided) std::cout << ", " << undecided << " undecided";
  std::cout << '\n';
  if (!a.solutions_out.empty()) {
    std::string text;
    for (const auto& k : all) text += k + "\n";
    write_file(a.solutions_out, text);
  }
  return undecided ? kExhausted : kOk;
}

int run_export(const GlueArgs& a, std::size_t index, const std::string& out,
               const std::string& model, Report& report) {
  json config = glue_config(a);
  config["index"] = index;
  report.header("export-dimacs", config);
  const auto problems = make_problems(a);
  if (index >= problems.size()) {
    throw r55::ValidationError("problem index " + std::to_string(index) + " out of range (" +
                               std::to_string(problems.size()) + " problems)");
  }
  const auto& p = problems[index];
  const r55::Cnf cnf = r55::encode(p, {!a.no_symmetry});
  if (!model.empty()) {
    const auto assignment = r55::parse_model(read_file(model), cnf.var_count);
    const r55::Graph g = r55::from_model(cnf, assignment, p);
    const std::string g6 = r55::graph6_encode(g);
    report.write({{"event", "decoded"}, {"graph", g6}});
    std::cout << g6 << '\n';
    return kOk;
  }
  const std::string text = r55::to_dimacs(cnf);
  if (out.empty()) {
    std::cout << text;
  } else {
    write_file(out, text);
    std::cout << "wrote " << out << " (" << cnf.var_count << " variables, "
              << cnf.clauses.size() << " clauses)\n";
  }
  json decode = json::array();
  for (const auto& [u, v] : cnf.decode) decode.push_back({u, v});
  report.write({{"event", "cnf"}, {"variables", cnf.var_count},
                {"primary", cnf.primary_count}, {"clauses", cnf.clauses.size()},
                {"decode", decode}, {"symmetry", cnf.symmetry_scheme}});
  return kOk;
}

// -------------------------------------------------------------- campaign

std::vector<r55::Graph> schedule_graphs(const json& line, const std::string& side) {
  std::vector<r55::Graph> out;
  if (line.contains(side)) {
    for (const auto& g6 : line.at(side)) out.push_back(r55::graph6_decode(g6.get<std::string>()));
  }
  const std::string cat_key = side + "_catalog";
  if (line.contains(cat_key)) {
    for (const auto& g : r55::load_catalog(line.at(cat_key).get<std::string>(), false).graphs()) {
      out.push_back(g);
    }
  }
  return out;
}

struct CampaignArgs {
  int s = 0, t = 0;
  std::string schedule;
  int final_n = 0;
  int start_c1 = 0;
  std::vector<std::string> rules;
  std::uint64_t max_decisions = 0;
  double max_seconds = 0;
  bool no_symmetry = false;
  std::string solutions_out;
};

int run_campaign_cmd(const CampaignArgs& a, const Common& c, Report& report) {
  std::vector<r55::CampaignEntry> schedule;
  json entries = json::array();
  for (const auto& line : read_lines(a.schedule)) {
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw r55::ValidationError("schedule line is not JSON: " + line);
    }
    r55::CampaignEntry entry;
    entry.left = schedule_graphs(j, "left");
    entry.right = schedule_graphs(j, "right");
    entry.drop = j.value("drop", 1);
    schedule.push_back(std::move(entry));
    entries.push_back(j);
  }
  report.header("campaign", {{"s", a.s}, {"t", a.t}, {"final_n", a.final_n},
                             {"start_c1", a.start_c1}, {"rules", a.rules},
                             {"schedule", entries}, {"max_decisions", a.max_decisions},
                             {"max_seconds", a.max_seconds},
                             {"symmetry_breaking", !a.no_symmetry}});
  r55::CampaignConfig config;
  config.rt = r55::RamseyType(a.s, a.t);
  config.final_n = a.final_n;
  config.start_c1 = a.start_c1;
  config.rules = parse_rules(a.rules);
  config.solve.budget = {a.max_decisions, a.max_seconds};
  config.solve.symmetry_breaking = !a.no_symmetry;
  config.workers = c.workers;
  const auto r = r55::run_campaign(schedule, config);
  for (const auto& ph : r.phases) {
    report.write({{"phase", ph.phase}, {"tasks", ph.tasks}, {"sat", ph.sat},
                  {"unsat", ph.unsat}, {"undecided", ph.undecided}});
    std::cout << "phase " << ph.phase << ": " << ph.tasks << " tasks, " << ph.sat
              << " satisfiable, " << ph.unsat << " unsatisfiable, " << ph.undecided
              << " undecided\n";
  }
  report.write({{"event", "summary"}, {"solutions", r.solutions}, {"undecided", r.undecided},
                {"skipped", r.skipped}});
  std::cout << r.solutions.size() << " solution graph(s) on " << a.final_n << " vertices\n";
  for (const auto& id : r.undecided) std::cout << "undecided: " << id << '\n';
  if (!a.solutions_out.empty()) {
    std::string text;
    for (const auto& k : r.solutions) text += k + "\n";
    write_file(a.solutions_out, text);
  }
  return r.undecided.empty() ? kOk : kExhausted;
}

void add_glue_options(CLI::App* cmd, GlueArgs& a) {
  cmd->add_option("s", a.s, "clique size")->required();
  cmd->add_option("t", a.t, "independent set size")->required();
  cmd->add_option("--left", a.left, "graph6 of G, the neighbourhood of b")->required();
  cmd->add_option("--left-point", a.left_point, "vertex a of G")->required();
  cmd->add_option("--right", a.right, "graph6 of H, the neighbourhood of a")->required();
  cmd->add_option("--right-point", a.right_point, "vertex b of H")->required();
  cmd->add_option("--target", a.target, "order of the glued problem")->required();
  cmd->add_option("--final-n", a.final_n, "order rule preconditions refer to");
  cmd->add_option("--rule", a.rules,
                  "seed rule: degree_target, adjacent_to_w, edge_near_v, triangle, "
                  "gadget:<graph6>:<m>");
  cmd->add_flag("--no-symmetry", a.no_symmetry, "omit symmetry-breaking clauses");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey graph census, gluing and verification"};
  app.set_version_flag("--version", std::string(r55::kVersion));
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--workers", common.workers, "worker threads (1 is the reference)")
      ->default_val(1)
      ->check(CLI::Range(1, 1024));
  app.add_option("--report", common.report, "write JSON lines to this file");

  CensusArgs census;
  auto* census_cmd = app.add_subcommand("census", "build the catalog R(s,t,n)");
  census_cmd->add_option("s", census.s)->required();
  census_cmd->add_option("t", census.t)->required();
  census_cmd->add_option("n", census.n)->required();
  census_cmd->add_option("--e-min", census.e_min, "least edge count");
  census_cmd->add_option("--e-max", census.e_max, "largest edge count");
  census_cmd->add_option("--out", census.out, "directory receiving the catalog");
  census_cmd->add_option("--checkpoint", census.checkpoint, "checkpoint directory");
  census_cmd->add_option("--max-bytes", census.max_bytes, "catalog size budget")
      ->default_val(std::uint64_t{4} << 30);
  census_cmd->add_option("--unit-size", census.unit_size, "parents per work unit")
      ->default_val(256);
  census_cmd->add_option("--method", census.method)
      ->check(CLI::IsMember({"extension", "cone"}))
      ->default_val("extension");

  int table_s = 0, table_t = 0, table_min = 1, table_max = 0;
  auto* table_cmd = app.add_subcommand("table", "edge statistics of R(s,t,n) by n");
  table_cmd->add_option("s", table_s)->required();
  table_cmd->add_option("t", table_t)->required();
  table_cmd->add_option("--max-n", table_max)->required();
  table_cmd->add_option("--min-n", table_min)->default_val(1);

  std::vector<std::string> excess_catalogs;
  int excess_random = 0, excess_max_order = 40;
  std::uint64_t excess_seed = 1;
  auto* excess_cmd = app.add_subcommand("excess-check", "check the excess identity");
  excess_cmd->add_option("--catalog", excess_catalogs, "catalog directory");
  excess_cmd->add_option("--random", excess_random, "number of random graphs");
  excess_cmd->add_option("--max-order", excess_max_order)->default_val(40);
  excess_cmd->add_option("--seed", excess_seed)->default_val(1);

  int rn_s = 0, rn_t = 0, rn_max = 40;
  auto* rn_cmd = app.add_subcommand("ramsey-number", "least n with R(s,t,n) empty");
  rn_cmd->add_option("s", rn_s)->required();
  rn_cmd->add_option("t", rn_t)->required();
  rn_cmd->add_option("--max-n", rn_max)->default_val(40);

  std::string filter_catalog, filter_out;
  std::vector<std::string> filter_where;
  auto* filter_cmd = app.add_subcommand("filter", "select catalog members");
  filter_cmd->add_option("--catalog", filter_catalog)->required();
  filter_cmd->add_option("--where", filter_where, "predicate, repeatable")->required();
  filter_cmd->add_option("--out", filter_out, "directory for the filtered catalog");

  GlueArgs glue;
  auto* glue_cmd = app.add_subcommand("glue", "glue two pointed graphs along an edge");
  add_glue_options(glue_cmd, glue);
  glue_cmd->add_option("--mode", glue.mode)->check(CLI::IsMember({"all", "first", "count"}));
  glue_cmd->add_option("--max-decisions", glue.max_decisions);
  glue_cmd->add_option("--max-seconds", glue.max_seconds);
  glue_cmd->add_option("--solutions", glue.solutions_out, "graph6 file of solutions");

  GlueArgs exp;
  std::size_t exp_index = 0;
  std::string exp_out, exp_model;
  auto* exp_cmd = app.add_subcommand("export-dimacs", "write a gluing problem as DIMACS");
  add_glue_options(exp_cmd, exp);
  exp_cmd->add_option("--index", exp_index, "which of the problem's K-automorphism variants");
  exp_cmd->add_option("--out", exp_out, "CNF file (stdout if omitted)");
  exp_cmd->add_option("--model", exp_model, "decode this model file instead of exporting");

  CampaignArgs camp;
  auto* camp_cmd = app.add_subcommand("campaign", "run a gluing schedule in phases");
  camp_cmd->add_option("s", camp.s)->required();
  camp_cmd->add_option("t", camp.t)->required();
  camp_cmd->add_option("--schedule", camp.schedule, "JSON-lines schedule")->required();
  camp_cmd->add_option("--final-n", camp.final_n)->required();
  camp_cmd->add_option("--start-c1", camp.start_c1)->default_val(0);
  camp_cmd->add_option("--rule", camp.rules);
  camp_cmd->add_option("--max-decisions", camp.max_decisions);
  camp_cmd->add_option("--max-seconds", camp.max_seconds);
  camp_cmd->add_flag("--no-symmetry", camp.no_symmetry);
  camp_cmd->add_option("--solutions", camp.solutions_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  Report report;
  try {
    report.open(common.report);
    int code = kOk;
    if (*census_cmd) {
      code = run_census(census, common, report);
    } else if (*table_cmd) {
      code = run_table(table_s, table_t, table_min, table_max, common, report);
    } else if (*excess_cmd) {
      code = run_excess(excess_catalogs, excess_random, excess_max_order, excess_seed, report);
    } else if (*rn_cmd) {
      code = run_ramsey_number(rn_s, rn_t, rn_max, common, report);
    } else if (*filter_cmd) {
      code = run_filter(filter_catalog, filter_where, filter_out, common, report);
    } else if (*glue_cmd) {
      code = run_glue(glue, report);
    } else if (*exp_cmd) {
      code = run_export(exp, exp_index, exp_out, exp_model, report);
    } else if (*camp_cmd) {
      code = run_campaign_cmd(camp, common, report);
    }
    report.close();
    return code;
  } catch (const r55::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const r55::ResourceExhausted& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExhausted;
  } catch (const r55::InvariantViolation& e) {
    std::cerr << "invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
