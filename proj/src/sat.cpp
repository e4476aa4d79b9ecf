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

#include "r55/sat.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <sstream>

#include "r55/errors.hpp"
#include "r55/glue.hpp"

namespace r55 {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat:
      return "sat";
    case SolveStatus::kUnsat:
      return "unsat";
    case SolveStatus::kUndecided:
      return "undecided";
  }
  return "?";
}

namespace {

// A literal or a constant, used while building symmetry-breaking circuits.
struct Term {
  int lit = 0;  // nonzero: a literal; zero: the constant `value`
  bool value = false;

  static Term constant(bool b) { return {0, b}; }
  static Term literal(int l) { return {l, false}; }
  bool is_const() const { return lit == 0; }
  Term negated() const { return is_const() ? constant(!value) : literal(-lit); }
};

class Encoder {
 public:
  Encoder(const GlueProblem& p, Cnf& cnf) : p_(p), cnf_(cnf) {
    const int n = p.order();
    var_.assign(n, std::vector<int>(n, 0));
    for (const auto& [u, v] : p.free_pairs()) {
      cnf_.decode.emplace_back(u, v);
      const int x = static_cast<int>(cnf_.decode.size());
      var_[u][v] = var_[v][u] = x;
    }
    cnf_.primary_count = cnf_.var_count = static_cast<int>(cnf_.decode.size());
    for (const auto& [u, v] : p.priority) {
      if (u != v && var_[u][v] != 0) cnf_.priority.push_back(var_[u][v]);
    }
  }

  void ramsey_clauses() {
    std::vector<int> chosen;
    // s-subsets on which every pair may be an edge.
    subsets(p_.rt.s, p_.fixed.vertices(), chosen, /*clique=*/true);
    subsets(p_.rt.t, p_.fixed.vertices(), chosen, /*clique=*/false);
  }

  void symmetry_clauses() {
    const auto classes = interchangeable_classes();
    // Rows are compared only on columns outside every class: permuting one
    // class then never reorders the columns another class is sorted by.
    VertexSet inside = 0;
    for (const auto& cls : classes) {
      for (int v : cls) inside |= bit(v);
    }
    const VertexSet outside = p_.fixed.vertices() & ~inside;
    std::string scheme = "lex rows over columns outside all classes;";
    for (const auto& cls : classes) {
      scheme += " {";
      for (std::size_t i = 0; i < cls.size(); ++i) {
        scheme += (i ? "," : "") + std::to_string(cls[i]);
      }
      scheme += "}";
      for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
        lex_geq(cls[i], cls[i + 1], outside);
      }
    }
    cnf_.symmetry_scheme = classes.empty() ? "none" : scheme;
  }

  void finish() {
    for (auto& c : clauses_) std::sort(c.begin(), c.end());
    std::sort(clauses_.begin(), clauses_.end());
    clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
    cnf_.clauses.insert(cnf_.clauses.end(), clauses_.begin(), clauses_.end());
    cnf_.clauses.insert(cnf_.clauses.end(), aux_clauses_.begin(), aux_clauses_.end());
  }

 private:
  void subsets(int size, VertexSet cand, std::vector<int>& chosen, bool clique) {
    if (static_cast<int>(chosen.size()) == size) {
      std::vector<int> clause;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        for (std::size_t j = i + 1; j < chosen.size(); ++j) {
          const int x = var_[chosen[i]][chosen[j]];
          if (x != 0) clause.push_back(clique ? -x : x);
        }
      }
      clauses_.push_back(std::move(clause));
      return;
    }
    const int need = size - static_cast<int>(chosen.size());
    while (popcount(cand) >= need) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      const VertexSet next =
          cand & (clique ? p_.maybe_edge(v) : p_.maybe_non_edge(v));
      chosen.push_back(v);
      subsets(size, next, chosen, clique);
      chosen.pop_back();
    }
  }

  // Pair state: 0 fixed non-edge, 1 fixed edge, 2 free.
  int state(int u, int v) const {
    if (p_.is_free(u, v)) return 2;
    return p_.is_edge(u, v) ? 1 : 0;
  }

  // C1 vertices u, w are interchangeable when swapping them preserves the
  // state of every pair; the relation is an equivalence.
  std::vector<std::vector<int>> interchangeable_classes() const {
    std::vector<int> c1;
    for_each_vertex(p_.role_set(Role::kC1), [&](int v) { c1.push_back(v); });
    std::vector<bool> used(c1.size(), false);
    std::vector<std::vector<int>> out;
    for (std::size_t i = 0; i < c1.size(); ++i) {
      if (used[i]) continue;
      std::vector<int> cls{c1[i]};
      for (std::size_t j = i + 1; j < c1.size(); ++j) {
        if (used[j] || !swappable(c1[i], c1[j])) continue;
        used[j] = true;
        cls.push_back(c1[j]);
      }
      if (cls.size() > 1) out.push_back(std::move(cls));
    }
    return out;
  }

  bool swappable(int u, int w) const {
    for (int x = 0; x < p_.order(); ++x) {
      if (x == u || x == w) continue;
      if (state(u, x) != state(w, x)) return false;
    }
    return true;
  }

  Term entry(int u, int x) const {
    if (p_.is_free(u, x)) return Term::literal(var_[u][x]);
    return Term::constant(p_.is_edge(u, x));
  }

  int new_var() { return ++cnf_.var_count; }

  void add(std::vector<Term> terms) {
    std::vector<int> clause;
    for (const Term& t : terms) {
      if (t.is_const()) {
        if (t.value) return;
      } else {
        clause.push_back(t.lit);
      }
    }
    aux_clauses_.push_back(std::move(clause));
  }

  Term xnor(Term a, Term b) {
    if (a.is_const()) return a.value ? b : b.negated();
    if (b.is_const()) return b.value ? a : a.negated();
    if (a.lit == b.lit) return Term::constant(true);
    if (a.lit == -b.lit) return Term::constant(false);
    const Term e = Term::literal(new_var());
    add({e.negated(), a.negated(), b});
    add({e.negated(), a, b.negated()});
    add({e, a, b});
    add({e, a.negated(), b.negated()});
    return e;
  }

  Term conj(Term a, Term b) {
    if (a.is_const()) return a.value ? b : a;
    if (b.is_const()) return b.value ? a : b;
    if (a.lit == b.lit) return a;
    if (a.lit == -b.lit) return Term::constant(false);
    const Term z = Term::literal(new_var());
    add({z.negated(), a});
    add({z.negated(), b});
    add({z, a.negated(), b.negated()});
    return z;
  }

  // row(u) >= row(w) lexicographically over the columns in `cols`, with
  // eq_j standing for "equal on the first j columns".
  void lex_geq(int u, int w, VertexSet cols) {
    Term eq = Term::constant(true);
    for_each_vertex(cols, [&](int x) {
      if (eq.is_const() && !eq.value) return;
      const Term a = entry(u, x);
      const Term b = entry(w, x);
      add({eq.negated(), a, b.negated()});
      eq = conj(eq, xnor(a, b));
    });
  }

  const GlueProblem& p_;
  Cnf& cnf_;
  std::vector<std::vector<int>> var_;
  std::vector<std::vector<int>> clauses_;
  std::vector<std::vector<int>> aux_clauses_;
};

}  // namespace

Cnf encode(const GlueProblem& p, const EncodeOptions& opts) {
  Cnf cnf;
  Encoder enc(p, cnf);
  enc.ramsey_clauses();
  if (opts.symmetry_breaking) {
    enc.symmetry_clauses();
  } else {
    cnf.symmetry_scheme = "none";
  }
  enc.finish();
  return cnf;
}

namespace {

class Solver {
 public:
  Solver(const Cnf& cnf, SolveMode mode, const SolveBudget& budget)
      : cnf_(cnf), mode_(mode), budget_(budget) {
    const int nv = cnf.var_count;
    value_.assign(nv + 1, -1);
    watches_.assign(2 * (nv + 1), {});
    std::vector<bool> seen(nv + 1, false);
    for (int x : cnf.priority) {
      if (x >= 1 && x <= nv && !seen[x]) {
        order_.push_back(x);
        seen[x] = true;
      }
    }
    for (int x = 1; x <= nv; ++x) {
      if (!seen[x]) order_.push_back(x);
    }
    order_pos_.assign(nv + 1, 0);
    for (std::size_t i = 0; i < order_.size(); ++i) order_pos_[order_[i]] = i;
  }

  SolveOutcome run() {
    const auto start = std::chrono::steady_clock::now();
    SolveOutcome out;
    out.status = search(out, start);
    out.stats = stats_;
    out.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  }

 private:
  static int index(int lit) { return 2 * std::abs(lit) + (lit < 0 ? 1 : 0); }

  // 1 true, 0 false, -1 unassigned.
  int lit_value(int lit) const {
    const int v = value_[std::abs(lit)];
    if (v < 0) return -1;
    return lit > 0 ? v : 1 - v;
  }

  void assign(int lit) {
    const int x = std::abs(lit);
    value_[x] = lit > 0 ? 1 : 0;
    trail_.push_back(lit);
  }

  // Returns false on conflict.
  bool load_clauses() {
    for (const auto& c : cnf_.clauses) {
      std::vector<int> lits = c;
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      bool tautology = false;
      for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
        for (std::size_t j = i + 1; j < lits.size(); ++j) {
          if (lits[i] == -lits[j]) tautology = true;
        }
      }
      if (tautology) continue;
      if (lits.empty()) return false;
      if (lits.size() == 1) {
        units_.push_back(lits[0]);
        continue;
      }
      clauses_.push_back(std::move(lits));
      const int ci = static_cast<int>(clauses_.size()) - 1;
      watches_[index(-clauses_[ci][0])].push_back(ci);
      watches_[index(-clauses_[ci][1])].push_back(ci);
    }
    for (int u : units_) {
      const int v = lit_value(u);
      if (v == 0) return false;
      if (v < 0) assign(u);
    }
    return true;
  }

  // Propagates from trail position head_; returns false on conflict.
  bool propagate() {
    while (head_ < trail_.size()) {
      const int lit = trail_[head_++];
      // Clauses watching -lit, which just became false.
      auto& ws = watches_[index(lit)];
      std::size_t keep = 0;
      bool conflict = false;
      for (std::size_t i = 0; i < ws.size(); ++i) {
        const int ci = ws[i];
        if (conflict) {
          ws[keep++] = ci;
          continue;
        }
        auto& c = clauses_[ci];
        if (c[0] == -lit) std::swap(c[0], c[1]);
        if (lit_value(c[0]) == 1) {
          ws[keep++] = ci;
          continue;
        }
        bool moved = false;
        for (std::size_t k = 2; k < c.size(); ++k) {
          if (lit_value(c[k]) != 0) {
            std::swap(c[1], c[k]);
            watches_[index(-c[1])].push_back(ci);
            moved = true;
            break;
          }
        }
        if (moved) continue;
        ws[keep++] = ci;
        if (lit_value(c[0]) == 0) {
          conflict = true;
        } else {
          ++stats_.propagations;
          assign(c[0]);
        }
      }
      ws.resize(keep);
      if (conflict) return false;
    }
    return true;
  }

  // Undoes decision number `level` and everything after it.
  void backtrack_to(std::size_t level) {
    const std::size_t target = decisions_[level].trail_size;
    while (trail_.size() > target) {
      const int x = std::abs(trail_.back());
      value_[x] = -1;
      next_ = std::min(next_, order_pos_[x]);
      trail_.pop_back();
    }
    decisions_.resize(level);
    head_ = trail_.size();
  }

  int pick() {
    while (next_ < order_.size() && value_[order_[next_]] >= 0) ++next_;
    return next_ < order_.size() ? order_[next_] : 0;
  }

  // Flips the deepest decision not yet flipped. False when none is left.
  bool resolve() {
    while (!decisions_.empty()) {
      const Decision d = decisions_.back();
      backtrack_to(decisions_.size() - 1);
      if (!d.flipped) {
        decisions_.push_back({-d.lit, true, trail_.size()});
        assign(-d.lit);
        return true;
      }
    }
    return false;
  }

  bool out_of_budget(const std::chrono::steady_clock::time_point& start) {
    if (budget_.max_decisions && stats_.decisions >= budget_.max_decisions) return true;
    if (budget_.max_seconds > 0 && (stats_.decisions & 255U) == 0) {
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (elapsed > budget_.max_seconds) return true;
    }
    return false;
  }

  void record(SolveOutcome& out) {
    std::vector<bool> full(cnf_.var_count);
    for (int x = 1; x <= cnf_.var_count; ++x) full[x - 1] = value_[x] == 1;
    R55_CHECK(satisfies(cnf_, full), "solver produced a non-model");
    ++out.model_count;
    if (mode_ != SolveMode::kCount) {
      full.resize(cnf_.primary_count);
      out.models.push_back(std::move(full));
    }
  }

  SolveStatus search(SolveOutcome& out,
                     const std::chrono::steady_clock::time_point& start) {
    if (!load_clauses() || !propagate()) return SolveStatus::kUnsat;
    for (;;) {
      bool ok = propagate();
      if (!ok) {
        ++stats_.conflicts;
        if (!resolve()) break;
        continue;
      }
      const int x = pick();
      if (x == 0) {
        record(out);
        if (mode_ == SolveMode::kFirst) return SolveStatus::kSat;
        // Auxiliary variables are functions of the primary ones, so no
        // other model shares this primary assignment.
        while (!decisions_.empty() &&
               std::abs(decisions_.back().lit) > cnf_.primary_count) {
          backtrack_to(decisions_.size() - 1);
        }
        if (!resolve()) break;
        continue;
      }
      if (out_of_budget(start)) return SolveStatus::kUndecided;
      ++stats_.decisions;
      decisions_.push_back({-x, false, trail_.size()});
      assign(-x);
    }
    return out.model_count > 0 ? SolveStatus::kSat : SolveStatus::kUnsat;
  }

  struct Decision {
    int lit;
    bool flipped;
    std::size_t trail_size;  // trail length before the decision literal
  };

  const Cnf& cnf_;
  SolveMode mode_;
  SolveBudget budget_;
  std::vector<std::vector<int>> clauses_;
  std::vector<int> units_;
  std::vector<std::vector<int>> watches_;
  std::vector<int> value_;
  std::vector<int> trail_;
  std::size_t head_ = 0;
  std::vector<Decision> decisions_;
  std::vector<int> order_;
  std::vector<std::size_t> order_pos_;
  std::size_t next_ = 0;
  SolveStats stats_;
};

}  // namespace

SolveOutcome solve(const Cnf& cnf, SolveMode mode, const SolveBudget& budget) {
  for (const auto& c : cnf.clauses) {
    for (int lit : c) {
      if (lit == 0 || std::abs(lit) > cnf.var_count) {
        throw ValidationError("clause literal out of range");
      }
    }
  }
  return Solver(cnf, mode, budget).run();
}

bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment) {
  const int known = static_cast<int>(assignment.size());
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    bool decided = true;
    for (int lit : c) {
      const int x = std::abs(lit);
      if (x > known) {
        decided = false;
        continue;
      }
      if (assignment[x - 1] == (lit > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat && decided) return false;
  }
  return true;
}

std::string to_dimacs(const Cnf& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.var_count) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (const auto& c : cnf.clauses) {
    for (int lit : c) {
      out += std::to_string(lit);
      out += ' ';
    }
    out += "0\n";
  }
  return out;
}

Cnf parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Cnf cnf;
  bool header = false;
  std::size_t expected = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      long long vars = -1, clauses = -1;
      ls >> p >> fmt >> vars >> clauses;
      if (fmt != "cnf" || vars < 0 || clauses < 0) {
        throw ValidationError("malformed DIMACS header: " + line);
      }
      cnf.var_count = cnf.primary_count = static_cast<int>(vars);
      expected = static_cast<std::size_t>(clauses);
      header = true;
      continue;
    }
    if (!header) throw ValidationError("DIMACS clause before header");
    long long lit;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::llabs(lit) > cnf.var_count) {
          throw ValidationError("DIMACS literal out of range: " + std::to_string(lit));
        }
        current.push_back(static_cast<int>(lit));
      }
    }
    if (!ls.eof()) throw ValidationError("malformed DIMACS line: " + line);
  }
  if (!header) throw ValidationError("missing DIMACS header");
  if (!current.empty()) throw ValidationError("unterminated DIMACS clause");
  if (cnf.clauses.size() != expected) {
    throw ValidationError("DIMACS clause count does not match header");
  }
  return cnf;
}

std::vector<bool> parse_model(std::string_view text, int var_count) {
  std::istringstream in{std::string(text)};
  std::vector<bool> out(var_count, false);
  std::string tok;
  while (in >> tok) {
    if (tok == "v" || tok == "V") continue;
    if (tok == "s" || tok == "c") {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    long long lit = 0;
    try {
      std::size_t used = 0;
      lit = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ValidationError("malformed model token '" + tok + "'");
    }
    if (lit == 0) continue;
    if (std::llabs(lit) > var_count) {
      throw ValidationError("model literal out of range: " + tok);
    }
    out[std::llabs(lit) - 1] = lit > 0;
  }
  return out;
}

Graph from_model(const Cnf& cnf, const std::vector<bool>& assignment,
                 const GlueProblem& p) {
  if (static_cast<int>(assignment.size()) < cnf.primary_count) {
    throw ValidationError("assignment shorter than the number of primary variables");
  }
  if (static_cast<int>(cnf.decode.size()) != cnf.primary_count) {
    throw ValidationError("CNF carries no decode map for this problem");
  }
  Graph g = p.fixed;
  for (int i = 0; i < cnf.primary_count; ++i) {
    const auto [u, v] = cnf.decode[i];
    if (!p.is_free(u, v)) throw ValidationError("decode map does not match problem");
    if (assignment[i]) g.add_edge(u, v);
  }
  R55_CHECK(is_ramsey(g, p.rt), "decoded model is not a Ramsey graph");
  return g;
}

}  // namespace r55
