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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "r55/graph.hpp"

namespace r55 {

struct GlueProblem;

// Variables 1..primary_count stand for the free vertex pairs of a gluing
// problem (decode[i] is the pair of variable i+1); any further variables
// are auxiliary and are functions of the primary ones.
struct Cnf {
  int var_count = 0;
  int primary_count = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::pair<int, int>> decode;
  // Primary variables to branch on first, in order.
  std::vector<int> priority;
  std::string symmetry_scheme;
};

struct EncodeOptions {
  bool symmetry_breaking = true;
};

// One clause per s-subset that could still become a clique and per t-subset
// that could still become independent; a subset decided entirely by fixed
// pairs yields the empty clause. With symmetry breaking, members of each
// class of interchangeable C1 vertices get lexicographically non-increasing
// rows over the columns outside their class.
Cnf encode(const GlueProblem& p, const EncodeOptions& opts = {});

enum class SolveMode { kAll, kFirst, kCount };
enum class SolveStatus { kSat, kUnsat, kUndecided };

std::string_view status_name(SolveStatus s);

struct SolveBudget {
  std::uint64_t max_decisions = 0;  // 0: unlimited
  double max_seconds = 0;           // 0: unlimited
};

struct SolveStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  double seconds = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kUndecided;
  // Assignments to the primary variables; index i is variable i+1. Filled
  // in modes kAll and kFirst.
  std::vector<std::vector<bool>> models;
  std::uint64_t model_count = 0;
  SolveStats stats;
};

// DPLL with two watched literals per clause and chronological backtracking.
// Models are enumerated over the primary variables: once one is found the
// search resumes from the last primary decision, which blocks that
// assignment without adding clauses. Running out of budget gives
// kUndecided, with whatever models were found so far.
SolveOutcome solve(const Cnf& cnf, SolveMode mode, const SolveBudget& budget = {});

// True iff the full or primary-only assignment satisfies every clause that
// mentions only assigned variables; a full assignment must satisfy all.
bool satisfies(const Cnf& cnf, const std::vector<bool>& assignment);

// "p cnf V C" followed by one zero-terminated clause per line.
std::string to_dimacs(const Cnf& cnf);
// Accepts comment lines; the result has every variable primary and no
// decode map.
Cnf parse_dimacs(std::string_view text);

// Whitespace-separated signed literals, optionally with "v" / "s" lines and
// a terminating 0 as printed by common solvers. Returns an assignment of
// length var_count; unmentioned variables are false.
std::vector<bool> parse_model(std::string_view text, int var_count);

// The solution graph: fixed edges plus the free pairs whose variable is
// true. Throws ValidationError on a short assignment and
// InvariantViolation if the graph is not Ramsey.
Graph from_model(const Cnf& cnf, const std::vector<bool>& assignment,
                 const GlueProblem& p);

}  // namespace r55
