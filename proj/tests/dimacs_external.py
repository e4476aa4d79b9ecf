# Copyright 2026 The r55 Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exports gluing problems as DIMACS, solves them with an external solver,
decodes every model through the CLI and compares with the built-in solver."""

import json
import os
import subprocess
import sys
import tempfile

import networkx as nx
from pysat.formula import CNF
from pysat.solvers import Solver

CLI = sys.argv[1]


def run(args):
    return subprocess.run([CLI] + args, capture_output=True, text=True)


def g6(graph):
    return nx.to_graph6_bytes(graph, header=False).decode().strip()


def from_g6(text):
    return nx.from_graph6_bytes(text.strip().encode())


CASES = [
    ("3", "4", nx.cycle_graph(5), 0, nx.cycle_graph(5), 0, 8),
    ("3", "4", nx.empty_graph(2), 0, nx.empty_graph(2), 0, 5),
    ("3", "5", nx.empty_graph(3), 0, nx.empty_graph(3), 0, 7),
    ("4", "4", nx.path_graph(3), 1, nx.path_graph(3), 1, 7),
    ("4", "4", nx.cycle_graph(5), 0, nx.path_graph(4), 1, 8),
    ("4", "4", nx.cycle_graph(5), 0, nx.cycle_graph(5), 0, 9),
    ("4", "4", nx.path_graph(4), 1, nx.star_graph(3), 1, 8),
]


def main():
    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        for case_no, (s, t, g, a, h, b, target) in enumerate(CASES):
            common = [s, t, "--left", g6(g), "--left-point", str(a), "--right", g6(h),
                      "--right-point", str(b), "--target", str(target)]
            sol_path = os.path.join(tmp, f"sol{case_no}.g6")
            glue_report = os.path.join(tmp, f"glue{case_no}.jsonl")
            r = run(["--report", glue_report, "glue"] + common + ["--solutions", sol_path])
            if r.returncode != 0:
                print("glue failed:", r.stderr)
                return 1
            with open(sol_path) as f:
                builtin = [from_g6(line) for line in f if line.strip()]
            with open(glue_report) as f:
                builtin_counts = [rec["models"] for rec in map(json.loads, f) if "problem" in rec]
            external_counts = []

            external = []
            index = 0
            while True:
                cnf_path = os.path.join(tmp, f"p{case_no}_{index}.cnf")
                report = os.path.join(tmp, f"r{case_no}_{index}.jsonl")
                r = run(["--report", report, "export-dimacs"] + common +
                        ["--index", str(index), "--out", cnf_path])
                if r.returncode == 2:
                    break
                if r.returncode != 0:
                    print("export failed:", r.stderr)
                    return 1
                with open(report) as f:
                    primary = [json.loads(line) for line in f][-1]["primary"]
                cnf = CNF(from_file=cnf_path)
                external_counts.append(0)
                with Solver(name="cadical153", bootstrap_with=cnf.clauses) as solver:
                    while solver.solve():
                        model = solver.get_model()
                        model_path = os.path.join(tmp, "model.txt")
                        with open(model_path, "w") as f:
                            f.write("v " + " ".join(map(str, model)) + " 0\n")
                        d = run(["export-dimacs"] + common +
                                ["--index", str(index), "--model", model_path])
                        if d.returncode != 0:
                            print("decoded model rejected:", d.stderr)
                            failures += 1
                        else:
                            external.append(from_g6(d.stdout))
                        external_counts[-1] += 1
                        block = [-lit for lit in model[:primary]]
                        if not block:
                            break
                        solver.add_clause(block)
                index += 1

            def covered(xs, ys):
                return all(any(nx.is_isomorphic(x, y) for y in ys) for x in xs)

            ok = (covered(builtin, external) and covered(external, builtin)
                  and builtin_counts == external_counts)
            status = "sat" if builtin else "unsat"
            print(f"case {case_no}: {len(builtin)} built-in classes, {external_counts} external "
                  f"models per problem, {status}, {'agree' if ok else 'DISAGREE'}")
            failures += not ok
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
