#!/usr/bin/env python3
"""Solve a DIMACS or iCNF file with CaDiCaL through python-sat.

Exit status follows the usual convention: 10 satisfiable, 20 unsatisfiable.
For iCNF input every cube is solved under assumptions; the result is
satisfiable if any cube is.
"""

import argparse
import sys
import time

from pysat.solvers import Solver


def read(path):
    clauses, cubes, cur = [], [], []
    with open(path) as fh:
        for line in fh:
            s = line.strip()
            if not s or s[0] in "cp%":
                continue
            is_cube = s[0] == "a"
            if is_cube:
                s = s[1:]
            for tok in s.split():
                v = int(tok)
                if v == 0:
                    (cubes if is_cube else clauses).append(cur)
                    cur = []
                else:
                    cur.append(v)
    return clauses, cubes


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("input")
    ap.add_argument("--solver", default="cadical195")
    ap.add_argument("--model", action="store_true", help="print v lines")
    args = ap.parse_args()

    clauses, cubes = read(args.input)
    t0 = time.time()
    with Solver(name=args.solver, bootstrap_with=clauses) as s:
        if not cubes:
            sat = s.solve()
            results = [sat]
        else:
            results = []
            for i, cube in enumerate(cubes):
                r = s.solve(assumptions=cube)
                results.append(r)
                print(f"c cube {i} {'SAT' if r else 'UNSAT'}")
            sat = any(results)
        print(f"c time {time.time() - t0:.2f}")
        if sat:
            print("s SATISFIABLE")
            if args.model and not cubes:
                print("v " + " ".join(map(str, s.get_model())) + " 0")
        else:
            print("s UNSATISFIABLE")
    sys.stdout.flush()
    return 10 if sat else 20


if __name__ == "__main__":
    sys.exit(main())
