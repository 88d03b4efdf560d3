#!/usr/bin/env python3
"""Tabulate t/n over the built-in corpus plus a time-capped truncated Coxeter run.

The truncated Coxeter graph (n = 84) is best effort only: when the time limit
is hit the row reports the limit instead of a value.
"""

import argparse
from fractions import Fraction

from vtcycles.bounds import rat
from vtcycles.corpus import builtin_corpus
from vtcycles.cycle_solver import circumference
from vtcycles.errors import SolverTimeout
from vtcycles.graph_core import coxeter, truncate


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--time-limit", type=float, default=60.0,
                    help="seconds allowed for each graph (default 60)")
    args = ap.parse_args()

    rows = [(name, g) for name, g, _ in builtin_corpus()]
    rows.append(("truncated_coxeter", truncate(coxeter())))
    best = None
    for name, g in rows:
        try:
            t, _ = circumference(g, time_limit=args.time_limit)
        except SolverTimeout:
            print(f"{name:40s} n={g.n:3d} t=?   (time limit {args.time_limit:g}s)")
            continue
        ratio = Fraction(t, g.n)
        if best is None or ratio < best[0]:
            best = (ratio, name)
        print(f"{name:40s} n={g.n:3d} t={t:3d} t/n={rat(ratio):>7s} = {float(ratio):.3f}")
    if best:
        print(f"minimum t/n: {rat(best[0])} ({best[1]})")


if __name__ == "__main__":
    main()
