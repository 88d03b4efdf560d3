#!/usr/bin/env python3
"""Regenerate the golden graph files and values under tests/golden/.

Each circumference is taken from the pruned solver and only written after an
independent search without pruning confirms it: no cycle longer than t
exists, and the unpruned count of length-t cycles matches the enumeration.
"""

import json
import sys
import time
from pathlib import Path

from vtcycles.cycle_solver import (circumference, enumerate_longest_cycles, has_cycle_longer_than,
                                   min_pairwise_intersection, unpruned_longest_cycles)
from vtcycles.graph_core import coxeter, petersen, truncate, write_graph

GOLDEN = Path(__file__).resolve().parents[1] / "tests" / "golden"


def confirmed_values(g):
    t, _ = circumference(g)
    res = enumerate_longest_cycles(g, t=t)
    if has_cycle_longer_than(g, t):
        sys.exit(f"unpruned search found a cycle longer than {t}")
    if unpruned_longest_cycles(g, t) != len(res.cycles):
        sys.exit("unpruned count of longest cycles disagrees with the enumeration")
    return {"n": g.n, "circumference": t, "longest_cycle_count": len(res.cycles),
            "k_min_intersection": min_pairwise_intersection(res).k}


if __name__ == "__main__":
    GOLDEN.mkdir(parents=True, exist_ok=True)
    graphs = {"petersen": (petersen(), "petersen"),
              "coxeter": (coxeter(), "coxeter"),
              "truncated_petersen": (truncate(petersen()), "truncate petersen")}
    values = {}
    for name, (g, comment) in graphs.items():
        write_graph(g, GOLDEN / f"{name}.g", comments=[comment])
        start = time.perf_counter()
        values[name] = confirmed_values(g)
        print(f"{name}: {values[name]} ({time.perf_counter() - start:.1f}s)")
    (GOLDEN / "values.json").write_text(json.dumps(values, indent=2, sort_keys=True) + "\n")
