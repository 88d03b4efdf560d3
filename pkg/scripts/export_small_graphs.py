#!/usr/bin/env python3
"""Export every connected graph on 1..7 vertices from the networkx graph atlas.

The atlas (Read & Wilson, "An Atlas of Graphs") lists all 1253 graphs with at
most 7 nodes up to isomorphism.  Output: one graph per line,
``atlas_index n u,v u,v ...``, written to tests/data/connected_graphs_le7.txt.
"""

import sys
from pathlib import Path

import networkx as nx

OUT = Path(__file__).resolve().parents[1] / "tests" / "data" / "connected_graphs_le7.txt"


def main():
    lines = ["# connected graphs with n <= 7 from networkx.graph_atlas_g()",
             "# format: atlas_index n u,v u,v ..."]
    count = 0
    for idx, g in enumerate(nx.graph_atlas_g()):
        n = g.number_of_nodes()
        if n == 0 or not nx.is_connected(g):
            continue
        edges = sorted(tuple(sorted(e)) for e in g.edges())
        lines.append(" ".join([str(idx), str(n)] + [f"{u},{v}" for u, v in edges]))
        count += 1
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {count} graphs to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
