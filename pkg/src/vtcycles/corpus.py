"""Built-in corpus of vertex-transitive graphs with transitive group actions."""

from __future__ import annotations

from itertools import combinations
from pathlib import Path

from .graph_core import (Graph, cayley_graph, circulant, complete_graph, coxeter, cycle_graph,
                         petersen, petersen_labels, truncate, write_graph)
from .group_action import (GroupAction, automorphism_generators, cayley_action, from_cycles,
                           rotation, write_generators)

CIRCULANTS = [
    (8, [1, 2]), (8, [1, 4]), (9, [1, 3]), (10, [1, 2]), (10, [1, 5]),
    (12, [1, 5]), (12, [1, 6]), (13, [1, 5]), (14, [1, 4]), (15, [1, 5]),
    (16, [1, 8]), (16, [1, 4]),
]


def petersen_s5_action() -> GroupAction:
    """S_5 acting on the 2-subsets that label the Petersen vertices."""
    labels = petersen_labels()
    index = {frozenset(s): i for i, s in enumerate(labels)}
    gens = []
    for perm in (from_cycles(5, (0, 1)), from_cycles(5, (0, 1, 2, 3, 4))):
        gens.append(tuple(index[frozenset(perm[x] for x in s)] for s in labels))
    return GroupAction(gens, label="S5 on 2-subsets")


def cyclic_action(n: int) -> GroupAction:
    return GroupAction([rotation(n)], label=f"Z{n} rotations")


def truncation_action(g: Graph, a: GroupAction) -> GroupAction:
    """Action on ``truncate(g)`` induced by automorphisms of the cubic graph g.

    Vertex 3v+i (v's i-th smallest neighbor u) goes to 3v'+j where v' = v^p
    and j is the slot of u^p among v''s sorted neighbors.
    """
    slot = [{w: i for i, w in enumerate(g.neighbors(v))} for v in range(g.n)]
    gens = []
    for p in a.generators:
        img = [0] * (3 * g.n)
        for v in range(g.n):
            for i, u in enumerate(g.neighbors(v)):
                img[3 * v + i] = 3 * p[v] + slot[p[v]][p[u]]
        gens.append(tuple(img))
    return GroupAction(gens, label=f"induced on truncation from {a.label}")


def cayley_examples():
    """(name, generators, connection set) for small permutation groups."""
    t01, t12, t23 = from_cycles(4, (0, 1)), from_cycles(4, (1, 2)), from_cycles(4, (2, 3))
    four = from_cycles(4, (0, 1, 2, 3))
    s3 = [from_cycles(3, (0, 1)), from_cycles(3, (1, 2)), from_cycles(3, (0, 2))]
    d6_rot, d6_ref = from_cycles(6, (0, 1, 2, 3, 4, 5)), from_cycles(6, (1, 5), (2, 4))
    a4 = [from_cycles(4, (0, 1, 2)), from_cycles(4, (0, 1), (2, 3))]
    return [
        ("cayley_s3_transpositions", s3, s3),
        ("cayley_s4_adjacent_transpositions", [t01, t12, t23], [t01, t12, t23]),
        ("cayley_s4_transposition_4cycle", [t01, four], [t01, four]),
        ("cayley_d6_rotation_reflection", [d6_rot, d6_ref], [d6_rot, d6_ref]),
        ("cayley_a4", a4, a4),
    ]


def builtin_corpus() -> list[tuple[str, Graph, GroupAction]]:
    items = []
    for n in range(3, 13):
        items.append((f"cycle_{n:02d}", cycle_graph(n), cyclic_action(n)))
    items.append(("complete_04", complete_graph(4), cyclic_action(4)))
    items.append(("complete_05", complete_graph(5), cyclic_action(5)))
    for n, offs in CIRCULANTS:
        name = f"circulant_{n:02d}_" + "_".join(map(str, offs))
        items.append((name, circulant(n, offs), cyclic_action(n)))
    for name, gens, conn in cayley_examples():
        items.append((name, cayley_graph(gens, conn), cayley_action(gens)))
    k4 = complete_graph(4)
    k4_aut = GroupAction([from_cycles(4, (0, 1)), from_cycles(4, (0, 1, 2, 3))], label="S4")
    items.append(("truncated_tetrahedron", truncate(k4), truncation_action(k4, k4_aut)))
    p = petersen()
    items.append(("petersen", p, petersen_s5_action()))
    items.append(("truncated_petersen", truncate(p), truncation_action(p, petersen_s5_action())))
    cox = coxeter()
    cox_aut = automorphism_generators(cox, limit=cox.n)
    cox_aut.label = "Aut(Coxeter) by backtracking"
    items.append(("coxeter", cox, cox_aut))
    return items


def write_corpus(directory, items=None) -> list[Path]:
    """Write ``name.g`` graph files with ``name.grp`` group sidecars."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, g, a in items if items is not None else builtin_corpus():
        write_graph(g, directory / f"{name}.g", comments=[name])
        written.append(directory / f"{name}.g")
        if a is not None:
            write_generators(a, directory / f"{name}.grp", comments=[a.label or name])
    return written
