"""Permutation groups acting on the right, given by generators.

A permutation is a tuple ``p`` with ``p[v]`` the image of ``v``.  Products
follow the right-action convention: ``compose(p, q)`` applies ``p`` first,
so ``apply(compose(p, q), v) == apply(q, apply(p, v))``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import CapExceeded, GroupError
from .graph_core import Graph

Permutation = tuple

DEFAULT_GROUP_CAP = 10**6
DEFAULT_AUT_LIMIT = 16


def check_perm(p: Sequence[int]) -> Permutation:
    p = tuple(int(x) for x in p)
    if sorted(p) != list(range(len(p))):
        raise GroupError(f"not a permutation: {p}")
    return p


def identity(n: int) -> Permutation:
    return tuple(range(n))


def is_identity(p: Permutation) -> bool:
    return all(i == x for i, x in enumerate(p))


def apply(p: Permutation, v: int) -> int:
    if not 0 <= v < len(p):
        raise GroupError(f"point {v} outside [0, {len(p)})")
    return p[v]


def compose(p: Permutation, q: Permutation) -> Permutation:
    if len(p) != len(q):
        raise GroupError("degree mismatch")
    return tuple(q[x] for x in p)


def inverse(p: Permutation) -> Permutation:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def rotation(n: int, step: int = 1) -> Permutation:
    return tuple((i + step) % n for i in range(n))


def from_cycles(n: int, *cycles: Sequence[int]) -> Permutation:
    """Build a permutation of degree n from disjoint cycles, e.g. (0, 1, 2)."""
    img = list(range(n))
    for cyc in cycles:
        for i, x in enumerate(cyc):
            img[x] = cyc[(i + 1) % len(cyc)]
    return check_perm(img)


@dataclass
class GroupAction:
    """Group generated by ``generators``, acting on points 0..degree-1."""

    generators: list
    label: str = ""
    _elements: list | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if not self.generators:
            raise GroupError("need at least one generator")
        self.generators = [check_perm(p) for p in self.generators]
        if len({len(p) for p in self.generators}) != 1:
            raise GroupError("generators have different degrees")

    @property
    def degree(self) -> int:
        return len(self.generators[0])

    def orbit(self, v: int) -> list[int]:
        apply(self.generators[0], v)
        seen = {v}
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for p in self.generators:
                w = p[u]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return sorted(seen)

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree

    def enumerate_elements(self, cap: int = DEFAULT_GROUP_CAP) -> list[Permutation]:
        """All group elements, breadth-first from the identity.

        Layer ``d`` holds the elements first reached as words of length ``d``
        in the generators; each layer is sorted lexicographically.
        """
        if cap < 1:
            raise ValueError("cap must be >= 1")
        if self._elements is not None:
            if len(self._elements) > cap:
                raise CapExceeded(cap, "group elements")
            return self._elements
        ident = identity(self.degree)
        seen = {ident}
        out = [ident]
        layer = [ident]
        while layer:
            nxt = set()
            for x in layer:
                for s in self.generators:
                    y = tuple(s[i] for i in x)
                    if y not in seen:
                        seen.add(y)
                        nxt.add(y)
                        if len(seen) > cap:
                            raise CapExceeded(cap, "group elements")
            layer = sorted(nxt)
            out += layer
        self._elements = out
        return out

    def order(self, cap: int = DEFAULT_GROUP_CAP) -> int:
        return len(self.enumerate_elements(cap))

    def stabilizer_order(self, v: int, cap: int = DEFAULT_GROUP_CAP) -> int:
        """|G_v|; |G|/n for transitive actions, direct filtering otherwise."""
        elements = self.enumerate_elements(cap)
        if self.is_transitive():
            return len(elements) // self.degree
        return sum(1 for p in elements if p[v] == v)


@dataclass
class TransitivityCheck:
    transitive: bool
    bad_edge: tuple | None = None
    bad_generator: int | None = None
    unreached: int | None = None

    def __bool__(self):
        return self.transitive


def is_automorphism(g: Graph, p: Permutation) -> tuple | None:
    """None if p preserves adjacency, else an edge whose image is a non-edge."""
    for u, v in g.edges:
        if p[v] not in g.adj[p[u]]:
            return (u, v)
    return None


def is_vertex_transitive(g: Graph, a: GroupAction) -> TransitivityCheck:
    if a.degree != g.n:
        raise GroupError(f"action degree {a.degree} != graph order {g.n}")
    for i, p in enumerate(a.generators):
        bad = is_automorphism(g, p)
        if bad is not None:
            return TransitivityCheck(False, bad_edge=bad, bad_generator=i)
    orb = set(a.orbit(0))
    if len(orb) < g.n:
        missing = min(set(range(g.n)) - orb)
        return TransitivityCheck(False, unreached=missing)
    return TransitivityCheck(True)


# -- automorphisms of small graphs ---------------------------------------------

def _extend(g: Graph, fixed: dict[int, int], order: list[int]) -> Permutation | None:
    """Backtracking search for one automorphism extending ``fixed``."""
    n = g.n
    deg = g.degrees()
    img = dict(fixed)
    used = set(img.values())
    for u, x in fixed.items():
        if deg[u] != deg[x]:
            return None
    for u in fixed:
        for w in fixed:
            if (w in g.adj[u]) != (fixed[w] in g.adj[fixed[u]]):
                return None
    todo = [v for v in order if v not in img]

    def candidates(v):
        mapped_nbr = next((w for w in g.adj[v] if w in img), None)
        pool = g.adj[img[mapped_nbr]] if mapped_nbr is not None else range(n)
        return sorted(x for x in pool if x not in used and deg[x] == deg[v])

    def consistent(v, x):
        for w, y in img.items():
            if (w in g.adj[v]) != (y in g.adj[x]):
                return False
        return True

    def rec(i):
        if i == len(todo):
            return True
        v = todo[i]
        for x in candidates(v):
            if consistent(v, x):
                img[v] = x
                used.add(x)
                if rec(i + 1):
                    return True
                del img[v]
                used.discard(x)
        return False

    if not rec(0):
        return None
    return tuple(img[v] for v in range(n))


def _search_order(g: Graph, roots: Iterable[int]) -> list[int]:
    """Vertices in BFS order from ``roots`` then from any unreached vertex."""
    order, seen = [], set()
    for r in list(roots) + list(range(g.n)):
        if r in seen:
            continue
        seen.add(r)
        queue = deque([r])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in g.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def automorphism_generators(g: Graph, limit: int = DEFAULT_AUT_LIMIT) -> GroupAction:
    """Generators for Aut(g) from a pointwise-stabilizer chain on base 0, 1, 2, ...

    At level i (vertices 0..i-1 fixed) one automorphism is searched for each
    target of vertex i not already in the orbit of the generators found so
    far that fix 0..i-1.  The union of these transversal elements generates
    the full automorphism group.
    """
    if g.n > limit:
        raise GroupError(f"n = {g.n} exceeds automorphism search limit {limit}; "
                         "supply generators explicitly")
    n = g.n
    gens: list[Permutation] = []
    for level in range(n - 1):
        base = list(range(level))
        order = _search_order(g, base + [level])
        local = [p for p in gens if all(p[b] == b for b in base)]
        orb = set(GroupAction(local).orbit(level)) if local else {level}
        for target in range(n):
            if target in orb or target in base:
                continue
            fixed = {b: b for b in base}
            fixed[level] = target
            p = _extend(g, fixed, order)
            if p is not None:
                gens.append(p)
                local.append(p)
                orb = set(GroupAction(local).orbit(level))
    if not gens:
        gens = [identity(n)]
    return GroupAction(gens, label="Aut (backtracking search)")


# -- generator file format ------------------------------------------------------

def format_generators(a: GroupAction, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{a.degree} {len(a.generators)}")
    lines += [" ".join(map(str, p)) for p in a.generators]
    return "\n".join(lines) + "\n"


def parse_generators(text: str) -> GroupAction:
    rows = [ln.split() for ln in (r.strip() for r in text.splitlines())
            if ln and not ln.startswith("#")]
    if not rows:
        raise GroupError("empty generator file")
    try:
        rows = [[int(x) for x in r] for r in rows]
    except ValueError as exc:
        raise GroupError(f"non-integer token: {exc}") from None
    if len(rows[0]) != 2:
        raise GroupError("header must be 'n k'")
    n, k = rows[0]
    body = rows[1:]
    if len(body) != k:
        raise GroupError(f"header declares {k} generators, found {len(body)}")
    for r in body:
        if len(r) != n:
            raise GroupError(f"generator line has {len(r)} entries, expected {n}")
    return GroupAction([check_perm(r) for r in body])


def read_generators(path) -> GroupAction:
    return parse_generators(Path(path).read_text())


def write_generators(a: GroupAction, path, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_generators(a, comments))


def cayley_action(generators, cap: int = DEFAULT_GROUP_CAP) -> GroupAction:
    """Left-regular action on the vertices of the matching :func:`cayley_graph`.

    Left multiplication x -> h*x commutes with the right multiplication that
    defines the Cayley edges, so it acts by automorphisms and transitively.
    """
    elements = GroupAction(generators).enumerate_elements(cap)
    index = {p: i for i, p in enumerate(elements)}
    perms = []
    for h in GroupAction(generators).generators:
        perms.append(tuple(index[compose(h, x)] for x in elements))
    return GroupAction(perms, label="left regular action")
