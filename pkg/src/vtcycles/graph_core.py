"""Simple undirected graphs on vertices 0..n-1, generators and text I/O.

Every generator returns a validated :class:`Graph`.  Vertices are dense
integers; generators that start from structured labels (2-subsets for the
Petersen graph, group elements for Cayley graphs) expose the labeling
through a companion ``*_labels`` function.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import GraphError


class Graph:
    """Immutable simple undirected graph.

    ``edges`` holds sorted pairs ``(u, v)`` with ``u < v``; ``adj[v]`` is the
    neighbor set of ``v``.  Both are derived from the same validated edge set.
    """

    __slots__ = ("n", "edges", "adj", "_masks", "_sorted_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            canon.add((u, v) if u < v else (v, u))
        adj = [set() for _ in range(n)]
        for u, v in canon:
            adj[u].add(v)
            adj[v].add(u)
        self.n = n
        self.edges = tuple(sorted(canon))
        self.adj = tuple(frozenset(a) for a in adj)
        self._masks = None
        self._sorted_adj = None

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, v: int) -> list[int]:
        """Neighbors of ``v`` in ascending order."""
        if self._sorted_adj is None:
            self._sorted_adj = tuple(tuple(sorted(a)) for a in self.adj)
        return list(self._sorted_adj[v])

    def neighbor_masks(self) -> tuple[int, ...]:
        """Adjacency as integer bitmasks, bit ``w`` of entry ``v`` set iff v~w."""
        if self._masks is None:
            masks = []
            for a in self.adj:
                mask = 0
                for w in a:
                    mask |= 1 << w
                masks.append(mask)
            self._masks = tuple(masks)
        return self._masks

    def is_regular(self, d: int) -> bool:
        return all(len(a) == d for a in self.adj)

    def validate(self) -> None:
        """Re-check the structural invariants; raises GraphError on failure."""
        rebuilt = set()
        for u in range(self.n):
            if u in self.adj[u]:
                raise GraphError(f"loop at {u}")
            for w in self.adj[u]:
                if u not in self.adj[w]:
                    raise GraphError(f"asymmetric adjacency {u}->{w}")
                rebuilt.add((min(u, w), max(u, w)))
        if rebuilt != set(self.edges):
            raise GraphError("adjacency does not match edge set")

    def induced_without(self, removed: Iterable[int]) -> "Graph":
        """Same vertex labels, with every edge touching ``removed`` deleted."""
        gone = set(removed)
        return Graph(self.n, [(u, v) for u, v in self.edges
                              if u not in gone and v not in gone])

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    return Graph(n, [tuple(p) for p in pairs])


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    verts = set(range(g.n)) if within is None else set(within)
    if not verts:
        return True
    return len(reachable(g, next(iter(verts)), verts)) == len(verts)


def reachable(g: Graph, start: int, allowed: set[int] | None = None) -> set[int]:
    """Vertices reachable from ``start`` using only vertices in ``allowed``."""
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w not in seen and (allowed is None or w in allowed):
                seen.add(w)
                queue.append(w)
    return seen


def bfs_girth(g: Graph) -> int | None:
    """Length of a shortest cycle, or None for a forest.

    BFS from every vertex; a non-tree edge (u, w) closes a closed walk of
    length dist[u] + dist[w] + 1, and the minimum over all roots is the girth.
    """
    best = None
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    length = dist[u] + dist[w] + 1
                    if best is None or length < best:
                        best = length
    return best


# -- generators ---------------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_labels() -> list[tuple[int, int]]:
    """Vertex i of :func:`petersen` is the i-th 2-subset of {0..4} in lex order."""
    return list(combinations(range(5), 2))


def petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent iff disjoint."""
    labels = petersen_labels()
    edges = [(i, j) for i, j in combinations(range(10), 2)
             if not set(labels[i]) & set(labels[j])]
    return Graph(10, edges)


# Coxeter graph.  Vertices a_i = i, b_i = 7 + i, c_i = 14 + i, d_i = 21 + i for
# i in Z_7, with spokes a_i b_i, a_i c_i, a_i d_i and the three heptagons
# b_i b_{i+1}, c_i c_{i+2}, d_i d_{i+3}.  Row v lists the sorted neighbors of v.
COXETER_ADJACENCY = (
    (7, 14, 21), (8, 15, 22), (9, 16, 23), (10, 17, 24),
    (11, 18, 25), (12, 19, 26), (13, 20, 27),
    (0, 8, 13), (1, 7, 9), (2, 8, 10), (3, 9, 11),
    (4, 10, 12), (5, 11, 13), (6, 7, 12),
    (0, 16, 19), (1, 17, 20), (2, 14, 18), (3, 15, 19),
    (4, 16, 20), (5, 14, 17), (6, 15, 18),
    (0, 24, 25), (1, 25, 26), (2, 26, 27), (3, 21, 27),
    (4, 21, 22), (5, 22, 23), (6, 23, 24),
)


def coxeter() -> Graph:
    edges = [(v, w) for v, row in enumerate(COXETER_ADJACENCY) for w in row]
    return Graph(28, edges)


def circulant(n: int, offsets: Iterable[int]) -> Graph:
    offsets = list(offsets)
    if n < 3:
        raise GraphError("circulant needs n >= 3")
    if not offsets:
        raise GraphError("circulant needs at least one offset")
    for d in offsets:
        if d < 1 or 2 * d > n:
            raise GraphError(f"offset {d} outside [1, n/2]")
    return Graph(n, [(i, (i + d) % n) for i in range(n) for d in offsets])


def truncate(g: Graph) -> Graph:
    """Replace every vertex of a cubic graph by a triangle.

    Vertex v becomes 3v, 3v+1, 3v+2; the edge to v's i-th smallest neighbor
    is re-attached to 3v+i.
    """
    if not g.is_regular(3):
        raise GraphError("truncation needs a 3-regular graph")
    slot = [{w: i for i, w in enumerate(g.neighbors(v))} for v in range(g.n)]
    edges = []
    for v in range(g.n):
        edges += [(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]
    for u, v in g.edges:
        edges.append((3 * u + slot[u][v], 3 * v + slot[v][u]))
    return Graph(3 * g.n, edges)


def cayley_graph(generators, connection, cap: int = 10**6) -> Graph:
    """Cayley graph of the permutation group generated by ``generators``.

    ``connection`` is symmetrized and stripped of the identity.  Vertex i is
    the i-th element of ``enumerate_elements``; x is joined to x*s.
    """
    from .group_action import GroupAction, compose, inverse, is_identity

    elements = GroupAction(generators).enumerate_elements(cap)
    index = {p: i for i, p in enumerate(elements)}
    conn = set()
    for s in connection:
        s = tuple(s)
        if not is_identity(s):
            conn.add(s)
            conn.add(inverse(s))
    edges = []
    for i, x in enumerate(elements):
        for s in sorted(conn):
            j = index.get(compose(x, s))
            if j is None:
                raise GraphError("connection element outside the generated group")
            edges.append((i, j))
    return Graph(len(elements), edges)


# -- text format ---------------------------------------------------------------

def format_graph(g: Graph, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(line.split())
    if not rows:
        raise GraphError("empty graph file")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in r) for r in rows[1:]]
    except ValueError as exc:
        raise GraphError(f"non-integer token: {exc}") from None
    if len(header) != 2:
        raise GraphError("header must be 'n m'")
    n, m = header
    if any(len(r) != 2 for r in body):
        raise GraphError("edge lines must hold exactly two vertices")
    if len(body) != m:
        raise GraphError(f"header declares {m} edges, found {len(body)}")
    g = Graph(n, body)
    if g.m != m:
        raise GraphError("duplicate edges in file")
    return g


def read_graph(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph(g: Graph, path, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_graph(g, comments))
