"""Vertex-disjoint path systems, minimum vertex separators, k-connectivity.

Everything runs on the split graph: vertex v becomes an arc v_in -> v_out of
capacity 1, graph edges become uncapacitated arcs u_out -> v_in in both
directions, a super source feeds every S vertex and every T vertex drains
into a super sink.  Augmenting paths are found by BFS with neighbors scanned
in ascending order, so results are deterministic.

Two disjointness regimes are supported.  With ``share_endpoints`` False the
paths are pairwise vertex-disjoint including their ends (Menger's theorem
for sets).  With ``share_endpoints`` True the S and T vertices are
uncapacitated and paths need only be internally disjoint (Menger's theorem
for a vertex pair); a direct S-T edge then carries one unit and a separator
must use one of its ends.  The default picks the pair regime when S and T
are both singletons and the set regime otherwise.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .graph_core import Graph, reachable

INF = float("inf")


@dataclass
class PathSystem:
    paths: list[tuple[int, ...]]
    sources: frozenset
    targets: frozenset
    share_endpoints: bool = False

    def __len__(self):
        return len(self.paths)

    def validate(self, g: Graph) -> None:
        seen_internal: set[int] = set()
        seen_ends: set[int] = set()
        for p in self.paths:
            if p[0] not in self.sources or p[-1] not in self.targets:
                raise ValueError(f"path {p} has wrong endpoints")
            if len(set(p)) != len(p):
                raise ValueError(f"path {p} repeats a vertex")
            for u, v in zip(p, p[1:]):
                if v not in g.adj[u]:
                    raise ValueError(f"path {p} uses non-edge ({u}, {v})")
            inner = set(p[1:-1])
            if inner & (self.sources | self.targets):
                raise ValueError(f"path {p} passes through S or T")
            if inner & (seen_internal | seen_ends):
                raise ValueError("paths share an internal vertex")
            ends = {p[0], p[-1]}
            if ends & seen_internal:
                raise ValueError("an endpoint lies inside another path")
            if not self.share_endpoints and ends & seen_ends:
                raise ValueError("paths share an endpoint")
            seen_internal |= inner
            seen_ends |= ends


@dataclass
class Separator:
    """Vertices whose removal leaves no S-T path.

    ``cut_edges`` lists direct S-T edges that no internal vertex can block;
    for each, its S end is included in ``vertices`` and ``uses_endpoints``
    is set.  ``size`` counts one unit per internal vertex and per cut edge
    and equals the maximum number of disjoint paths.
    """

    vertices: frozenset
    sources: frozenset
    targets: frozenset
    cut_edges: list = field(default_factory=list)
    uses_endpoints: bool = False

    @property
    def size(self) -> int:
        internal = self.vertices - {s for s, _ in self.cut_edges}
        return len(internal) + len(self.cut_edges)

    def separates(self, g: Graph) -> bool:
        """BFS check: no S vertex reaches a T vertex once ``vertices`` is removed."""
        allowed = set(range(g.n)) - self.vertices
        for s in sorted(self.sources - self.vertices):
            if reachable(g, s, allowed) & (self.targets - self.vertices):
                return False
        return True


class _Flow:
    def __init__(self, g: Graph, S: frozenset, T: frozenset, share: bool):
        n = g.n
        self.n = n
        self.src, self.snk = 2 * n, 2 * n + 1
        self.cap: dict[int, dict[int, float]] = {x: {} for x in range(2 * n + 2)}
        ends = S | T
        for v in range(n):
            self._arc(2 * v, 2 * v + 1, INF if share and v in ends else 1)
        for u, v in g.edges:
            for a, b in ((u, v), (v, u)):
                direct = share and a in S and b in T
                self._arc(2 * a + 1, 2 * b, 1 if direct else INF)
        for s in S:
            self._arc(self.src, 2 * s, INF)
        for t in T:
            self._arc(2 * t + 1, self.snk, INF)
        self.order = {x: sorted(self.cap[x]) for x in self.cap}
        self.flow: dict[tuple[int, int], float] = {}
        self.value = 0

    def _arc(self, a, b, c):
        self.cap[a][b] = self.cap[a].get(b, 0) + c
        self.cap[b].setdefault(a, 0)

    def _bfs(self):
        parent = {self.src: None}
        queue = deque([self.src])
        while queue:
            x = queue.popleft()
            for y in self.order[x]:
                if y not in parent and self.cap[x][y] > 0:
                    parent[y] = x
                    if y == self.snk:
                        return parent
                    queue.append(y)
        return parent

    def run(self, limit=None):
        while limit is None or self.value < limit:
            parent = self._bfs()
            if self.snk not in parent:
                return parent
            y = self.snk
            while parent[y] is not None:
                x = parent[y]
                self.cap[x][y] -= 1
                self.cap[y][x] += 1
                self.flow[(x, y)] = self.flow.get((x, y), 0) + 1
                self.flow[(y, x)] = self.flow.get((y, x), 0) - 1
                y = x
            self.value += 1
        return None

    def residual_reachable(self):
        return set(self._bfs())

    def walks(self):
        """Decompose the flow into source-sink walks, dropping circulations."""
        flow = {a: f for a, f in self.flow.items() if f > 0}
        out_arcs: dict[int, list[int]] = {}
        for (x, y) in sorted(flow):
            out_arcs.setdefault(x, []).append(y)

        def take(x):
            for y in out_arcs.get(x, []):
                if flow.get((x, y), 0) > 0:
                    return y
            return None

        result = []
        while True:
            walk = [self.src]
            if take(self.src) is None:
                return result
            while walk[-1] != self.snk:
                x = walk[-1]
                y = take(x)
                if y in walk:
                    i = walk.index(y)
                    for a, b in zip(walk[i:], walk[i + 1:] + [y]):
                        flow[(a, b)] -= 1
                    del walk[i + 1:]
                    continue
                walk.append(y)
            for a, b in zip(walk, walk[1:]):
                flow[(a, b)] -= 1
            result.append(walk)


def _trim(path: list[int], S, T) -> tuple[int, ...]:
    """Shortest S-to-T stretch: from the last S vertex before the first T vertex."""
    first_t = next(i for i, v in enumerate(path) if v in T)
    last_s = max(i for i, v in enumerate(path[:first_t + 1]) if v in S)
    return tuple(path[last_s:first_t + 1])


def _resolve(S, T, share):
    S, T = frozenset(S), frozenset(T)
    if not S or not T:
        raise ValueError("S and T must be nonempty")
    if S & T:
        raise ValueError("S and T must be disjoint")
    if share is None:
        share = len(S) == 1 and len(T) == 1
    return S, T, share


def max_disjoint_paths(g: Graph, S: Iterable[int], T: Iterable[int],
                       share_endpoints: bool | None = None,
                       limit: int | None = None) -> PathSystem:
    S, T, share = _resolve(S, T, share_endpoints)
    fl = _Flow(g, S, T, share)
    fl.run(limit)
    paths = []
    for walk in fl.walks():
        verts = []
        for x in walk[1:-1]:
            v = x // 2
            if not verts or verts[-1] != v:
                verts.append(v)
        paths.append(_trim(verts, S, T))
    paths.sort()
    return PathSystem(paths, S, T, share)


def min_vertex_separator(g: Graph, S: Iterable[int], T: Iterable[int],
                         share_endpoints: bool | None = None) -> Separator:
    """Minimum separator read off the residual graph of a maximum flow.

    A vertex is cut when its in-copy is residual-reachable from the source
    and its out-copy is not; this is the cut closest to S.
    """
    S, T, share = _resolve(S, T, share_endpoints)
    fl = _Flow(g, S, T, share)
    fl.run()
    reach = fl.residual_reachable()
    cut = {v for v in range(g.n) if 2 * v in reach and 2 * v + 1 not in reach}
    cut_edges = []
    if share:
        for u, v in g.edges:
            for a, b in ((u, v), (v, u)):
                if a in S and b in T and 2 * a + 1 in reach and 2 * b not in reach:
                    cut_edges.append((a, b))
    cut_edges.sort()
    verts = frozenset(cut | {a for a, _ in cut_edges})
    return Separator(verts, S, T, cut_edges, bool(cut_edges) or bool(cut & (S | T)))


def local_connectivity(g: Graph, u: int, v: int, limit: int | None = None) -> int:
    """Maximum number of internally disjoint u-v paths (u, v nonadjacent)."""
    fl = _Flow(g, frozenset([u]), frozenset([v]), True)
    fl.run(limit)
    return fl.value


def is_k_connected(g: Graph, k: int) -> bool:
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n <= k:
        return False
    for u, v in combinations(range(g.n), 2):
        if v not in g.adj[u] and local_connectivity(g, u, v, limit=k) < k:
            return False
    return True


def vertex_connectivity(g: Graph, cap: int | None = None) -> int:
    """Exact vertex connectivity, or min(kappa, cap) when ``cap`` is given."""
    best = g.n - 1 if cap is None else min(g.n - 1, cap)
    for u, v in combinations(range(g.n), 2):
        if v not in g.adj[u]:
            best = min(best, local_connectivity(g, u, v, limit=best))
            if best == 0:
                break
    return best


def brute_force_connectivity(g: Graph, limit: int = 16) -> int:
    """Oracle: smallest vertex subset whose removal disconnects (or n-1)."""
    if g.n > limit:
        raise ValueError(f"connectivity oracle limited to n <= {limit}")
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            rest = set(range(g.n)) - set(cut)
            if len(reachable(g, min(rest), rest)) < len(rest):
                return size
    return g.n - 1
