"""Exact longest-cycle search and enumeration of all longest cycles.

Cycles are searched rooted at their minimum vertex ``s``: the path starts at
``s`` and only uses vertices larger than ``s``.  A cycle is emitted in
canonical orientation only (second vertex smaller than last), so every cycle
is found exactly once.  A branch is cut when the current path length plus
the number of vertices still reachable from its head cannot beat the target,
or when no neighbor of ``s`` usable for closing the cycle remains reachable.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from .errors import GraphError, NoCycle, SolverTimeout
from .graph_core import Graph

DEFAULT_CYCLE_CAP = 100_000
BRUTE_FORCE_LIMIT = 10


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Least rotation/reflection of ``seq`` that starts at its minimum vertex."""
    seq = list(seq)
    i = seq.index(min(seq))
    fwd = seq[i:] + seq[:i]
    bwd = [fwd[0]] + fwd[1:][::-1]
    return tuple(min(fwd, bwd))


def validate_cycle(g: Graph, cyc: Sequence[int]) -> None:
    if len(cyc) < 3:
        raise GraphError("a cycle has at least 3 vertices")
    if len(set(cyc)) != len(cyc):
        raise GraphError(f"repeated vertex in cycle {cyc}")
    for i, u in enumerate(cyc):
        v = cyc[(i + 1) % len(cyc)]
        if v not in g.adj[u]:
            raise GraphError(f"cycle uses non-edge ({u}, {v})")


def format_cycles(cycles) -> str:
    return "".join(" ".join(map(str, c)) + "\n" for c in cycles)


@dataclass
class SearchStats:
    nodes: int = 0
    elapsed: float = 0.0


@dataclass
class LongestCycleResult:
    """All longest cycles of a graph, or a capped prefix of them.

    When ``complete`` is False, ``cycles`` holds the first ``cap`` cycles in
    search order and ``found`` the number seen before stopping.
    """

    circumference: int
    cycles: list[tuple[int, ...]]
    complete: bool = True
    found: int = 0
    cap: int = DEFAULT_CYCLE_CAP
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def count(self) -> int | None:
        return len(self.cycles) if self.complete else None


class _Search:
    """Shared DFS machinery; one instance per query."""

    def __init__(self, g: Graph, time_limit: float | None):
        self.g = g
        self.masks = g.neighbor_masks()
        self.nbrs = [g.neighbors(v) for v in range(g.n)]
        self.deadline = None if time_limit is None else time.perf_counter() + time_limit
        self.stats = SearchStats()
        self._t0 = time.perf_counter()

    def tick(self):
        self.stats.nodes += 1
        if self.deadline is not None and not self.stats.nodes & 0x3FF:
            if time.perf_counter() > self.deadline:
                raise SolverTimeout(f"time limit hit after {self.stats.nodes} nodes")

    def reach(self, w: int, avail: int) -> int:
        masks = self.masks
        seen = frontier = 1 << w
        while frontier:
            nb = 0
            while frontier:
                low = frontier & -frontier
                nb |= masks[low.bit_length() - 1]
                frontier ^= low
            frontier = nb & avail & ~seen
            seen |= frontier
        return seen

    def run(self, s: int, target: int, exact: bool, on_cycle):
        """DFS over paths rooted at s.

        ``exact`` False: report cycles longer than ``target`` (target may
        grow through on_cycle's return value).  ``exact`` True: report
        cycles of length exactly ``target``.
        """
        n = self.g.n
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        smask = self.masks[s] & allowed
        path = [s]
        state = {"target": target}

        def rec(head: int, used: int, close_mask: int):
            self.tick()
            depth = len(path)
            tgt = state["target"]
            avail = allowed & ~used
            for w in self.nbrs[head]:
                if not (avail >> w) & 1:
                    continue
                if depth == 1:
                    cm = smask & ~((1 << (w + 1)) - 1)
                else:
                    cm = close_mask
                if not cm:
                    continue
                r = self.reach(w, avail)
                if not r & cm:
                    continue
                bound = depth + r.bit_count()
                if exact:
                    if bound < tgt:
                        continue
                elif bound <= tgt:
                    continue
                path.append(w)
                closes = depth >= 2 and (cm >> w) & 1
                if closes:
                    length = depth + 1
                    if (exact and length == tgt) or (not exact and length > tgt):
                        new = on_cycle(path)
                        if new is not None:
                            state["target"] = tgt = new
                if not (exact and depth + 1 >= tgt):
                    rec(w, used | (1 << w), cm)
                    tgt = state["target"]
                path.pop()

        rec(s, 1 << s, 0)


def _require_cycle(g: Graph):
    if g.n < 3 or g.m < g.n - _components(g) + 1:
        raise NoCycle("graph is a forest")


def _components(g: Graph) -> int:
    seen = set()
    count = 0
    for v in range(g.n):
        if v in seen:
            continue
        count += 1
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def circumference(g: Graph, time_limit: float | None = None,
                  return_stats: bool = False):
    """Length of a longest cycle and the lexicographically least such cycle.

    Returns ``(t, witness)``, or ``(t, witness, stats)`` with return_stats.
    """
    _require_cycle(g)
    search = _Search(g, time_limit)
    best = {"t": 2, "cycle": None}

    def on_cycle(path):
        best["t"] = len(path)
        best["cycle"] = tuple(path)
        return len(path)

    for s in range(g.n):
        if g.n - s <= best["t"]:
            break
        search.run(s, best["t"], False, on_cycle)
    search.stats.elapsed = time.perf_counter() - search._t0
    out = (best["t"], best["cycle"])
    return out + (search.stats,) if return_stats else out


class _Stop(Exception):
    pass


def enumerate_longest_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP,
                             time_limit: float | None = None,
                             t: int | None = None) -> LongestCycleResult:
    """All cycles of maximum length, canonical and sorted.

    ``t`` may be passed when the circumference is already known.
    """
    if t is None:
        t, _ = circumference(g, time_limit=time_limit)
    else:
        _require_cycle(g)
    search = _Search(g, time_limit)
    found: list[tuple[int, ...]] = []
    complete = True
    counter = {"n": 0}

    def on_cycle(path):
        counter["n"] += 1
        if counter["n"] > cap:
            raise _Stop
        found.append(tuple(path))

    try:
        for s in range(g.n - t + 1):
            search.run(s, t, True, on_cycle)
    except _Stop:
        complete = False
    search.stats.elapsed = time.perf_counter() - search._t0
    cycles = sorted(found) if complete else found
    return LongestCycleResult(t, cycles, complete, counter["n"] if complete else cap + 1,
                              cap, search.stats)


@dataclass
class MinIntersection:
    k: int
    pair: tuple[tuple[int, ...], tuple[int, ...]]
    degenerate: bool


def min_pairwise_intersection(r: LongestCycleResult) -> MinIntersection:
    """Minimum |V(C1) & V(C2)| over pairs of distinct longest cycles.

    With a single longest cycle the minimum is taken to be t itself and the
    result is flagged degenerate.
    """
    if not r.complete:
        raise ValueError("longest-cycle enumeration hit its cap; k unavailable")
    cycles = r.cycles
    if not cycles:
        raise ValueError("no cycles")
    if len(cycles) == 1:
        return MinIntersection(r.circumference, (cycles[0], cycles[0]), True)
    n = max(max(c) for c in cycles) + 1
    mat = np.zeros((len(cycles), n), dtype=np.int32)
    for i, c in enumerate(cycles):
        mat[i, list(c)] = 1
    best_k, best_pair = None, None
    chunk = max(1, 4_000_000 // len(cycles))
    for lo in range(0, len(cycles), chunk):
        hi = min(len(cycles), lo + chunk)
        block = mat[lo:hi] @ mat.T
        rows = np.arange(hi - lo)
        # only pairs (i, j) with i < j
        mask = np.arange(len(cycles))[None, :] <= (rows + lo)[:, None]
        block[mask] = np.iinfo(np.int32).max
        kmin = int(block.min())
        if best_k is None or kmin < best_k:
            i, j = np.argwhere(block == kmin)[0]
            best_k, best_pair = kmin, (int(i) + lo, int(j))
    i, j = best_pair
    return MinIntersection(best_k, (cycles[i], cycles[j]), False)


def all_simple_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every simple cycle once, by unpruned DFS (small graphs only)."""
    out = []
    adj = [sorted(a) for a in g.adj]
    for s in range(g.n):
        path = [s]
        on_path = [False] * g.n
        on_path[s] = True

        def rec(u):
            for w in adj[u]:
                if w == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif w > s and not on_path[w]:
                    on_path[w] = True
                    path.append(w)
                    rec(w)
                    path.pop()
                    on_path[w] = False

        rec(s)
    return out


def brute_force_circumference(g: Graph) -> int:
    """Oracle: the longest of all simple cycles, no pruning (n <= 10)."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force oracle limited to n <= {BRUTE_FORCE_LIMIT}")
    cycles = all_simple_cycles(g)
    if not cycles:
        raise NoCycle("graph is a forest")
    return max(len(c) for c in cycles)


def unpruned_longest_cycles(g: Graph, t: int) -> int:
    """Count cycles of length t with the depth-limited DFS but no reach bound.

    Used as a slower cross-check of the pruned solver on mid-sized graphs.
    """
    adj = [sorted(a) for a in g.adj]
    total = 0
    for s in range(g.n - t + 1):
        on_path = [False] * g.n
        on_path[s] = True
        stack_path = [s]

        def rec(u):
            nonlocal total
            for w in adj[u]:
                if w == s:
                    if len(stack_path) == t and stack_path[1] < stack_path[-1]:
                        total += 1
                elif w > s and not on_path[w] and len(stack_path) < t:
                    on_path[w] = True
                    stack_path.append(w)
                    rec(w)
                    stack_path.pop()
                    on_path[w] = False

        rec(s)
    return total


def has_cycle_longer_than(g: Graph, length: int) -> bool:
    """True if some cycle has more than ``length`` vertices (no reach bound)."""
    adj = [sorted(a) for a in g.adj]
    for s in range(g.n):
        on_path = [False] * g.n
        on_path[s] = True
        path = [s]

        def rec(u):
            for w in adj[u]:
                if w == s and len(path) > length and len(path) >= 3:
                    return True
                if w > s and not on_path[w]:
                    on_path[w] = True
                    path.append(w)
                    if rec(w):
                        return True
                    path.pop()
                    on_path[w] = False
            return False

        if rec(s):
            return True
    return False


def cycle_intersections(cycles) -> list[int]:
    """Sizes |V(C1) & V(C2)| for all unordered pairs, plain Python."""
    sets = [set(c) for c in cycles]
    return [len(a & b) for a, b in combinations(sets, 2)]
