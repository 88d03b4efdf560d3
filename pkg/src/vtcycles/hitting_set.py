"""Small vertex sets meeting every longest cycle, built from two longest cycles.

Given longest cycles C1, C2 meeting in k vertices, delete the intersection
and separate the two cycle remainders with a minimum vertex cut B0.  If the
remainders were joined by more than k*k disjoint paths, two of them would
run between the same arc of C1 and the same arc of C2, and rerouting both
cycles through those paths makes the two cycles longer in total; that
surgery is implemented here too, so a solver that returned non-longest
cycles gets caught with an explicit certificate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from .connectivity import PathSystem, max_disjoint_paths, min_vertex_separator
from .cycle_solver import LongestCycleResult, canonical_cycle, min_pairwise_intersection, validate_cycle
from .graph_core import Graph, reachable

log = logging.getLogger(__name__)


class IncompleteEnumeration(ValueError):
    """The longest-cycle list is capped, so no hitting claim can be certified."""


class ExchangeFound(RuntimeError):
    """More than k^2 connecting paths: the input cycles were not longest."""

    def __init__(self, certificate):
        super().__init__(f"cycle exchange gains {certificate.gain} vertices")
        self.certificate = certificate


def cycle_minus_components(C, W) -> tuple[list[tuple[int, ...]], bool]:
    """Maximal arcs of cycle ``C`` avoiding the vertex set ``W``.

    Returns ``(segments, whole)``; ``whole`` is True when C misses W entirely
    and the single "segment" is the full cycle.  Segments follow the cycle's
    orientation and are sorted by their minimum vertex.
    """
    C, W = list(C), set(W)
    if not W & set(C):
        return [tuple(C)], True
    start = next(i for i, v in enumerate(C) if v in W)
    rotated = C[start:] + C[:start]
    segs, cur = [], []
    for v in rotated:
        if v in W:
            if cur:
                segs.append(tuple(cur))
            cur = []
        else:
            cur.append(v)
    if cur:
        segs.append(tuple(cur))
    segs.sort(key=min)
    return segs, False


def _arc(cyc, i, j):
    """Vertices of cyclic sequence ``cyc`` from position i forward to j, inclusive."""
    n = len(cyc)
    out = [cyc[i]]
    while i != j:
        i = (i + 1) % n
        out.append(cyc[i])
    return out


def _split_at(cyc, a, b, inside):
    """(arc a->b whose interior lies in ``inside``, complementary arc b->a)."""
    i, j = cyc.index(a), cyc.index(b)
    fwd, back = _arc(cyc, i, j), _arc(cyc, j, i)
    if set(fwd) <= inside:
        return fwd, back
    return back[::-1], fwd[::-1]


@dataclass
class ExchangeCertificate:
    P: tuple
    P_prime: tuple
    H1: tuple
    H2: tuple
    C1: tuple
    C2: tuple
    C1_new: tuple
    C2_new: tuple

    @property
    def gain(self) -> int:
        return len(self.C1_new) + len(self.C2_new) - len(self.C1) - len(self.C2)

    @property
    def gain_internal_count(self) -> int:
        """2|V(P)| + 2|V(P')| counting only internal path vertices."""
        return 2 * (len(self.P) - 2) + 2 * (len(self.P_prime) - 2)

    @property
    def gain_full_count(self) -> int:
        """2|V(P)| + 2|V(P')| counting path endpoints too."""
        return 2 * len(self.P) + 2 * len(self.P_prime)

    def as_dict(self) -> dict:
        return {"P": list(self.P), "P_prime": list(self.P_prime),
                "H1": list(self.H1), "H2": list(self.H2),
                "C1": list(self.C1), "C2": list(self.C2),
                "C1_new": list(self.C1_new), "C2_new": list(self.C2_new),
                "gain": self.gain, "gain_internal_count": self.gain_internal_count,
                "gain_full_count": self.gain_full_count}


def find_exchange(g: Graph, C1, C2, paths: PathSystem) -> ExchangeCertificate | None:
    C1, C2 = list(C1), list(C2)
    V1, V2 = set(C1), set(C2)
    only1, only2 = V1 - V2, V2 - V1
    plist = [tuple(p) for p in paths.paths]
    used = set()
    for p in plist:
        if len(p) < 2 or p[0] not in only1 or p[-1] not in only2:
            raise ValueError(f"path {p} does not run from C1 - C2 to C2 - C1")
        if set(p[1:-1]) & (V1 | V2):
            raise ValueError(f"path {p} touches a cycle internally")
        if set(p) & used:
            raise ValueError("paths are not vertex-disjoint")
        used |= set(p)
        for u, v in zip(p, p[1:]):
            if v not in g.adj[u]:
                raise ValueError(f"path {p} uses non-edge ({u}, {v})")
    if len(plist) < 2:
        return None
    segs1, _ = cycle_minus_components(C1, V2)
    segs2, _ = cycle_minus_components(C2, V1)
    seg_of1 = {v: i for i, s in enumerate(segs1) for v in s}
    seg_of2 = {v: i for i, s in enumerate(segs2) for v in s}
    first: dict[tuple[int, int], tuple] = {}
    pair = None
    for p in plist:
        key = (seg_of1[p[0]], seg_of2[p[-1]])
        if key in first:
            pair = (first[key], p, key)
            break
        first[key] = p
    if pair is None:
        return None
    P, Q, (h1, h2) = pair
    H1, H2 = segs1[h1], segs2[h2]
    a, b, a2, b2 = P[0], P[-1], Q[0], Q[-1]
    arc1, rest1 = _split_at(C1, a, a2, set(H1))
    arc2, rest2 = _split_at(C2, b, b2, set(H2))
    P_in, Q_in = list(P[1:-1]), list(Q[1:-1])
    # rest1 runs a2 -> a, arc2 runs b -> b2; symmetric for the second cycle
    new1 = rest1 + P_in + arc2 + Q_in[::-1]
    new2 = rest2 + P_in[::-1] + arc1 + Q_in
    validate_cycle(g, new1)
    validate_cycle(g, new2)
    cert = ExchangeCertificate(P, Q, tuple(H1), tuple(H2), tuple(C1), tuple(C2),
                               canonical_cycle(new1), canonical_cycle(new2))
    if cert.gain <= 0:
        raise AssertionError("exchange did not lengthen the cycles")
    log.debug("exchange gain %d (internal-count %d, full-count %d)",
              cert.gain, cert.gain_internal_count, cert.gain_full_count)
    return cert


@dataclass
class HittingSetCertificate:
    C1: tuple
    C2: tuple
    k: int
    B0: frozenset
    B: frozenset
    witnesses: list = field(default_factory=list)
    degenerate: bool = False
    paths: int = 0
    separates: bool = True

    @property
    def hits_all(self) -> bool:
        return all(w is not None for w in self.witnesses)

    @property
    def size_ok(self) -> bool:
        return len(self.B) <= self.k * self.k + self.k

    def as_dict(self) -> dict:
        return {"C1": list(self.C1), "C2": list(self.C2), "k": self.k,
                "B0": sorted(self.B0), "B": sorted(self.B), "size": len(self.B),
                "size_bound_k2_plus_k": self.k * self.k + self.k,
                "size_ok": self.size_ok, "connecting_paths": self.paths,
                "separates": self.separates, "hits_all": self.hits_all,
                "degenerate": self.degenerate}


def separates_sets(g: Graph, B, X, Y) -> bool:
    """True if no vertex of X - B reaches a vertex of Y - B in g - B."""
    B = set(B)
    allowed = set(range(g.n)) - B
    targets = set(Y) - B
    for x in sorted(set(X) - B):
        if reachable(g, x, allowed) & targets:
            return False
    return True


def construct_hitting_set(g: Graph, r: LongestCycleResult) -> HittingSetCertificate:
    if not r.complete:
        raise IncompleteEnumeration("longest-cycle list is capped")
    mi = min_pairwise_intersection(r)
    C1, C2 = mi.pair
    if mi.degenerate:
        B = frozenset(C1)
        cert = HittingSetCertificate(C1, C2, mi.k, frozenset(), B, degenerate=True)
    else:
        inter = set(C1) & set(C2)
        only1, only2 = set(C1) - inter, set(C2) - inter
        B0 = frozenset()
        npaths = 0
        if only1 and only2:
            reduced = g.induced_without(inter)
            ps = max_disjoint_paths(reduced, only1, only2, share_endpoints=False)
            npaths = len(ps)
            if npaths > mi.k ** 2:
                raise ExchangeFound(find_exchange(g, C1, C2, ps))
            sep = min_vertex_separator(reduced, only1, only2, share_endpoints=False)
            B0 = sep.vertices
        B = frozenset(B0 | inter)
        cert = HittingSetCertificate(C1, C2, mi.k, B0, B, paths=npaths,
                                     separates=separates_sets(g, B, C1, C2))
    for c in r.cycles:
        hit = set(c) & cert.B
        cert.witnesses.append(min(hit) if hit else None)
    return cert
