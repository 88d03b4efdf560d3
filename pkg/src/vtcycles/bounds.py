"""Circumference lower bounds and the per-graph analysis pipeline.

All bound checks compare integers: t >= sqrt(3n) is checked as t*t >= 3n,
t >= sqrt(kn) as t*t >= k*n and t >= n/(k^2+k) as t*(k^2+k) >= n.
Floating renderings in reports are for reading only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .config import Config
from .connectivity import is_k_connected, vertex_connectivity
from .counting_lemma import double_count_S, verify_counting_lemma
from .cycle_solver import circumference, enumerate_longest_cycles, min_pairwise_intersection
from .errors import CapExceeded, GraphError, GroupError, NoCycle, SolverTimeout
from .graph_core import Graph, is_connected
from .group_action import GroupAction, automorphism_generators, is_vertex_transitive
from .hitting_set import ExchangeFound, construct_hitting_set

NA = "not applicable"
UNAVAILABLE = "unavailable"


def rat(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _display(x: float) -> str:
    return f"{x:.3f}"


@dataclass(frozen=True)
class BabaiVerdict:
    n: int
    t: int

    @property
    def holds(self) -> bool:
        return self.t * self.t >= 3 * self.n

    @property
    def equality(self) -> bool:
        return self.t * self.t == 3 * self.n


def babai_bound_check(n: int, t: int) -> BabaiVerdict:
    if n < 3:
        raise ValueError("n must be >= 3")
    return BabaiVerdict(n, t)


@dataclass(frozen=True)
class CombinedVerdict:
    n: int
    k: int
    t: int

    @property
    def sqrt_side(self) -> bool:
        return self.t * self.t >= self.k * self.n

    @property
    def quotient_side(self) -> bool:
        return self.t * (self.k * self.k + self.k) >= self.n

    @property
    def holds(self) -> bool:
        return self.sqrt_side and self.quotient_side

    @property
    def binding(self) -> str:
        """Which side gives the larger bound; compares k*n*(k^2+k)^2 with n^2."""
        lhs = self.k * self.n * (self.k * self.k + self.k) ** 2
        rhs = self.n * self.n
        if lhs > rhs:
            return "sqrt_kn"
        if lhs < rhs:
            return "n_over_k2_plus_k"
        return "equal"


def combined_bound_check(n: int, k: int, t: int) -> CombinedVerdict:
    if n < 3 or k < 1:
        raise ValueError("need n >= 3 and k >= 1")
    return CombinedVerdict(n, k, t)


def crossover_n(k: int) -> int:
    """Order at which sqrt(kn) and n/(k^2+k) coincide: k^3 (k+1)^2."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return k**5 + 2 * k**4 + k**3


@dataclass
class BoundReport:
    """Everything ``analyze`` learned about one graph.

    Satisfaction flags are derived from the stored integers on demand.
    """

    n: int
    m: int
    transitive: bool | None = None
    group_label: str | None = None
    group_order: int | None = None
    connectivity: int | None = None
    two_connected: bool | None = None
    three_connected: bool | None = None
    is_cycle: bool = False
    t: int | None = None
    witness: tuple | None = None
    longest_count: int | None = None
    k: int | None = None
    k_degenerate: bool = False
    k_pair: tuple | None = None
    hitting_set: dict | None = None
    lemma2: list = field(default_factory=list)
    caps_hit: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    search_nodes: int = 0

    @property
    def applicable(self) -> bool:
        return bool(self.transitive)

    def _flag(self, value):
        if not self.applicable:
            return NA
        return UNAVAILABLE if value is None else value

    def satisfied(self) -> dict:
        babai = combined = None
        if self.t is not None:
            babai = babai_bound_check(self.n, self.t)
            if self.k is not None and self.k >= 1:
                combined = combined_bound_check(self.n, self.k, self.t)
        return {
            "babai": self._flag(babai and babai.holds),
            "babai_equality": self._flag(babai and babai.equality),
            "sqrt_kn": self._flag(combined and combined.sqrt_side),
            "n_over_k2_plus_k": self._flag(combined and combined.quotient_side),
            "combined": self._flag(combined and combined.holds),
            "binding": combined.binding if combined else None,
        }

    def bounds(self) -> dict:
        out = {"babai_sq3n": {"square": 3 * self.n,
                              "display": _display(math.sqrt(3 * self.n))},
               "sqrt_kn": None, "n_over_k2_plus_k": None}
        if self.k is not None and self.k >= 1:
            kn = self.k * self.n
            q = Fraction(self.n, self.k * self.k + self.k)
            out["sqrt_kn"] = {"square": kn, "display": _display(math.sqrt(kn))}
            out["n_over_k2_plus_k"] = {"value": rat(q), "display": _display(float(q))}
        return out

    def failures(self) -> list[str]:
        bad = [name for name, v in self.satisfied().items()
               if name not in ("binding", "babai_equality") and v is False]
        bad += [name for name, v in self.checks.items() if v is False]
        bad += [c["name"] for c in self.lemma2 if c.get("holds") is False]
        return bad

    def exit_code(self) -> int:
        if self.failures():
            return 4
        if self.caps_hit:
            return 3
        return 0

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "transitive": self.transitive,
            "group": self.group_label,
            "group_order": self.group_order,
            "connectivity": self.connectivity,
            "two_connected": self.two_connected,
            "three_connected": self.three_connected,
            "is_cycle": self.is_cycle,
            "circumference": self.t,
            "witness_cycle": list(self.witness) if self.witness else None,
            "hamiltonian": None if self.t is None else self.t == self.n,
            "longest_cycle_count": self.longest_count,
            "k_min_intersection": self.k,
            "k_degenerate": self.k_degenerate,
            "k_pair": [list(c) for c in self.k_pair] if self.k_pair else None,
            "hitting_set": self.hitting_set,
            "hitting_set_size": self.hitting_set["size"] if self.hitting_set else None,
            "bounds": self.bounds(),
            "satisfied": self.satisfied(),
            "ratio_t_over_n": rat(Fraction(self.t, self.n)) if self.t else None,
            "lemma2_checks": self.lemma2,
            "checks": self.checks,
            "caps_hit": self.caps_hit,
            "failures": self.failures(),
            "notes": self.notes,
            "search_nodes": self.search_nodes,
        }


def _lemma2_entry(name, a, g, B, C, cap, expect_k=None):
    verdict = verify_counting_lemma(a, g, B, C, cap)
    dc = double_count_S(a, B, C, cap)
    entry = {"name": name, "B": sorted(B), "C": sorted(C)}
    entry.update(verdict.as_dict())
    entry.update(dc.as_dict())
    ok = verdict.holds and dc.ok
    if expect_k is not None:
        entry["k_min_at_least"] = expect_k
        ok = ok and verdict.k_min >= expect_k
    entry["holds"] = ok
    return entry


def analyze(g: Graph, a: GroupAction | None = None, config: Config | None = None) -> BoundReport:
    """Run the full circumference / hitting-set / bound pipeline on one graph."""
    cfg = config or Config()
    if g.n < 3:
        raise GraphError("analysis needs n >= 3")
    if not is_connected(g):
        raise GraphError("analysis needs a connected graph")
    rep = BoundReport(g.n, g.m)

    # group and transitivity
    if a is not None:
        rep.group_label = a.label or "supplied generators"
        check = is_vertex_transitive(g, a)
        rep.transitive = check.transitive
        if not check:
            rep.notes.append(f"supplied action not transitive by automorphisms: {check}")
    elif g.n <= cfg.aut_limit:
        a = automorphism_generators(g, cfg.aut_limit)
        rep.group_label = a.label
        rep.transitive = is_vertex_transitive(g, a).transitive
    else:
        rep.notes.append("transitivity unknown: no group supplied and n over automorphism search limit")
    if a is not None and rep.transitive:
        try:
            rep.group_order = a.order(cfg.cap_group)
        except CapExceeded:
            rep.caps_hit.append("group")

    # connectivity
    rep.is_cycle = g.is_regular(2)
    rep.connectivity = vertex_connectivity(g) if g.n <= 60 else vertex_connectivity(g, cap=3)
    rep.two_connected = is_k_connected(g, 2)
    rep.three_connected = is_k_connected(g, 3)
    if rep.transitive:
        rep.checks["transitive_implies_2_connected"] = rep.two_connected
        if rep.is_cycle:
            rep.notes.append("cycle graph: handled directly, 3-connectivity not expected")
            rep.checks["mader_watkins_3_connected"] = NA
        else:
            rep.checks["mader_watkins_3_connected"] = rep.three_connected

    # longest cycles
    try:
        rep.t, rep.witness, stats = circumference(g, cfg.time_limit, return_stats=True)
        rep.search_nodes += stats.nodes
    except NoCycle:
        rep.notes.append("graph is a forest: no cycle")
        return rep
    except SolverTimeout:
        rep.caps_hit.append("time_limit")
        return rep
    try:
        res = enumerate_longest_cycles(g, cfg.cap_cycles, cfg.time_limit, t=rep.t)
        rep.search_nodes += res.stats.nodes
    except SolverTimeout:
        rep.caps_hit.append("time_limit")
        res = None
    if res is not None and not res.complete:
        rep.caps_hit.append("cycles")
        rep.notes.append(f"more than {cfg.cap_cycles} longest cycles; k unavailable")
    elif res is not None:
        rep.longest_count = len(res.cycles)
        mi = min_pairwise_intersection(res)
        rep.k, rep.k_degenerate, rep.k_pair = mi.k, mi.degenerate, mi.pair
        if mi.degenerate:
            rep.notes.append("unique longest cycle: k taken as t")
        if rep.two_connected:
            rep.checks["longest_cycles_intersect"] = mi.k >= 1
            try:
                cert = construct_hitting_set(g, res)
                rep.hitting_set = cert.as_dict()
                rep.checks["hitting_set_size"] = cert.size_ok
                rep.checks["hitting_set_hits_all"] = cert.hits_all
                rep.checks["hitting_set_separates"] = cert.separates
            except ExchangeFound as exc:
                rep.checks["no_exchange"] = False
                rep.notes.append("exchange certificate: " + str(exc.certificate.as_dict()))
        if rep.three_connected and not mi.degenerate:
            rep.checks["three_connected_intersection_ge_3"] = mi.k >= 3

    # counting lemma on explicit group elements
    if a is not None and rep.transitive and "group" not in rep.caps_hit:
        C = set(rep.witness)
        try:
            rep.lemma2.append(_lemma2_entry("B=C=longest cycle", a, g, C, C,
                                            cfg.cap_group, rep.k))
            if rep.hitting_set is not None:
                B = set(rep.hitting_set["B"])
                rep.lemma2.append(_lemma2_entry("B=hitting set, C=longest cycle",
                                                a, g, B, C, cfg.cap_group, 1))
        except (CapExceeded, GroupError):
            rep.caps_hit.append("group")
    return rep
