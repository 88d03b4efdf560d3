"""Translate intersections and the double count behind |B||C| >= k|V|.

For a group G acting transitively on V and sets B, C of points, the pairs
(g, y) with y in B and y in C^g are counted two ways: once per group element
(at least k_min of them each, where k_min is the least |B & C^g|) and once per
choice of y in B and x in C (exactly |G_y| elements send x to y).
All arithmetic is on Python integers and Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotTransitive
from .graph_core import Graph
from .group_action import DEFAULT_GROUP_CAP, GroupAction, is_vertex_transitive


def parse_vertex_set(text: str) -> frozenset:
    """``"0,1,2"`` -> frozenset({0, 1, 2}); the empty string is the empty set."""
    text = text.strip()
    if not text:
        return frozenset()
    try:
        return frozenset(int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"bad vertex set literal {text!r}") from None


def translate(C: Iterable[int], p) -> frozenset:
    return frozenset(p[c] for c in C)


@dataclass
class TranslateProfile:
    sizes: list[int]
    k_min: int
    argmin: int
    elements: list

    @property
    def argmin_element(self):
        return self.elements[self.argmin]


def min_translate_intersection(a: GroupAction, B: Iterable[int], C: Iterable[int],
                               cap: int = DEFAULT_GROUP_CAP) -> TranslateProfile:
    B, C = frozenset(B), list(C)
    elements = a.enumerate_elements(cap)
    sizes = [sum(1 for c in C if p[c] in B) for p in elements]
    k = min(sizes)
    return TranslateProfile(sizes, k, sizes.index(k), elements)


@dataclass
class Lemma2Verdict:
    B_size: int
    C_size: int
    k_min: int
    n: int

    @property
    def lhs(self) -> int:
        return self.B_size * self.C_size

    @property
    def rhs(self) -> int:
        return self.k_min * self.n

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def as_dict(self) -> dict:
        return {"B_size": self.B_size, "C_size": self.C_size, "k_min": self.k_min,
                "n": self.n, "lhs_BC": self.lhs, "rhs_kn": self.rhs, "holds": self.holds}


def _require_transitive(a: GroupAction, g: Graph | None = None):
    if g is not None:
        check = is_vertex_transitive(g, a)
        if not check:
            raise NotTransitive(f"action is not a transitive automorphism group: {check}")
    elif not a.is_transitive():
        raise NotTransitive("action is not transitive")


def verify_counting_lemma(a: GroupAction, g: Graph, B, C,
                          cap: int = DEFAULT_GROUP_CAP) -> Lemma2Verdict:
    _require_transitive(a, g)
    prof = min_translate_intersection(a, B, C, cap)
    return Lemma2Verdict(len(set(B)), len(set(C)), prof.k_min, g.n)


@dataclass
class DoubleCount:
    S_size: int
    B_size: int
    C_size: int
    group_order: int
    stabilizer_order: int
    stabilizer_order_direct: int
    k_min: int

    @property
    def product(self) -> int:
        return self.B_size * self.C_size * self.stabilizer_order

    @property
    def identity_holds(self) -> bool:
        return self.S_size == self.product

    @property
    def lower_bound_holds(self) -> bool:
        return self.S_size >= self.k_min * self.group_order

    @property
    def ok(self) -> bool:
        return (self.identity_holds and self.lower_bound_holds
                and self.stabilizer_order == self.stabilizer_order_direct)

    def as_dict(self) -> dict:
        return {"S_size": self.S_size, "B_C_Gy": self.product,
                "group_order": self.group_order, "stabilizer_order": self.stabilizer_order,
                "k_min_times_G": self.k_min * self.group_order,
                "identity_holds": self.identity_holds,
                "lower_bound_holds": self.lower_bound_holds}


def double_count_S(a: GroupAction, B, C, cap: int = DEFAULT_GROUP_CAP) -> DoubleCount:
    """Count S = {(g, y) : y in B and y in C^g} pair by pair.

    The stabilizer order is taken as |G|/n (orbit-stabilizer) and also
    counted directly at point 0; the two must agree.
    """
    _require_transitive(a)
    B, C = frozenset(B), frozenset(C)
    elements = a.enumerate_elements(cap)
    n = a.degree
    count = 0
    k_min = None
    for p in elements:
        Cg = translate(C, p)
        here = 0
        for y in range(n):
            if y in B and y in Cg:
                here += 1
        count += here
        k_min = here if k_min is None else min(k_min, here)
    direct = sum(1 for p in elements if p[0] == 0)
    return DoubleCount(count, len(B), len(C), len(elements), len(elements) // n,
                       direct, k_min)


def bound_from_hitting_set(B_size: int, k: int, n: int) -> Fraction:
    """Lower bound k*n/|B| on the length of a longest cycle."""
    if B_size <= 0:
        raise ValueError("hitting set must be nonempty")
    return Fraction(k * n, B_size)
