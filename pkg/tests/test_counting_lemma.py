import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vtcycles.corpus import cyclic_action, petersen_s5_action
from vtcycles.counting_lemma import (bound_from_hitting_set, double_count_S,
                                     min_translate_intersection, parse_vertex_set, translate,
                                     verify_counting_lemma)
from vtcycles.errors import CapExceeded, NotTransitive
from vtcycles.graph_core import cycle_graph, path_graph, petersen
from vtcycles.group_action import GroupAction, from_cycles, identity, rotation

Z4 = cyclic_action(4)


def test_translate():
    assert translate({0, 2, 5}, identity(6)) == {0, 2, 5}
    assert translate({0, 1}, rotation(6)) == {1, 2}


@given(st.permutations(list(range(8))), st.sets(st.integers(0, 7)))
def test_translate_preserves_size(p, C):
    assert len(translate(C, tuple(p))) == len(C)


def test_profile_z4():
    prof = min_translate_intersection(Z4, {0, 1, 2}, {0, 1, 2})
    # elements in BFS order: e, r, r^2, r^3
    assert prof.sizes == [3, 2, 2, 2]
    assert prof.k_min == 2 and prof.argmin == 1


def test_profile_extremes():
    V = set(range(6))
    assert min_translate_intersection(cyclic_action(6), V, V).k_min == 6
    assert min_translate_intersection(cyclic_action(6), set(), {0, 1}).k_min == 0


def test_verify_examples():
    v = verify_counting_lemma(Z4, cycle_graph(4), {0, 1, 2}, {0, 1, 2})
    assert (v.lhs, v.rhs, v.holds) == (9, 8, True)
    V = set(range(6))
    v = verify_counting_lemma(cyclic_action(6), cycle_graph(6), V, V)
    assert v.lhs == v.rhs == 36 and v.holds
    v = verify_counting_lemma(cyclic_action(6), cycle_graph(6), {0}, {3})
    assert v.k_min == 0 and v.holds


def test_verify_requires_transitive_automorphisms():
    with pytest.raises(NotTransitive):
        verify_counting_lemma(GroupAction([from_cycles(3, (0, 2))]), path_graph(3), {0}, {0})
    with pytest.raises(CapExceeded):
        verify_counting_lemma(cyclic_action(6), cycle_graph(6), {0}, {0}, cap=2)


def test_double_count_examples():
    dc = double_count_S(cyclic_action(6), {0}, {0})
    assert dc.S_size == 1 == dc.product and dc.stabilizer_order == 1
    dc = double_count_S(Z4, {0, 1, 2}, {0, 1, 2})
    assert dc.S_size == 9 == 3 * 3 * 1
    assert dc.ok


def test_double_count_petersen_s5():
    rng = random.Random(3)
    a = petersen_s5_action()
    for _ in range(10):
        B = set(rng.sample(range(10), rng.randint(0, 10)))
        C = set(rng.sample(range(10), rng.randint(0, 10)))
        dc = double_count_S(a, B, C)
        assert dc.group_order == 120 and dc.stabilizer_order == 12
        assert dc.S_size == len(B) * len(C) * 12
        assert dc.ok


def test_double_count_intransitive():
    with pytest.raises(NotTransitive):
        double_count_S(GroupAction([from_cycles(4, (0, 1))]), {0}, {0})


@given(st.sets(st.integers(0, 9)), st.sets(st.integers(0, 9), min_size=1), st.integers(0, 200))
def test_profile_min_invariant_under_translating_C(B, C, h):
    a = petersen_s5_action()
    elems = a.enumerate_elements()
    Ch = translate(C, elems[h % len(elems)])
    assert (min_translate_intersection(a, B, C).k_min
            == min_translate_intersection(a, B, Ch).k_min)


def test_bound_from_hitting_set():
    assert bound_from_hitting_set(1, 1, 17) == 17
    assert bound_from_hitting_set(6, 1, 72) == Fraction(12)
    k, n = 8, 10
    # B = C a longest cycle of length t: k n / t <= t  <=>  t^2 >= k n
    assert bound_from_hitting_set(9, k, n) <= 9
    with pytest.raises(ValueError):
        bound_from_hitting_set(0, 1, 5)


def test_parse_vertex_set():
    assert parse_vertex_set("0,1,2") == {0, 1, 2}
    assert parse_vertex_set("") == frozenset()
    with pytest.raises(ValueError):
        parse_vertex_set("0,a")
