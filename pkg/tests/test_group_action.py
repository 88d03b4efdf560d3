from itertools import permutations as all_perms

import pytest
from hypothesis import given, strategies as st

from vtcycles.corpus import cyclic_action, petersen_s5_action, truncation_action
from vtcycles.errors import CapExceeded, GroupError
from vtcycles.graph_core import (Graph, circulant, complete_graph, coxeter, cycle_graph,
                                 path_graph, petersen, truncate)
from vtcycles.group_action import (GroupAction, apply, automorphism_generators, compose,
                                   format_generators, from_cycles, identity, inverse,
                                   is_automorphism, is_vertex_transitive, parse_generators,
                                   rotation)

from .conftest import permutations


def brute_force_aut_order(g: Graph) -> int:
    return sum(1 for p in all_perms(range(g.n)) if is_automorphism(g, p) is None)


def test_apply():
    assert apply(identity(6), 5) == 5
    assert apply(rotation(6), 5) == 0
    with pytest.raises(GroupError):
        apply(rotation(6), 6)


def test_compose_examples():
    p = from_cycles(5, (0, 3, 1))
    assert compose(p, identity(5)) == p
    assert compose(p, inverse(p)) == identity(5)
    assert compose(rotation(6), rotation(6)) == rotation(6, 2)
    with pytest.raises(GroupError):
        compose(identity(3), identity(4))


@given(st.integers(1, 9).flatmap(lambda n: st.tuples(permutations(n), permutations(n),
                                                      permutations(n))))
def test_compose_associative_and_right_action(triple):
    p, q, r = triple
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    e = identity(len(p))
    assert compose(e, p) == p == compose(p, e)
    for v in range(len(p)):
        assert apply(compose(p, q), v) == apply(q, apply(p, v))


def test_orbit_examples():
    assert cyclic_action(6).orbit(0) == [0, 1, 2, 3, 4, 5]
    assert GroupAction([identity(5)]).orbit(3) == [3]
    assert GroupAction([from_cycles(4, (0, 1))]).orbit(2) == [2]


def test_enumerate_elements():
    assert cyclic_action(6).order() == 6
    s5 = GroupAction([from_cycles(5, (0, 1)), from_cycles(5, (0, 1, 2, 3, 4))])
    elems = s5.enumerate_elements()
    assert len(elems) == 120 == len(set(elems))
    assert elems[0] == identity(5)
    with pytest.raises(CapExceeded):
        GroupAction([rotation(6)]).enumerate_elements(cap=3)


def test_enumeration_is_closed_group():
    a = GroupAction([from_cycles(4, (0, 1)), from_cycles(4, (1, 2, 3))])
    elems = set(a.enumerate_elements())
    assert len(elems) == 24
    for p in elems:
        assert inverse(p) in elems
        for q in elems:
            assert compose(p, q) in elems


def test_enumeration_layers_sorted():
    a = GroupAction([from_cycles(4, (1, 2, 3)), from_cycles(4, (0, 1))])
    elems = a.enumerate_elements()
    # words of length 1 are exactly the two generators, sorted
    assert elems[1:3] == sorted(a.generators)


def test_generator_degree_mismatch():
    with pytest.raises(GroupError):
        GroupAction([identity(3), identity(4)])
    with pytest.raises(GroupError):
        GroupAction([(0, 0, 1)])


def test_vertex_transitive_examples():
    assert is_vertex_transitive(cycle_graph(6), cyclic_action(6))
    p3 = path_graph(3)
    flip = GroupAction([(2, 1, 0)])
    check = is_vertex_transitive(p3, flip)
    assert not check and check.unreached == 1
    bad = is_vertex_transitive(p3, GroupAction([(1, 0, 2)]))
    assert not bad and bad.bad_edge is not None
    assert is_vertex_transitive(petersen(), petersen_s5_action())
    with pytest.raises(GroupError):
        is_vertex_transitive(petersen(), cyclic_action(6))


def test_petersen_s5_generators_are_automorphisms():
    g = petersen()
    a = petersen_s5_action()
    for p in a.generators:
        assert is_automorphism(g, p) is None
    assert a.order() == 120


@pytest.mark.parametrize("g", [cycle_graph(4), complete_graph(4), cycle_graph(5), path_graph(4),
                               circulant(6, [1, 3]), complete_graph(4).induced_without([])])
def test_automorphism_group_matches_brute_force(g):
    assert automorphism_generators(g).order() == brute_force_aut_order(g)


def test_automorphism_examples():
    assert automorphism_generators(cycle_graph(4)).order() == 8
    assert automorphism_generators(complete_graph(4)).order() == 24


def test_asymmetric_graphs_have_trivial_group():
    # smallest asymmetric graph: 6 vertices (no asymmetric tree has fewer than 7)
    g6 = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (1, 3), (2, 5), (3, 5)])
    tree7 = Graph(7, [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6)])
    for g in (g6, tree7):
        assert brute_force_aut_order(g) == 1
        assert automorphism_generators(g).order() == 1


def test_automorphism_limit():
    with pytest.raises(GroupError):
        automorphism_generators(coxeter())


def test_known_group_orders():
    assert automorphism_generators(petersen()).order() == 120
    assert automorphism_generators(coxeter(), limit=28).order() == 336
    tp = truncation_action(petersen(), petersen_s5_action())
    assert tp.order() == 120
    assert is_vertex_transitive(truncate(petersen()), tp)


@pytest.mark.parametrize("name", ["petersen", "coxeter", "truncated_petersen", "cayley_s4_adjacent_transpositions"])
def test_orbit_stabilizer(corpus, name):
    _, g, a = next(item for item in corpus if item[0] == name)
    elems = a.enumerate_elements()
    for v in (0, g.n - 1):
        direct = sum(1 for p in elems if p[v] == v)
        assert len(elems) == g.n * direct
        assert a.stabilizer_order(v) == direct


def test_stabilizer_of_intransitive_action():
    a = GroupAction([from_cycles(4, (0, 1))])
    assert a.stabilizer_order(2) == 2
    assert a.stabilizer_order(0) == 1


def test_circulants_transitive_under_rotation():
    for n, offs in [(8, [1, 4]), (12, [1, 5]), (16, [1, 4]), (7, [1, 2, 3])]:
        assert is_vertex_transitive(circulant(n, offs), cyclic_action(n))


def test_generator_file_roundtrip():
    a = petersen_s5_action()
    text = format_generators(a, comments=["s5"])
    assert parse_generators(text).generators == a.generators


@pytest.mark.parametrize("text", ["", "3 1\n0 1\n", "3 1\n0 0 1\n", "3 2\n0 1 2\n", "x 1\n"])
def test_generator_file_errors(text):
    with pytest.raises(GroupError):
        parse_generators(text)
