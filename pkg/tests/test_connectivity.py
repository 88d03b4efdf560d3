import random

import pytest
from hypothesis import given, strategies as st

from vtcycles.connectivity import (brute_force_connectivity, is_k_connected, local_connectivity,
                                   max_disjoint_paths, min_vertex_separator, vertex_connectivity)
from vtcycles.graph_core import (Graph, complete_bipartite, complete_graph, coxeter, cycle_graph,
                                 path_graph, petersen)

from .conftest import connected_graphs, random_connected_graph


def test_cycle_two_arcs():
    ps = max_disjoint_paths(cycle_graph(6), {0}, {3})
    assert len(ps) == 2
    ps.validate(cycle_graph(6))
    assert ps.paths == [(0, 1, 2, 3), (0, 5, 4, 3)]


def test_k4_three_paths():
    g = complete_graph(4)
    ps = max_disjoint_paths(g, {0}, {2})
    assert len(ps) == 3
    ps.validate(g)
    assert (0, 2) in ps.paths
    sep = min_vertex_separator(g, {0}, {2})
    assert sep.size == 3 and sep.uses_endpoints and sep.cut_edges == [(0, 2)]
    assert sep.separates(g)


def test_star_through_center():
    star = complete_bipartite(1, 3)
    assert len(max_disjoint_paths(star, {1}, {2})) == 1
    sep = min_vertex_separator(star, {1}, {2})
    assert sep.vertices == {0} and not sep.uses_endpoints


def test_cycle_separator():
    sep = min_vertex_separator(cycle_graph(6), {0}, {3})
    assert sep.vertices in ({1, 5}, {2, 4})
    assert sep.separates(cycle_graph(6))


def test_disconnected_sides():
    g = Graph(4, [(0, 1), (2, 3)])
    assert len(max_disjoint_paths(g, {0}, {3})) == 0
    assert min_vertex_separator(g, {0}, {3}).vertices == frozenset()


def test_set_mode_endpoints_disjoint():
    # two S vertices both adjacent only to one T vertex: only one fully disjoint path
    g = Graph(3, [(0, 2), (1, 2)])
    ps = max_disjoint_paths(g, {0, 1}, {2})
    assert len(ps) == 1
    sep = min_vertex_separator(g, {0, 1}, {2})
    assert sep.size == 1 and sep.separates(g)


def test_bad_sets():
    with pytest.raises(ValueError):
        max_disjoint_paths(cycle_graph(4), {0}, {0, 1})
    with pytest.raises(ValueError):
        max_disjoint_paths(cycle_graph(4), set(), {1})


def test_k_connected_examples():
    assert is_k_connected(petersen(), 3)
    assert is_k_connected(cycle_graph(6), 2)
    assert not is_k_connected(cycle_graph(6), 3)
    assert not is_k_connected(path_graph(4), 2)
    assert is_k_connected(complete_graph(5), 4)
    assert not is_k_connected(complete_graph(5), 5)


@pytest.mark.parametrize("g", [petersen(), cycle_graph(7), complete_graph(5), path_graph(5),
                               complete_bipartite(2, 3)])
def test_vertex_connectivity_oracle(g):
    assert vertex_connectivity(g) == brute_force_connectivity(g)


def test_coxeter_connectivity():
    assert vertex_connectivity(coxeter()) == 3


@given(connected_graphs(min_n=2, max_n=9))
def test_connectivity_matches_subset_oracle(g):
    kappa = brute_force_connectivity(g)
    assert vertex_connectivity(g) == kappa
    for k in range(1, 5):
        assert is_k_connected(g, k) == (kappa >= k and g.n > k)


def _random_instance(rng, n):
    g = random_connected_graph(rng, n, rng.uniform(0.05, 0.4))
    verts = list(range(n))
    rng.shuffle(verts)
    a = rng.randint(1, max(1, n // 3))
    b = rng.randint(1, max(1, n // 3))
    return g, set(verts[:a]), set(verts[a:a + b])


@given(st.integers(0, 10**9), st.integers(4, 20), st.booleans())
def test_menger_duality(seed, n, shared):
    rng = random.Random(seed)
    g, S, T = _random_instance(rng, n)
    if not T:
        return
    ps = max_disjoint_paths(g, S, T, share_endpoints=shared)
    ps.validate(g)
    sep = min_vertex_separator(g, S, T, share_endpoints=shared)
    assert sep.size == len(ps)
    assert sep.separates(g)
    if not shared:
        assert len(sep.vertices) == len(ps)


def test_local_connectivity_limit():
    assert local_connectivity(complete_graph(6), 0, 1, limit=2) == 2
