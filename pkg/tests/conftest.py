import random
from pathlib import Path

import hypothesis
import pytest
from hypothesis import strategies as st

from vtcycles.graph_core import Graph, is_connected

hypothesis.settings.register_profile("default", max_examples=60, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=10, deadline=None)
hypothesis.settings.load_profile("default")

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_connected_graph(rng: random.Random, n: int, p: float) -> Graph:
    """Random spanning tree plus independent extra edges with probability p."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    g = Graph(n, edges)
    assert is_connected(g)
    return g


@st.composite
def connected_graphs(draw, min_n=3, max_n=8):
    n = draw(st.integers(min_n, max_n))
    seed = draw(st.integers(0, 2**32 - 1))
    p = draw(st.floats(0.0, 0.8))
    return random_connected_graph(random.Random(seed), n, p)


@st.composite
def permutations(draw, n):
    return tuple(draw(st.permutations(list(range(n)))))


def load_small_graphs():
    graphs = []
    for line in (DATA / "connected_graphs_le7.txt").read_text().splitlines():
        if line.startswith("#"):
            continue
        idx, n, *pairs = line.split()
        edges = [tuple(int(x) for x in p.split(",")) for p in pairs]
        graphs.append((int(idx), Graph(int(n), edges)))
    return graphs


@pytest.fixture(scope="session")
def small_graphs():
    return load_small_graphs()


@pytest.fixture(scope="session")
def corpus():
    from vtcycles.corpus import builtin_corpus
    return builtin_corpus()


@pytest.fixture(scope="session")
def corpus_reports(corpus):
    from vtcycles.bounds import analyze
    return {name: (g, a, analyze(g, a)) for name, g, a in corpus}
