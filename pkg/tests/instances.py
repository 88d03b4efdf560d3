"""Hand-built graphs holding two cycles joined by more than k^2 disjoint paths.

Each builder returns ``(graph, C1, C2)``; C1 and C2 are deliberately not
longest cycles.
"""

from vtcycles.graph_core import Graph


def _cycle_edges(c):
    return [(c[i], c[(i + 1) % len(c)]) for i in range(len(c))]


def figure_eight_chords():
    """Two pentagons sharing vertex 0 (k=1), joined by chords 2-6 and 3-7."""
    C1, C2 = (0, 1, 2, 3, 4), (0, 5, 6, 7, 8)
    edges = _cycle_edges(C1) + _cycle_edges(C2) + [(2, 6), (3, 7)]
    return Graph(9, edges), C1, C2


def figure_eight_subdivided():
    """As above but each chord carries a midpoint (9 and 10)."""
    C1, C2 = (0, 1, 2, 3, 4), (0, 5, 6, 7, 8)
    edges = _cycle_edges(C1) + _cycle_edges(C2) + [(2, 9), (9, 6), (3, 10), (10, 7)]
    return Graph(11, edges), C1, C2


def octagons_five_chords():
    """Two octagons sharing vertices 0 and 4 (k=2) with five chords (> 4)."""
    C1 = (0, 1, 2, 3, 4, 5, 6, 7)
    C2 = (0, 8, 9, 10, 4, 11, 12, 13)
    chords = [(1, 8), (2, 9), (3, 10), (5, 11), (6, 12)]
    return Graph(14, _cycle_edges(C1) + _cycle_edges(C2) + chords), C1, C2


def disjoint_pentagons_two_paths():
    """Disjoint pentagons (k=0) joined by two subdivided paths."""
    C1, C2 = (0, 1, 2, 3, 4), (5, 6, 7, 8, 9)
    edges = _cycle_edges(C1) + _cycle_edges(C2) + [(0, 10), (10, 5), (2, 11), (11, 7)]
    return Graph(12, edges), C1, C2


def octagons_one_chord():
    """The octagons above with only the chord 1-8, too few paths for an exchange."""
    C1 = (0, 1, 2, 3, 4, 5, 6, 7)
    C2 = (0, 8, 9, 10, 4, 11, 12, 13)
    return Graph(14, _cycle_edges(C1) + _cycle_edges(C2) + [(1, 8)]), C1, C2


ALL = [figure_eight_chords, figure_eight_subdivided, octagons_five_chords,
       disjoint_pentagons_two_paths]
