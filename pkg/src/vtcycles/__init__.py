"""Long cycles in vertex-transitive graphs: exact solvers, certificates, bound checks."""

from .graph_core import Graph, circulant, coxeter, cycle_graph, petersen, truncate
from .group_action import GroupAction, automorphism_generators, is_vertex_transitive
from .cycle_solver import circumference, enumerate_longest_cycles, min_pairwise_intersection
from .connectivity import is_k_connected, max_disjoint_paths, min_vertex_separator
from .hitting_set import construct_hitting_set, find_exchange
from .bounds import analyze
from .config import Config

__version__ = "0.1.0"
