"""Bitset graph toolkit for minimum-degree bipartiteness thresholds of
graphs forbidding a family of odd cycles."""

from .canon import are_isomorphic, canonical_form, canonical_graph
from .constructions import (
    ConstructionSpec,
    balanced_cycle_blowup,
    bc_graph,
    complete_bipartite,
    cycle_graph,
    haggkvist_graph,
    turan_graph,
)
from .cycles import CycleSpectrum, cycle_spectrum, has_cycle_of_length, odd_girth, shortest_odd_cycle
from .enumeration import EnumSpec, enumerate_graphs
from .family import (
    FamilyProfile,
    OddFamily,
    Regime,
    Verdict,
    check_graph_against_theorem,
    degree_threshold,
    family_profile,
    find_forbidden_cycle,
    is_family_free,
)
from .graph import Bipartition, Graph, GraphError, blow_up, graph_from_edges, is_bipartite, min_degree
from .graph6 import graph6_decode, graph6_encode
from .proofkit import (
    PathRequest,
    erdos_gallai_holds,
    greedy_bipartite_path,
    longest_path_order,
    min_degree_subgraph,
    recognize_bc_graph,
    recognize_cycle_blowup,
)
from .verify import VerificationReport, random_counterexample_search, verify_theorem_exhaustive

__all__ = [name for name in dir() if not name.startswith("_")]
