"""Partial orientations and exhaustive Ramsey verification for path targets.

The package proves small cases of path Ramsey goodness by construction and
exhaustion: bounded partial orientations of P5/P6/P7-free graphs, exact
Ramsey-number searches with budgets, the main-part coloring pipeline, Turán
threshold arithmetic, star Ramsey closed forms, and the dual-hypergraph
chromatic-index search.
"""

from .graphs import (
    BACKWARD,
    FORWARD,
    UNORIENTED,
    ColoredGraph,
    Graph,
    GraphError,
    Multigraph,
    PartialOrientation,
    complete_graph,
    cycle_graph,
    graph6_decode,
    graph6_encode,
    path_graph,
    star_graph,
)
from .detect import find_path, is_pn_free, longest_cycle, longest_path_order
from .orientation import (
    BoundParams,
    NotPNFreeError,
    OrientationError,
    P5_PARAMS,
    P6_PARAMS,
    P7_PARAMS,
    build_witness,
    check_nst_bounded,
    check_st_bounded,
    classify_part,
    orient_p5_free,
    orient_p6_free,
    orient_p7_free,
    witness_params,
)
from .goodness import (
    Budget,
    GoodnessVerdict,
    RamseyOutcome,
    chromatic_number,
    erdos_gallai_path_bound,
    exact_turan_path,
    star_ramsey,
    turan_threshold,
    verify_goodness,
    verify_ramsey_value,
)
from .decompose import run_pipeline, validate_technical_lemma
from .hypergraphs import Hypergraph3, build_dual, chromatic_index, question25_search

__all__ = [
    "BACKWARD",
    "FORWARD",
    "UNORIENTED",
    "Budget",
    "BoundParams",
    "ColoredGraph",
    "Graph",
    "GraphError",
    "GoodnessVerdict",
    "Hypergraph3",
    "Multigraph",
    "NotPNFreeError",
    "OrientationError",
    "P5_PARAMS",
    "P6_PARAMS",
    "P7_PARAMS",
    "PartialOrientation",
    "RamseyOutcome",
    "build_dual",
    "build_witness",
    "check_nst_bounded",
    "check_st_bounded",
    "chromatic_index",
    "chromatic_number",
    "classify_part",
    "complete_graph",
    "cycle_graph",
    "erdos_gallai_path_bound",
    "exact_turan_path",
    "find_path",
    "graph6_decode",
    "graph6_encode",
    "is_pn_free",
    "longest_cycle",
    "longest_path_order",
    "orient_p5_free",
    "orient_p6_free",
    "orient_p7_free",
    "path_graph",
    "question25_search",
    "run_pipeline",
    "star_graph",
    "star_ramsey",
    "turan_threshold",
    "validate_technical_lemma",
    "verify_goodness",
    "verify_ramsey_value",
    "witness_params",
]
