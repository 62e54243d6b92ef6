"""Main-part pipeline, König edge coloring, and the technical lemma harness."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import grid_coloring
from pathramsey.decompose import (
    LemmaStatus,
    build_main_part_multigraph,
    induced_vertex_coloring,
    konig_edge_coloring,
    monochromatic_parts,
    run_pipeline,
    validate_technical_lemma,
)
from pathramsey.graphs import (
    ColoredGraph,
    Graph,
    GraphError,
    Multigraph,
    complete_graph,
    monochromatic,
    unoriented,
    with_marks,
)
from pathramsey.orientation import BoundParams, P5_PARAMS


def random_bipartite_multigraph(rng: random.Random, max_degree: int = 8) -> Multigraph:
    nl = rng.randint(1, 6)
    nr = rng.randint(1, 6)
    deg = [0] * (nl + nr)
    pairs = []
    for _ in range(rng.randint(1, 24)):
        u = rng.randrange(nl)
        v = nl + rng.randrange(nr)
        if deg[u] < max_degree and deg[v] < max_degree:
            pairs.append((u, v))
            deg[u] += 1
            deg[v] += 1
    if not pairs:
        pairs = [(0, nl)]
    return Multigraph.from_pairs(nl + nr, pairs), (
        list(range(nl)),
        list(range(nl, nl + nr)),
    )


def assert_proper_edge_coloring(mg: Multigraph, coloring: dict) -> None:
    delta = mg.max_degree()
    used = set(coloring.values())
    assert used <= set(range(delta))
    assert len(used) == delta  # exactly the maximum degree many colors
    seen = set()
    for u, v, lab in mg.edges:
        for x in (u, v):
            key = (x, coloring[lab])
            assert key not in seen
            seen.add(key)


class TestParts:
    def test_singletons_skipped(self):
        cg = grid_coloring(2, 5)
        parts = monochromatic_parts(cg)
        assert all(len(comp) > 1 for _, comp in parts)
        assert len(parts) == 2 + 5

    def test_vertex_in_one_color_only_fails(self):
        g = Graph.from_edges(3, [(0, 1), (1, 2)])
        cg = ColoredGraph(g, 2, {(0, 1): 0, (1, 2): 0})
        parts = monochromatic_parts(cg)
        with pytest.raises(GraphError, match="vertex"):
            build_main_part_multigraph(cg, parts)

    def test_multigraph_edges_labeled_by_vertices(self):
        cg = grid_coloring(3, 4)
        mpm = build_main_part_multigraph(cg, monochromatic_parts(cg))
        assert sorted(mpm.edge_labels.values()) == list(range(12))
        left, right = mpm.bipartition()
        assert len(left) == 3 and len(right) == 4


class TestKonig:
    def test_parallel_edges(self):
        mg = Multigraph.from_pairs(2, [(0, 1)] * 5)
        coloring = konig_edge_coloring(mg, ([0], [1]))
        assert_proper_edge_coloring(mg, coloring)

    def test_rejects_non_bipartite_input(self):
        mg = Multigraph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
        with pytest.raises(GraphError):
            konig_edge_coloring(mg, ([0, 2], [1]))

    def test_rejects_overlapping_classes(self):
        mg = Multigraph.from_pairs(2, [(0, 1)])
        with pytest.raises(GraphError):
            konig_edge_coloring(mg, ([0, 1], [1]))

    @settings(max_examples=80, deadline=None)
    @given(st.integers(0, 2**32))
    def test_random_multigraphs_get_delta_colors(self, seed):
        mg, bipartition = random_bipartite_multigraph(random.Random(seed))
        coloring = konig_edge_coloring(mg, bipartition)
        assert_proper_edge_coloring(mg, coloring)


class TestPipeline:
    @pytest.mark.parametrize("rows,cols", [(3, 4), (4, 4), (2, 5), (4, 5), (5, 5)])
    def test_grid_hosts(self, rows, cols):
        report = run_pipeline(grid_coloring(rows, cols))
        assert report.colors_used == max(rows, cols)
        # properness re-checked from scratch
        g = Graph.from_edges(
            rows * cols, grid_coloring(rows, cols).graph.edges
        )
        for u, v in g.edges:
            assert report.vertex_coloring[u] != report.vertex_coloring[v]

    def test_relabeled_instances(self):
        for seed in range(5):
            cg = grid_coloring(3, 4, seed=seed)
            report = run_pipeline(cg)
            assert report.colors_used <= 5
            for u, v in cg.graph.edges:
                assert report.vertex_coloring[u] != report.vertex_coloring[v]

    def test_report_serializes(self):
        doc = run_pipeline(grid_coloring(3, 4)).to_jsonable()
        assert doc["proper"] is True
        assert doc["colors_used"] == 4
        assert len(doc["parts"]) == 7

    def test_induced_coloring_detects_gaps(self):
        cg = grid_coloring(2, 5)
        mpm = build_main_part_multigraph(cg, monochromatic_parts(cg))
        with pytest.raises(GraphError):
            induced_vertex_coloring(cg, mpm, {})


class TestTechnicalLemma:
    def test_main_parts_pass(self):
        verdict = validate_technical_lemma(unoriented(grid_coloring(4, 4)), P5_PARAMS)
        assert verdict.status is LemmaStatus.PASS

    def test_low_degree_is_a_hypothesis_failure(self):
        verdict = validate_technical_lemma(unoriented(grid_coloring(2, 4)), P5_PARAMS)
        assert verdict.status is LemmaStatus.HYPOTHESIS_FAILED
        assert any("degree" in d for d in verdict.details)

    def test_unbounded_part_is_a_hypothesis_failure(self):
        # a monochromatic clique too large for condition (2)
        cg = grid_coloring(2, 6)
        verdict = validate_technical_lemma(unoriented(cg), BoundParams(6, 1, 4))
        assert verdict.status is LemmaStatus.HYPOTHESIS_FAILED
        assert any("exceeds" in d for d in verdict.details)
