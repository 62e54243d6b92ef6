"""Triangle decompositions, dual hypergraphs, and the chromatic-index search."""

from itertools import combinations

import pytest

from pathramsey.goodness import Budget, chromatic_number
from pathramsey.graphs import ColoredGraph, Graph, GraphError, monochromatic
from pathramsey.hypergraphs import (
    DualReport,
    Hypergraph3,
    build_dual,
    build_triangle_host,
    chromatic_index,
    detect_triangle_decomposition,
    find_three_partition,
    generate_small_instances,
    intersection_graph,
    question25_search,
)

LATIN3 = Hypergraph3(
    9,
    tuple(
        frozenset({r, 3 + c, 6 + (r + c) % 3}) for r in range(3) for c in range(3)
    ),
    (frozenset({0, 1, 2}), frozenset({3, 4, 5}), frozenset({6, 7, 8})),
)


class TestHypergraph3:
    def test_property_checks_on_latin_square(self):
        assert LATIN3.is_three_uniform()
        assert LATIN3.is_three_regular()
        assert LATIN3.is_three_partite()
        assert LATIN3.is_linear()

    def test_fano_plane_is_not_three_partite(self):
        fano = Hypergraph3(
            7,
            tuple(
                frozenset(e)
                for e in [
                    (0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5),
                    (1, 4, 6), (2, 3, 6), (2, 4, 5),
                ]
            ),
        )
        assert fano.is_three_uniform()
        assert fano.is_three_regular()
        assert fano.is_linear()  # any two lines meet in exactly one point
        assert not fano.is_three_partite()
        assert find_three_partition(fano) is None

    def test_json_round_trip(self):
        again = Hypergraph3.from_json(LATIN3.to_json())
        assert again == LATIN3
        with pytest.raises(GraphError):
            Hypergraph3.from_json("{}")
        with pytest.raises(GraphError):
            Hypergraph3.from_json('{"v": 3, "edges": [[0, 1, 9]]}')

    def test_partition_found_when_unstated(self):
        bare = Hypergraph3(LATIN3.n, LATIN3.edges)
        assert bare.is_three_partite()


class TestTriangleDecomposition:
    def test_host_decomposes(self):
        cg = build_triangle_host(3, (0, 1, 2))
        result = detect_triangle_decomposition(cg)
        assert result.offending is None
        assert len(result.decomposition.triangles) == 9

    def test_offender_reported(self):
        # one color class is a 4-clique, not a triangle
        g = Graph.from_edges(4, [(i, j) for i, j in combinations(range(4), 2)])
        cg = ColoredGraph(g, 3, {e: 0 for e in g.edges})
        result = detect_triangle_decomposition(cg)
        assert result.decomposition is None
        assert result.offending == (0, frozenset({0, 1, 2, 3}))

    def test_requires_three_colors(self):
        with pytest.raises(GraphError):
            detect_triangle_decomposition(monochromatic(Graph(3, frozenset())))


class TestDual:
    @pytest.mark.parametrize(
        "m,shifts", [(3, (0, 1, 2)), (5, (0, 1, 3)), (7, (0, 2, 6)), (9, (1, 4, 8))]
    )
    def test_dual_properties(self, m, shifts):
        cg = build_triangle_host(m, shifts)
        result = detect_triangle_decomposition(cg)
        report = build_dual(result.decomposition)
        assert isinstance(report, DualReport)
        assert report.three_uniform
        assert report.three_regular
        assert report.three_partite
        assert report.linear
        assert report.host_six_regular
        assert report.hypergraph.n == 3 * m

    def test_construction_validates_input(self):
        with pytest.raises(GraphError):
            build_triangle_host(4, (0, 1, 2))
        with pytest.raises(GraphError):
            build_triangle_host(5, (0, 1, 1))


class TestChromaticIndex:
    def test_latin_square_needs_three_colors(self):
        assert chromatic_index(LATIN3) == 3

    def test_matches_intersection_graph_chromatic_number(self):
        for h in generate_small_instances(9):
            assert chromatic_index(h) == chromatic_number(intersection_graph(h))

    def test_budget_gives_none(self):
        cg = build_triangle_host(7, (0, 1, 3))
        h = build_dual(detect_triangle_decomposition(cg).decomposition).hypergraph
        assert chromatic_index(h, Budget(max_nodes=3)) is None


class TestSmallCorpus:
    def test_only_the_latin_square_exists(self):
        # no valid instance has 3 or 6 hyperedges; at 9 the order-3 Latin
        # square is the unique instance up to isomorphism
        corpus = generate_small_instances(9)
        assert [len(h.edges) for h in corpus] == [9]

    def test_search_flags_nothing_small(self):
        entries = question25_search(generate_small_instances(9))
        assert all(e.valid for e in entries)
        assert all(e.chi_index <= 5 for e in entries)
        assert not any(e.flagged for e in entries)

    def test_invalid_instances_are_skipped_with_reason(self):
        bad = Hypergraph3(3, (frozenset({0, 1}),))
        entries = question25_search([bad])
        assert entries[0].valid is False
        assert entries[0].reason == "not 3-uniform"
