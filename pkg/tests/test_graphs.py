from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from planarlab import (
    DuplicateEdgeError,
    LoopEdgeError,
    MalformedEncodingError,
    NotPlanarInputError,
    VertexOutOfRangeError,
    add_count,
    addable_nonedges,
    bridges,
    build_graph,
    components,
    complete_graph,
    decode,
    degree_histogram,
    encode,
    is_planar,
    kappa,
)
from tests.conftest import labeled_graphs
from tests.oracles import component_count_bfs, random_graph


class TestBuildGraph:
    def test_triangle(self):
        g = build_graph(3, [(1, 2), (2, 3), (1, 3)])
        assert g.m == 3
        assert g.has_edge(3, 1)

    def test_loop_rejected(self):
        with pytest.raises(LoopEdgeError):
            build_graph(4, [(1, 1)])

    def test_duplicate_rejected(self):
        with pytest.raises(DuplicateEdgeError):
            build_graph(2, [(1, 2), (2, 1)])

    def test_vertex_out_of_range(self):
        with pytest.raises(VertexOutOfRangeError):
            build_graph(3, [(1, 4)])
        with pytest.raises(VertexOutOfRangeError):
            build_graph(3, [(0, 2)])

    def test_zero_vertices_rejected(self):
        with pytest.raises(VertexOutOfRangeError):
            build_graph(0, [])

    def test_single_vertex_graph_is_valid(self):
        g = build_graph(1, [])
        assert g.n == 1 and g.m == 0 and is_planar(g)


class TestEncoding:
    def test_triangle(self):
        assert encode(build_graph(3, [(1, 2), (2, 3), (1, 3)])) == "3:E"

    def test_path(self):
        assert encode(build_graph(3, [(1, 2), (2, 3)])) == "3:A"

    def test_k4(self):
        assert encode(complete_graph(4)) == "4:FC"

    def test_one_vertex(self):
        assert encode(build_graph(1, [])) == "1:"
        assert decode("1:").n == 1

    def test_decode_examples(self):
        assert decode("3:E").edges == frozenset({(1, 2), (1, 3), (2, 3)})
        assert decode("3:A").edges == frozenset({(1, 2), (2, 3)})

    @pytest.mark.parametrize(
        "bad",
        ["", "3", ":E", "3:e", "3:G", "03:E", "0:", "3:F", "3:EE", "4:FC0", "-1:", "3: E"],
    )
    def test_malformed(self, bad):
        with pytest.raises(MalformedEncodingError):
            decode(bad)

    @given(labeled_graphs(max_n=12))
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, g):
        assert decode(encode(g)) == g


class TestComponents:
    def test_edgeless(self):
        g = build_graph(5, [])
        assert kappa(g) == 5
        assert components(g) == [frozenset({v}) for v in range(1, 6)]

    def test_triangle(self):
        assert kappa(build_graph(3, [(1, 2), (2, 3), (1, 3)])) == 1

    def test_edge_plus_isolated(self):
        g = build_graph(3, [(1, 2)])
        assert components(g) == [frozenset({1, 2}), frozenset({3})]
        assert kappa(g) == 2

    def test_component_order_is_by_minimum(self):
        g = build_graph(6, [(2, 5), (3, 4)])
        assert [min(c) for c in components(g)] == [1, 2, 3, 6]

    def test_matches_bfs_oracle_on_random_graphs(self):
        rng = random.Random(1)
        for _ in range(200):
            g = random_graph(rng, rng.randint(1, 9))
            assert kappa(g) == component_count_bfs(g)


class TestBridges:
    def test_path_all_bridges(self):
        g = build_graph(4, [(1, 2), (2, 3), (3, 4)])
        assert bridges(g) == frozenset({(1, 2), (2, 3), (3, 4)})

    def test_triangle_none(self):
        assert bridges(build_graph(3, [(1, 2), (2, 3), (1, 3)])) == frozenset()

    def test_triangle_with_pendant(self):
        g = build_graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])
        assert bridges(g) == frozenset({(3, 4)})

    def test_deleting_bridge_raises_kappa_by_one(self):
        rng = random.Random(2)
        for _ in range(120):
            g = random_graph(rng, rng.randint(2, 9))
            cut = bridges(g)
            base = kappa(g)
            for edge in g.edges:
                reduced = build_graph(g.n, sorted(g.edges - {edge}))
                if edge in cut:
                    assert kappa(reduced) == base + 1
                else:
                    assert kappa(reduced) == base


class TestDegreeHistogram:
    def test_k4(self):
        assert degree_histogram(complete_graph(4)).counts == {3: 4}

    def test_path3(self):
        assert degree_histogram(build_graph(3, [(1, 2), (2, 3)])).counts == {1: 2, 2: 1}

    def test_edgeless_pair(self):
        assert degree_histogram(build_graph(2, [])).counts == {0: 2}

    @given(labeled_graphs(max_n=12))
    @settings(max_examples=150, deadline=None)
    def test_identities(self, g):
        hist = degree_histogram(g)
        assert hist.vertex_total() == g.n
        assert hist.degree_sum() == 2 * g.m


class TestAddableNonedges:
    def test_four_cycle_diagonals(self):
        g = build_graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
        assert addable_nonedges(g) == [(1, 3), (2, 4)]
        assert add_count(g) == 2

    def test_maximal_planar_has_none(self):
        # K5 minus one edge is planar with m = 3n-6 = 9; brute force over the
        # single non-edge: adding it back yields K5, which is not planar.
        edges = [e for e in complete_graph(5).edges if e != (1, 2)]
        g = build_graph(5, edges)
        assert is_planar(g)
        assert is_planar(build_graph(5, edges + [(1, 2)])) is False
        assert addable_nonedges(g) == []

    def test_edgeless_all_pairs(self):
        g = build_graph(4, [])
        assert add_count(g) == 6

    def test_rejects_nonplanar_input(self):
        with pytest.raises(NotPlanarInputError):
            addable_nonedges(complete_graph(5))
