from __future__ import annotations

import random
from fractions import Fraction

import pytest

from planarlab import (
    EmptyClassError,
    EventKind,
    ExperimentSpec,
    build_census,
    build_graph,
    complete_graph,
    compute_statistics,
    count_class,
    cycle_graph,
    decode,
    enumerate_class,
    estimate_probability,
    evaluate_event,
    exact_event_counts,
    exact_probability,
    isolated_vertex_count,
    parse_event,
    pattern_from_name,
    pendant_edge_count,
    phase_table,
    regime_of,
)
from tests.oracles import random_graph

TRIANGLE = pattern_from_name("triangle")
K4 = pattern_from_name("k4")


class TestEvaluateEvent:
    def test_connected(self):
        assert evaluate_event(complete_graph(4), EventKind.connected())
        assert not evaluate_event(build_graph(2, []), EventKind.connected())

    def test_component_iso(self):
        g = build_graph(4, [(1, 2), (2, 3), (1, 3)])
        assert evaluate_event(g, EventKind.has_component(TRIANGLE))
        assert not evaluate_event(complete_graph(4), EventKind.has_component(TRIANGLE))

    def test_copy(self):
        assert not evaluate_event(cycle_graph(4), EventKind.has_copy(TRIANGLE))
        assert evaluate_event(complete_graph(4), EventKind.has_copy(TRIANGLE))

    def test_isolated(self):
        assert evaluate_event(build_graph(3, [(1, 2)]), EventKind.has_isolated_vertex())
        assert not evaluate_event(cycle_graph(3), EventKind.has_isolated_vertex())

    def test_pendant_counts_isolated_edge_once(self):
        g = build_graph(3, [(1, 2)])
        assert pendant_edge_count(g) == 1
        assert evaluate_event(g, EventKind.min_pendant_edges(1))
        assert not evaluate_event(g, EventKind.min_pendant_edges(2))

    def test_min_appearances(self):
        star = build_graph(4, [(1, 2), (1, 3), (1, 4)])
        vertex = pattern_from_name("vertex")
        assert evaluate_event(star, EventKind.min_appearances(vertex, 3))
        assert not evaluate_event(star, EventKind.min_appearances(vertex, 4))

    def test_oversized_pattern_never_appears(self):
        g = cycle_graph(3)
        assert not evaluate_event(g, EventKind.min_appearances(K4, 1))
        assert evaluate_event(g, EventKind.min_appearances(K4, 0))

    def test_min_components(self):
        g = build_graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        assert evaluate_event(g, EventKind.min_components(TRIANGLE, 2))
        assert not evaluate_event(g, EventKind.min_components(TRIANGLE, 3))

    def test_parse_round_trip(self):
        tokens = [
            "connected",
            "isolated",
            "component:triangle",
            "copy:k4",
            "pendant>=3",
            "appearances:path3>=2",
            "components:triangle>=1",
        ]
        for token in tokens:
            assert parse_event(token).describe() == token

    def test_component_event_implies_copy_event(self):
        rng = random.Random(12)
        for _ in range(120):
            g = random_graph(rng, rng.randint(3, 7))
            if evaluate_event(g, EventKind.has_component(TRIANGLE)):
                assert evaluate_event(g, EventKind.has_copy(TRIANGLE))


class TestExactProbability:
    def test_singleton_connected(self):
        assert exact_probability(4, 6, EventKind.connected()) == 1

    def test_edgeless_isolated(self):
        assert exact_probability(3, 0, EventKind.has_isolated_vertex()) == 1

    def test_cayley_trees_over_class(self):
        # 4^{4-2} = 16 labeled trees among the 20 graphs with n=4, m=3
        assert exact_probability(4, 3, EventKind.connected()) == Fraction(16, 20)

    def test_empty_class_raises(self):
        with pytest.raises(EmptyClassError):
            exact_probability(5, 10, EventKind.connected())

    def test_complement_counting_sums_to_one(self):
        event = EventKind.connected()
        for n, m in ((4, 3), (5, 5), (5, 7)):
            hits = exact_event_counts(n, [event], [m])[m][0]
            misses = 0

            def visit(g):
                nonlocal misses
                if not evaluate_event(g, event):
                    misses += 1

            enumerate_class(n, m, visit)
            total = count_class(n, m)
            assert Fraction(hits, total) + Fraction(misses, total) == 1

    def test_estimate_on_singleton_class_is_exact(self):
        store = build_census(4, [6], store_graphs=True)
        est = estimate_probability(
            4, 6, EventKind.connected(), method="exact", k=100, seed=1, census=store
        )
        assert est.value == 1.0 and est.stderr == 0.0

    def test_estimates_match_exact_within_three_stderr(self):
        store = build_census(5, [5], store_graphs=True)
        for event in (EventKind.connected(), EventKind.has_isolated_vertex()):
            exact = float(exact_probability(5, 5, event))
            est = estimate_probability(
                5, 5, event, method="exact", k=4000, seed=21, census=store
            )
            assert est.method == "exact-sample" and not est.diagnostic
            assert abs(est.value - exact) <= 3 * max(est.stderr, 1e-9)

    def test_mcmc_estimate_matches_exact_and_is_diagnostic(self):
        event = EventKind.has_isolated_vertex()
        exact = float(exact_probability(5, 5, event))
        est = estimate_probability(
            5, 5, event, method="mcmc", k=4000, seed=22, burn_in=2000, thinning=3
        )
        assert est.diagnostic and est.method == "mcmc-diagnostic"
        assert abs(est.value - exact) <= 3 * max(est.stderr, 1e-9)


class TestRegimes:
    def test_examples(self):
        assert regime_of(100, 50).label == "sparse"
        assert regime_of(100, 200).label == "middle"
        assert regime_of(100, 293).label == "saturated"

    def test_critical_band(self):
        assert regime_of(100, 100).label == "critical"
        assert regime_of(100, 104).label == "critical"
        assert regime_of(100, 106).label == "middle"

    def test_ratio_is_exact(self):
        assert regime_of(7, 15).ratio == Fraction(15, 7)


class TestPhaseTable:
    def test_spec_example_grid(self):
        events = (
            EventKind.connected(),
            EventKind.has_component(TRIANGLE),
            EventKind.has_copy(K4),
        )
        spec = ExperimentSpec(tuple((6, m) for m in range(13)), events)
        result = phase_table(spec)
        assert len(result.rows) == 39
        assert all(row.method == "exact" and row.stderr == 0.0 for row in result.rows)
        saturated = [r for r in result.rows if r.m == 12]
        assert all(r.regime == "saturated" for r in saturated)
        connected_12 = next(r for r in saturated if r.event == "connected")
        assert connected_12.prob == 1.0  # every triangulation is connected

    def test_empty_grid(self):
        result = phase_table(ExperimentSpec((), (EventKind.connected(),)))
        assert result.rows == ()
        assert result.to_csv().splitlines()[0].startswith("n,m,ratio")

    def test_empty_class_propagates(self):
        spec = ExperimentSpec(((5, 10),), (EventKind.connected(),))
        with pytest.raises(EmptyClassError):
            phase_table(spec)

    def test_pinned_small_class_portrait(self):
        # exact census values; the middle cell is structurally zero at this
        # size because a K4 component leaves too few vertices for the rest
        assert exact_probability(6, 6, EventKind.has_component(K4)) == Fraction(3, 1001)
        assert exact_probability(6, 12, EventKind.has_component(K4)) == 0
        assert exact_probability(6, 6, EventKind.has_component(TRIANGLE)) == Fraction(2, 1001)

    def test_mcmc_rows_are_diagnostic(self):
        spec = ExperimentSpec(
            ((5, 5),), (EventKind.connected(),), method="mcmc", k=400, seed=9
        )
        result = phase_table(spec)
        assert result.rows[0].method == "mcmc-diagnostic"
        assert 0.0 <= result.rows[0].prob <= 1.0

    def test_csv_is_deterministic(self):
        spec = ExperimentSpec(((5, 4), (5, 5)), (EventKind.connected(),))
        assert phase_table(spec).to_csv() == phase_table(spec).to_csv()


class TestStatisticsBundle:
    def test_figure_graph_bundle(self):
        g = decode("4:FC")
        stats = compute_statistics(g, TRIANGLE)
        payload = stats.as_dict()
        assert payload["kappa"] == 1
        assert payload["f_H"] == 0  # K4 has no bridge, no appearance sets
        assert payload["good_triangles"] == 4
        assert payload["degree_histogram"] == {"3": 4}
        assert payload["bridges"] == []
        assert payload["add_count"] == 0
        assert payload["isolated"] == 0
        assert payload["pendant_edges"] == 0

    def test_bundle_without_pattern(self):
        g = build_graph(3, [(1, 2)])
        payload = compute_statistics(g).as_dict()
        assert payload["f_H"] is None
        assert payload["pendant_edges"] == 1
        assert payload["kappa"] == 2
        assert payload["isolated"] == 1

    def test_isolated_vertex_count(self):
        assert isolated_vertex_count(build_graph(4, [(1, 2)])) == 2
