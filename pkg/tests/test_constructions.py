import json

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclespec import (
    GraphError,
    extremal_graph,
    extremal_hamiltonian_cycle,
    find_claw,
    find_hamiltonian_cycle,
    graph_from_edges,
    line_graph,
    max_degree,
    random_claw_free_hamiltonian,
)
from cyclespec.constructions import (
    ENUMERATION_LIMIT,
    _creates_claw,
    count_masks,
    enumerate_small_graphs,
    extremal_layout,
)
from oracles import brute_claws, brute_hamiltonian, to_nx
from shapes import complete, cycle, path, star


class TestExtremal:
    def test_layout(self):
        lay = extremal_layout(14, 4)
        assert lay.clique1 == (1, 2) and lay.clique2 == (3, 4)
        assert lay.path == tuple(range(5, 14))
        assert (lay.attach1, lay.attach2) == (1, 3)

    def test_odd_delta_splits_ceil_floor(self):
        lay = extremal_layout(9, 3)
        assert len(lay.clique1) == 2 and len(lay.clique2) == 1

    @pytest.mark.parametrize("n, delta", [(5, 4), (4, 1), (3, 2), (10, 9)])
    def test_parameter_range(self, n, delta):
        with pytest.raises(ValueError):
            extremal_graph(n, delta)

    def test_structure_across_range(self):
        for delta in range(2, 9):
            for n in range(delta + 2, 17):
                g = extremal_graph(n, delta)
                assert g.n == n and max_degree(g) == delta
                assert not brute_claws(g)
                assert extremal_hamiltonian_cycle(n, delta).is_valid(g)
                assert g.m == delta + sum(k * (k - 1) // 2 for k in ((delta + 1) // 2, delta // 2)) + (n - delta)

    @pytest.mark.parametrize("n", [60, 80, 100])
    def test_theorem_scale(self, n):
        g = extremal_graph(n, 24)
        assert g.n == n and max_degree(g) == 24 and find_claw(g) is None
        c = find_hamiltonian_cycle(g)
        assert c.is_valid(g)

    def test_networkx_view(self):
        h = to_nx(extremal_graph(20, 6))
        assert nx.is_connected(h) and max(d for _, d in h.degree()) == 6
        # removing v0 leaves a single path-shaped chain through both cliques
        h.remove_node(0)
        assert nx.is_connected(h)


class TestSampler:
    def test_contains_cycle_and_claw_free(self):
        for k in range(300):
            rng = np.random.default_rng([1, k])
            n = int(rng.integers(3, 25))
            s = random_claw_free_hamiltonian(n, int(rng.integers(n, 4 * n)), rng)
            assert not brute_claws(s.graph)
            assert all(s.graph.has_edge(i, (i + 1) % n) for i in range(n))
            assert s.ham.order == tuple(range(n)) and s.ham.is_valid(s.graph)
            assert s.graph.m <= max(s.edge_budget, n)

    def test_budget_n_gives_cycle(self):
        s = random_claw_free_hamiltonian(9, 9, 5)
        assert s.graph == cycle(9) and s.accepted == 0

    def test_reproducible(self):
        a = random_claw_free_hamiltonian(15, 40, 123)
        b = random_claw_free_hamiltonian(15, 40, 123)
        c = random_claw_free_hamiltonian(15, 40, 124)
        assert a == b and a.graph != c.graph

    def test_metadata(self):
        s = random_claw_free_hamiltonian(12, 30, 0)
        meta = s.metadata()
        assert json.loads(json.dumps(meta)) == meta
        assert meta["n"] == 12 and meta["m"] == s.graph.m and meta["delta"] == s.delta
        assert meta["accepted"] == s.graph.m - 12

    def test_small_order_rejected(self):
        with pytest.raises(GraphError):
            random_claw_free_hamiltonian(2, 5, 0)

    def test_mean_degree_is_recorded_not_claimed(self):
        deltas = [random_claw_free_hamiltonian(14, 35, [7, k]).delta for k in range(50)]
        assert 2 <= min(deltas) <= max(deltas) <= 13


@settings(max_examples=300, deadline=None)
@given(n=st.integers(4, 12), seed=st.integers(0, 10**6), data=st.data())
def test_local_claw_check_matches_full_scan(n, seed, data):
    s = random_claw_free_hamiltonian(n, int(1.5 * n), seed)
    g = s.graph
    missing = [(i, j) for j in range(n) for i in range(j) if not g.has_edge(i, j)]
    if not missing:
        return
    u, v = data.draw(st.sampled_from(missing))
    h = graph_from_edges(n, list(g.edges()) + [(u, v)])
    assert _creates_claw(list(g.rows), u, v) == bool(brute_claws(h))


class TestLineGraph:
    def test_star(self):
        assert line_graph(star(3)) == complete(3)

    @pytest.mark.parametrize("n", [3, 5, 8])
    def test_cycle(self, n):
        assert nx.is_isomorphic(to_nx(line_graph(cycle(n))), to_nx(cycle(n)))

    def test_path(self):
        assert line_graph(path(4)) == path(3)

    def test_edgeless(self):
        with pytest.raises(GraphError):
            line_graph(graph_from_edges(3, []))

    def test_matches_networkx(self):
        rng = np.random.default_rng(31)
        for _ in range(100):
            n = int(rng.integers(2, 10))
            h = nx.gnp_random_graph(n, float(rng.uniform(0.3, 0.9)), seed=int(rng.integers(1 << 30)))
            if not h.number_of_edges():
                continue
            ours = to_nx(line_graph(graph_from_edges(n, h.edges())))
            assert nx.is_isomorphic(ours, nx.line_graph(h))


class TestEnumeration:
    def test_three_vertices(self):
        graphs = list(enumerate_small_graphs(3))
        assert len(graphs) == 8
        with_cycle = [g for _, g in graphs if g.m == 3]
        assert len(with_cycle) == 1 and with_cycle[0] == complete(3)

    def test_hamiltonian_filter_four(self):
        got = [g for _, g in enumerate_small_graphs(4, hamiltonian=True)]
        brute = [g for _, g in enumerate_small_graphs(4) if brute_hamiltonian(g)]
        assert got == brute and len(got) == 10

    def test_filters_combine(self):
        for n in range(3, 6):
            got = [m for m, _ in enumerate_small_graphs(n, connected=True, claw_free=True, hamiltonian=True)]
            ref = [
                m for m, g in enumerate_small_graphs(n)
                if nx.is_connected(to_nx(g)) and not brute_claws(g) and brute_hamiltonian(g)
            ]
            assert got == ref

    def test_predicate(self):
        got = list(enumerate_small_graphs(4, predicate=lambda g: g.m == 6))
        assert [g for _, g in got] == [complete(4)]

    def test_counts_and_limit(self):
        assert count_masks(7) == 2_097_152
        assert ENUMERATION_LIMIT == 7
        with pytest.raises(ValueError):
            next(enumerate_small_graphs(8))
