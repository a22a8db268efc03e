import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclespec import (
    GraphError,
    HamCycle,
    extremal_graph,
    find_cycle_of_length,
    find_hamiltonian_cycle,
    graph_from_edges,
    graph_from_mask,
    hamiltonian_path_alpha2,
    max_degree,
    neighborhood_split,
    search_hamiltonian_cycle,
    verify_cycle,
    verify_path,
)
from cyclespec.hamilton import (
    PreconditionError,
    SearchBudgetExceeded,
    SearchStatus,
    root_vertex,
)
from cyclespec.constructions import extremal_layout
from cyclespec.recognition import SplitKind
from oracles import brute_hamiltonian, nx_spectrum, random_graph
from shapes import bowtie, complete, cycle, path, petersen, sampled


class TestHamCycle:
    def test_rotation_and_reversal(self):
        c = HamCycle((3, 1, 4, 0, 2))
        assert c.rooted_at(0).order == (0, 2, 3, 1, 4)
        assert c.reversed().order == (3, 2, 0, 4, 1)
        assert c.root == 3 and len(c) == 5

    def test_rejects_repeats(self):
        with pytest.raises(ValueError):
            HamCycle((0, 1, 1))

    def test_root_vertex_is_smallest_max_degree(self):
        g = graph_from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3), (2, 4)])
        assert root_vertex(g) == 1


class TestFindHamiltonianCycle:
    @pytest.mark.parametrize("n", [3, 4, 7, 12])
    def test_cycle_graph(self, n):
        c = find_hamiltonian_cycle(cycle(n))
        assert set(c.order) == set(range(n)) and c.is_valid(cycle(n))

    @pytest.mark.parametrize("method", ["dp", "backtrack"])
    def test_petersen(self, method):
        res = search_hamiltonian_cycle(petersen(), method=method)
        assert res.status is SearchStatus.NOT_FOUND

    def test_extremal_cycle_shape(self):
        g = extremal_graph(14, 4)
        lay = extremal_layout(14, 4)
        c = find_hamiltonian_cycle(g)
        assert c.root == 0 and c.is_valid(g)
        body = list(c.order[1:])
        if body[0] in lay.clique2:
            body.reverse()
        k1, k2 = len(lay.clique1), len(lay.clique2)
        assert set(body[:k1]) == set(lay.clique1)
        assert body[k1:k1 + len(lay.path)] == list(lay.path)
        assert set(body[-k2:]) == set(lay.clique2)

    def test_rooted_at_max_degree(self):
        rng = np.random.default_rng(1)
        for _ in range(100):
            g = random_graph(rng, 9, 0.5)
            c = find_hamiltonian_cycle(g)
            if c is not None:
                assert g.degree(c.root) == max_degree(g) and c.root == root_vertex(g)

    def test_small_order_rejected(self):
        with pytest.raises(GraphError):
            find_hamiltonian_cycle(complete(2))

    def test_budget_gives_unknown(self):
        g = petersen()
        res = search_hamiltonian_cycle(g, method="backtrack", budget=3)
        assert res.status is SearchStatus.UNKNOWN and res.cycle is None
        with pytest.raises(SearchBudgetExceeded):
            find_hamiltonian_cycle(g, method="backtrack", budget=3)

    def test_large_extremal_uses_backtracker(self):
        g = extremal_graph(60, 24)
        res = search_hamiltonian_cycle(g)
        assert res.status is SearchStatus.FOUND and res.method == "backtrack"
        assert res.cycle.is_valid(g) and res.cycle.root == 0

    @pytest.mark.parametrize("method", ["dp", "backtrack"])
    def test_agrees_with_permutation_search_exhaustive(self, method):
        for n in range(3, 7):
            for mask in range(1 << (n * (n - 1) // 2)):
                g = graph_from_mask(n, mask)
                res = search_hamiltonian_cycle(g, method=method)
                assert (res.status is SearchStatus.FOUND) == brute_hamiltonian(g)
                if res.cycle is not None:
                    assert res.cycle.is_valid(g)

    @pytest.mark.parametrize("method", ["dp", "backtrack"])
    def test_agrees_with_permutation_search_n7(self, method):
        rng = np.random.default_rng(77)
        for _ in range(1500):
            g = graph_from_mask(7, int(rng.integers(0, 1 << 21)))
            res = search_hamiltonian_cycle(g, method=method)
            assert (res.status is SearchStatus.FOUND) == brute_hamiltonian(g)

    def test_dp_and_backtracker_agree_mid_range(self):
        rng = np.random.default_rng(3)
        for _ in range(150):
            n = int(rng.integers(8, 15))
            g = random_graph(rng, n, float(rng.uniform(0.15, 0.45)))
            a = search_hamiltonian_cycle(g, method="dp").status
            b = search_hamiltonian_cycle(g, method="backtrack").status
            assert a == b


class TestAlpha2Path:
    def test_complete(self):
        p = hamiltonian_path_alpha2(complete(4))
        assert sorted(p) == [0, 1, 2, 3] and verify_path(complete(4), p)

    def test_bowtie(self):
        g = bowtie()
        p = hamiltonian_path_alpha2(g)
        assert len(p) == 5 and verify_path(g, p)
        assert p[2] == 2

    def test_complement_of_perfect_matching(self):
        g = graph_from_edges(8, [(i, j) for j in range(8) for i in range(j) if j != i + 4])
        p = hamiltonian_path_alpha2(g)
        assert len(p) == 8 and verify_path(g, p)

    def test_disconnected_witness(self):
        g = graph_from_edges(4, [(0, 1), (2, 3)])
        with pytest.raises(PreconditionError, match="disconnected") as info:
            hamiltonian_path_alpha2(g)
        assert info.value.witness == 0b0011

    def test_independent_triple_witness(self):
        with pytest.raises(PreconditionError) as info:
            hamiltonian_path_alpha2(path(5))
        assert info.value.witness == (0, 2, 4)

    def test_connected_neighbourhoods_of_claw_free_graphs(self):
        checked = 0
        for s in sampled(150, 6, 16, seed=21):
            g = s.graph
            for v in range(g.n):
                if neighborhood_split(g, v).kind is SplitKind.CONNECTED:
                    nb = g.neighbors(v)
                    sub = g.induced_subgraph(nb)
                    p = hamiltonian_path_alpha2(sub)
                    assert sorted(p) == list(range(len(nb))) and verify_path(sub, p)
                    checked += 1
        assert checked > 100


class TestCycleOfLength:
    def test_triangle_in_k4(self):
        c = find_cycle_of_length(complete(4), 3)
        assert len(c) == 3 and verify_cycle(complete(4), c)

    def test_absent(self):
        assert find_cycle_of_length(cycle(6), 4) is None
        assert find_cycle_of_length(extremal_graph(14, 4), 11) is None

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            find_cycle_of_length(cycle(6), 7)
        with pytest.raises(ValueError):
            find_cycle_of_length(cycle(6), 2)

    def test_agrees_with_networkx_cycles(self):
        rng = np.random.default_rng(13)
        for _ in range(200):
            g = random_graph(rng, int(rng.integers(3, 9)), float(rng.uniform(0.2, 0.7)))
            expected = nx_spectrum(g)
            for length in range(3, g.n + 1):
                c = find_cycle_of_length(g, length)
                assert (c is not None) == (length in expected)
                if c is not None:
                    assert len(c) == length and verify_cycle(g, c)


@settings(max_examples=150, deadline=None)
@given(n=st.integers(3, 30), seed=st.integers(0, 2**32 - 1))
def test_sampler_cycles_are_found(n, seed):
    s = sampled(1, n, n, seed=seed)[0]
    c = find_hamiltonian_cycle(s.graph)
    assert c is not None and c.is_valid(s.graph)
