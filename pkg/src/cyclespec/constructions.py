"""Instance generators."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from .graph import Graph, GraphError, graph_from_edges, graph_from_mask, iter_bits, max_degree
from .hamilton import HamCycle, find_hamiltonian_cycle
from .recognition import find_claw

__all__ = [
    "ExtremalLayout",
    "extremal_layout",
    "extremal_graph",
    "extremal_hamiltonian_cycle",
    "SampledGraph",
    "random_claw_free_hamiltonian",
    "line_graph",
    "ENUMERATION_LIMIT",
    "enumerate_small_graphs",
    "count_masks",
]


@dataclass(frozen=True)
class ExtremalLayout:
    """Vertex labels of the extremal graph: ``v0 = 0``, then the two cliques,
    then the path.  ``attach1``/``attach2`` are the clique vertices joined to
    the path ends (the smallest label of each clique)."""

    n: int
    delta: int
    v0: int
    clique1: tuple[int, ...]
    clique2: tuple[int, ...]
    path: tuple[int, ...]

    @property
    def attach1(self) -> int:
        return self.clique1[0]

    @property
    def attach2(self) -> int:
        return self.clique2[0]


def extremal_layout(n: int, delta: int) -> ExtremalLayout:
    if not (isinstance(n, int) and isinstance(delta, int)) or not n - 2 >= delta >= 2:
        raise ValueError(f"extremal graph needs n - 2 >= delta >= 2, got n={n}, delta={delta}")
    c1 = (delta + 1) // 2
    clique1 = tuple(range(1, 1 + c1))
    clique2 = tuple(range(1 + c1, 1 + delta))
    path = tuple(range(1 + delta, n))
    return ExtremalLayout(n, delta, 0, clique1, clique2, path)


def extremal_graph(n: int, delta: int, check: bool = True) -> Graph:
    """Tight example: a vertex joined to two cliques of orders ``ceil(delta/2)``
    and ``floor(delta/2)``, whose designated vertices are linked by a path on
    ``n - delta - 1`` vertices.

    With ``check`` the result is verified to be claw-free, of order ``n`` and
    maximum degree ``delta``, and hamiltonian via the canonical cycle.
    """
    lay = extremal_layout(n, delta)
    edges = [(lay.v0, c) for c in lay.clique1 + lay.clique2]
    for clique in (lay.clique1, lay.clique2):
        edges += [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    edges += list(zip(lay.path, lay.path[1:]))
    edges.append((lay.attach1, lay.path[0]))
    edges.append((lay.path[-1], lay.attach2))
    g = graph_from_edges(n, edges)
    if check:
        if g.n != n or max_degree(g) != delta or g.degree(lay.v0) != delta:
            raise AssertionError("extremal graph has the wrong order or maximum degree")
        if find_claw(g) is not None:
            raise AssertionError("extremal graph contains a claw")
        if not extremal_hamiltonian_cycle(n, delta).is_valid(g):
            raise AssertionError("canonical cycle of the extremal graph is invalid")
    return g


def extremal_hamiltonian_cycle(n: int, delta: int) -> HamCycle:
    """``v0``, the first clique ending at its attachment, the path, the second
    clique starting at its attachment."""
    lay = extremal_layout(n, delta)
    order = (lay.v0,) + lay.clique1[1:] + (lay.attach1,) + lay.path + lay.clique2
    return HamCycle(order)


@dataclass(frozen=True)
class SampledGraph:
    graph: Graph
    ham: HamCycle
    accepted: int
    rejected: int
    edge_budget: int

    @property
    def delta(self) -> int:
        return max_degree(self.graph)

    def metadata(self) -> dict:
        return {
            "n": self.graph.n,
            "m": self.graph.m,
            "edge_budget": self.edge_budget,
            "accepted": self.accepted,
            "rejected": self.rejected,
            "delta": self.delta,
        }


def _creates_claw(rows: list[int], u: int, v: int) -> bool:
    # A claw created by adding uv must use uv as a centre-leaf edge, so only
    # centres u and v with the other endpoint as a leaf need checking.
    for c, leaf in ((u, v), (v, u)):
        cand = rows[c] & ~rows[leaf] & ~(1 << leaf)
        for a in iter_bits(cand):
            if cand & ~rows[a] & ~((1 << (a + 1)) - 1):
                return True
    return False


def random_claw_free_hamiltonian(
    n: int,
    edge_budget: int,
    seed=None,
    stall_limit: Optional[int] = None,
) -> SampledGraph:
    """Random claw-free graph containing the cycle ``0, 1, ..., n-1``.

    Starting from the cycle, uniformly random non-edges are proposed and
    kept when no claw appears.  Stops at ``edge_budget`` edges, when every
    non-edge is rejected, or after ``stall_limit`` consecutive rejections.
    The sampler is biased (acceptance depends on proposal order) and is
    meant only as a source of test instances.
    """
    if n < 3:
        raise GraphError(f"sampler needs n >= 3, got {n}")
    rng = np.random.default_rng(seed)
    rows = [0] * n
    for i in range(n):
        j = (i + 1) % n
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    m = n
    pool = [(i, j) for j in range(n) for i in range(j) if not (rows[i] >> j) & 1]
    if stall_limit is None:
        stall_limit = 4 * len(pool) + 16
    accepted = rejected = stall = 0
    while m < edge_budget and pool and stall < stall_limit:
        k = int(rng.integers(len(pool)))
        u, v = pool[k]
        if _creates_claw(rows, u, v):
            rejected += 1
            stall += 1
            continue
        pool[k] = pool[-1]
        pool.pop()
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        m += 1
        accepted += 1
        stall = 0
    g = Graph(n, rows)
    return SampledGraph(g, HamCycle(range(n)), accepted, rejected, edge_budget)


def line_graph(h: Graph) -> Graph:
    """Line graph of ``h``; vertex ``k`` is the ``k``-th edge of ``h.edges()``."""
    edges = list(h.edges())
    if not edges:
        raise GraphError("line graph of an edgeless graph is empty")
    incident: list[list[int]] = [[] for _ in range(h.n)]
    for k, (u, v) in enumerate(edges):
        incident[u].append(k)
        incident[v].append(k)
    rows = [0] * len(edges)
    for group in incident:
        mask = 0
        for k in group:
            mask |= 1 << k
        for k in group:
            rows[k] |= mask & ~(1 << k)
    return Graph(len(edges), rows)


ENUMERATION_LIMIT = 7


def count_masks(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def enumerate_small_graphs(
    n: int,
    connected: bool = False,
    hamiltonian: bool = False,
    claw_free: bool = False,
    predicate: Optional[Callable[[Graph], bool]] = None,
    limit: int = ENUMERATION_LIMIT,
) -> Iterator[tuple[int, Graph]]:
    """All labelled graphs on ``n`` vertices as ``(edge_mask, graph)`` pairs.

    Masks are counted upward in graph6 pair order.  Filters run cheapest
    first; there is no isomorphism rejection.
    """
    if n > limit:
        raise ValueError(f"exhaustive enumeration is limited to n <= {limit}, got {n}")
    for mask in range(count_masks(n)):
        g = graph_from_mask(n, mask)
        if connected and not g.is_connected():
            continue
        if claw_free and find_claw(g) is not None:
            continue
        if hamiltonian and (n < 3 or find_hamiltonian_cycle(g) is None):
            continue
        if predicate is not None and not predicate(g):
            continue
        yield mask, g
