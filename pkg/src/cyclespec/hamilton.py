"""Hamiltonian cycles and paths.

Exact answers come from the subset DP in :mod:`cyclespec._kernels` up to the
exact-mode limit; above it a budgeted backtracker reports ``UNKNOWN`` rather
than an unproven negative.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from . import _exact, _kernels
from .graph import Graph, GraphError, iter_bits, verify_cycle
from .recognition import independent_triple

__all__ = [
    "HamCycle",
    "SearchStatus",
    "HamSearch",
    "SearchBudgetExceeded",
    "PreconditionError",
    "DEFAULT_BUDGET",
    "root_vertex",
    "search_hamiltonian_cycle",
    "find_hamiltonian_cycle",
    "hamiltonian_path_alpha2",
    "find_cycle_of_length",
]

DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class HamCycle:
    """Cyclic vertex order ``v0 v1 ... v_{n-1}``; ``order[0]`` is the root ``v0``."""

    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        if sorted(order) != list(range(len(order))):
            raise ValueError(f"cycle order {order} is not a permutation of 0..{len(order) - 1}")
        object.__setattr__(self, "order", order)

    def __len__(self) -> int:
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i):
        return self.order[i]

    @property
    def root(self) -> int:
        return self.order[0]

    def rooted_at(self, v: int) -> "HamCycle":
        i = self.order.index(v)
        return HamCycle(self.order[i:] + self.order[:i])

    def reversed(self) -> "HamCycle":
        """Opposite orientation, same root."""
        return HamCycle(self.order[:1] + self.order[:0:-1])

    def is_valid(self, g: Graph) -> bool:
        return len(self.order) == g.n and verify_cycle(g, self.order)


def root_vertex(g: Graph) -> int:
    """Smallest-label vertex of maximum degree (the harness's choice of ``v0``)."""
    degs = g.degrees()
    return degs.index(max(degs))


class SearchStatus(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class HamSearch:
    status: SearchStatus
    cycle: Optional[HamCycle] = None
    nodes: int = 0
    method: str = ""


class SearchBudgetExceeded(RuntimeError):
    pass


class PreconditionError(ValueError):
    """An operation's hypothesis fails; ``witness`` explains why."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


def search_hamiltonian_cycle(
    g: Graph,
    method: str = "auto",
    budget: int = DEFAULT_BUDGET,
    limit: int | None = None,
) -> HamSearch:
    """Search for a hamiltonian cycle.

    Parameters
    ----------
    method : {"auto", "dp", "backtrack"}
        ``auto`` uses the subset DP when ``g.n`` is within the exact-mode
        limit and the backtracker otherwise.
    budget : int
        Node budget for the backtracker; exhausting it yields ``UNKNOWN``.

    Returns
    -------
    HamSearch
        On ``FOUND`` the cycle is rooted at :func:`root_vertex`.
    """
    if g.n < 3:
        raise GraphError(f"hamiltonian cycles need at least 3 vertices, got {g.n}")
    if method == "auto":
        method = "dp" if g.n <= _exact.resolve_limit(limit) else "backtrack"
    if min(g.degrees()) < 2 or not g.is_connected():
        return HamSearch(SearchStatus.NOT_FOUND, method="degree/connectivity")
    if method == "dp":
        _exact.check_order(g, limit, "hamiltonian cycle DP")
        reach = _exact.buffers(g.n)[0]
        order = _kernels.ham_cycle(_exact.adjacency(g), g.n, reach)
        if len(order) == 0:
            return HamSearch(SearchStatus.NOT_FOUND, method="dp")
        cyc = HamCycle(order).rooted_at(root_vertex(g))
        return HamSearch(SearchStatus.FOUND, cyc, method="dp")
    if method == "backtrack":
        return _backtrack(g, budget)
    raise ValueError(f"unknown method {method!r}")


def find_hamiltonian_cycle(g: Graph, **kwargs) -> Optional[HamCycle]:
    """Hamiltonian cycle rooted at a maximum-degree vertex, or ``None``.

    Raises :class:`SearchBudgetExceeded` when the backtracker gives up.
    """
    res = search_hamiltonian_cycle(g, **kwargs)
    if res.status is SearchStatus.UNKNOWN:
        raise SearchBudgetExceeded(f"no verdict after {res.nodes} search nodes")
    return res.cycle


def _backtrack(g: Graph, budget: int) -> HamSearch:
    n = g.n
    rows = g.rows
    degs = g.degrees()
    start = degs.index(min(degs))
    sbit = 1 << start
    full = (1 << n) - 1

    def feasible(cur: int, unvisited: int) -> bool:
        if not unvisited:
            return bool((rows[cur] >> start) & 1)
        if not rows[start] & unvisited:
            return False
        ends = unvisited | (1 << cur) | sbit
        for w in iter_bits(unvisited):
            if (rows[w] & ends).bit_count() < 2:
                return False
        return g.component_mask(cur, within=unvisited | (1 << cur)) == unvisited | (1 << cur)

    def moves(cur: int, unvisited: int) -> list[int]:
        ends = unvisited | sbit
        cand = list(iter_bits(rows[cur] & unvisited))
        cand.sort(key=lambda w: ((rows[w] & ends).bit_count(), w))
        return cand

    nodes = 0
    path = [start]
    unvisited = full & ~sbit
    stack = [iter(moves(start, unvisited))]
    while stack:
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            last = path.pop()
            if path:
                unvisited |= 1 << last
            continue
        nodes += 1
        if nodes > budget:
            return HamSearch(SearchStatus.UNKNOWN, nodes=nodes, method="backtrack")
        rest = unvisited & ~(1 << nxt)
        if not feasible(nxt, rest):
            continue
        path.append(nxt)
        unvisited = rest
        if not rest:
            cyc = HamCycle(path).rooted_at(root_vertex(g))
            assert cyc.is_valid(g)
            return HamSearch(SearchStatus.FOUND, cyc, nodes, "backtrack")
        stack.append(iter(moves(nxt, rest)))
    return HamSearch(SearchStatus.NOT_FOUND, nodes=nodes, method="backtrack")


def hamiltonian_path_alpha2(g: Graph) -> tuple[int, ...]:
    """Hamiltonian path of a connected graph with no independent set of size 3.

    Grows a path greedily at both ends.  When both ends are stuck, an
    off-path vertex ``u`` with a path neighbour ``v_i`` exists by
    connectivity; ``u`` misses both ends, so the ends must be adjacent, and
    the path is re-routed as ``u, v_i, ..., v_l, v_1, ..., v_{i-1}``, one
    vertex longer.

    Raises
    ------
    PreconditionError
        If ``g`` is disconnected or has an independent triple (``witness``
        holds the component mask or the triple).
    """
    n = g.n
    if n == 0:
        raise PreconditionError("empty graph")
    if not g.is_connected():
        raise PreconditionError("graph is disconnected", g.component_mask(0))
    triple = independent_triple(g)
    if triple is not None:
        raise PreconditionError(f"independent triple {triple}", triple)
    return _rotate_extend(g)


def _rotate_extend(g: Graph) -> tuple[int, ...]:
    n = g.n
    rows = g.rows
    full = (1 << n) - 1
    path = [0]
    on = 1
    rotations = 0
    while True:
        for _ in range(2):
            free = rows[path[-1]] & ~on
            while free:
                w = (free & -free).bit_length() - 1
                path.append(w)
                on |= 1 << w
                free = rows[w] & ~on
            path.reverse()
        if on == full:
            return tuple(path)
        off = full & ~on
        u = i = -1
        for cand in iter_bits(off):
            touch = rows[cand] & on
            if touch:
                u = cand
                i = next(k for k, v in enumerate(path) if (touch >> v) & 1)
                break
        first, last = path[0], path[-1]
        if not (rows[first] >> last) & 1:
            raise PreconditionError(
                f"ends {first} and {last} non-adjacent to each other and to {u}",
                (u, first, last),
            )
        path = [u] + path[i:] + path[:i]
        on |= 1 << u
        rotations += 1
        assert rotations <= n


def find_cycle_of_length(g: Graph, length: int, limit: int | None = None) -> Optional[tuple[int, ...]]:
    """A cycle on exactly ``length`` vertices (smallest vertex first), or ``None``."""
    if not 3 <= length <= g.n:
        raise ValueError(f"cycle length {length} outside 3..{g.n}")
    _exact.check_order(g, limit, "find_cycle_of_length")
    reach, pc = _exact.buffers(g.n)
    seq = _kernels.cycle_of_length(_exact.adjacency(g), g.n, length, reach, pc)
    if len(seq) == 0:
        return None
    cyc = tuple(int(v) for v in seq)
    assert verify_cycle(g, cyc) and len(cyc) == length
    return cyc
