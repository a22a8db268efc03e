"""Structural predicates: claws, neighbourhood dichotomy, A/B/X partition,
bipartiteness and independence number at most two."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph, iter_bits

__all__ = [
    "ClawError",
    "PartitionError",
    "SplitKind",
    "NeighborhoodSplit",
    "ABXPartition",
    "BipartiteResult",
    "find_claw",
    "find_claw_at",
    "is_claw_free",
    "neighborhood_split",
    "abx_partition",
    "is_bipartite",
    "independent_triple",
    "independence_at_most_two",
]


class ClawError(ValueError):
    """The input contains an induced claw where a claw-free graph was required.

    Attributes
    ----------
    claw : tuple
        ``(center, (leaf, leaf, leaf))``.
    """

    def __init__(self, claw: tuple[int, tuple[int, int, int]], message: str | None = None):
        center, leaves = claw
        super().__init__(message or f"induced claw centred at {center} with leaves {leaves}")
        self.claw = claw


class PartitionError(ValueError):
    pass


def find_claw_at(g: Graph, center: int) -> Optional[tuple[int, int, int]]:
    """Lexicographically first triple of pairwise non-adjacent neighbours of ``center``."""
    rows = g.rows
    nbrs = list(iter_bits(rows[center]))
    nb_mask = rows[center]
    for i, a in enumerate(nbrs):
        rest_a = nb_mask & ~rows[a] & ~((1 << (a + 1)) - 1)
        for b in iter_bits(rest_a):
            rest_b = rest_a & ~rows[b] & ~((1 << (b + 1)) - 1)
            if rest_b:
                c = (rest_b & -rest_b).bit_length() - 1
                return (a, b, c)
    return None


def find_claw(g: Graph) -> Optional[tuple[int, tuple[int, int, int]]]:
    """Return the first induced claw ``(center, (a, b, c))`` or ``None``.

    Centres are scanned in increasing label order and leaf triples
    lexicographically, so the witness is deterministic.
    """
    for v in range(g.n):
        if g.degree(v) >= 3:
            leaves = find_claw_at(g, v)
            if leaves is not None:
                return v, leaves
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


class SplitKind(enum.Enum):
    CONNECTED = "connected"
    TWO_CLIQUES = "two_cliques"


@dataclass(frozen=True)
class NeighborhoodSplit:
    """Shape of ``G[N(center)]`` in a claw-free graph.

    For ``TWO_CLIQUES`` the cliques are reported with ``clique_a`` holding the
    component of the smallest neighbour; callers that need a particular
    orientation (for example "the clique containing v1") swap them.
    """

    center: int
    kind: SplitKind
    clique_a: frozenset[int] = frozenset()
    clique_b: frozenset[int] = frozenset()

    def clique_of(self, v: int) -> frozenset[int]:
        if v in self.clique_a:
            return self.clique_a
        if v in self.clique_b:
            return self.clique_b
        raise KeyError(v)

    def oriented(self, v: int) -> "NeighborhoodSplit":
        """Same split with ``clique_a`` the clique containing ``v``."""
        if self.kind is not SplitKind.TWO_CLIQUES or v in self.clique_a:
            return self
        return NeighborhoodSplit(self.center, self.kind, self.clique_b, self.clique_a)


def neighborhood_split(g: Graph, v: int) -> NeighborhoodSplit:
    """Classify ``G[N(v)]`` as connected or as two disjoint cliques.

    Raises
    ------
    ClawError
        If a claw is centred at ``v``; then the dichotomy does not hold.
    ValueError
        If ``v`` is isolated.
    """
    nb = g.neighbor_mask(v)
    if not nb:
        raise ValueError(f"vertex {v} has no neighbours")
    leaves = find_claw_at(g, v)
    if leaves is not None:
        raise ClawError((v, leaves))
    first = (nb & -nb).bit_length() - 1
    comp = g.component_mask(first, within=nb)
    if comp == nb:
        return NeighborhoodSplit(v, SplitKind.CONNECTED)
    other = nb & ~comp
    second = (other & -other).bit_length() - 1
    comp_b = g.component_mask(second, within=nb)
    a, b = frozenset(iter_bits(comp)), frozenset(iter_bits(comp_b))
    # Without a claw at v there are at most two components and each is a clique.
    assert comp | comp_b == nb and g.is_clique(a) and g.is_clique(b)
    return NeighborhoodSplit(v, SplitKind.TWO_CLIQUES, a, b)


@dataclass(frozen=True)
class ABXPartition:
    """Neighbours of the root split by adjacency to its two cycle-neighbours.

    ``rest`` collects neighbours of the root adjacent to neither; it is empty
    for claw-free graphs but reported instead of assumed.
    """

    root: int
    first: int
    last: int
    A: frozenset[int]
    B: frozenset[int]
    X: frozenset[int]
    rest: frozenset[int]

    def part_of(self, v: int) -> str:
        for name in ("A", "B", "X"):
            if v in getattr(self, name):
                return name
        raise KeyError(v)


def abx_partition(g: Graph, ham: Sequence[int]) -> ABXPartition:
    """Partition ``N(v0)`` along the hamiltonian cycle ``ham`` rooted at ``v0``.

    ``A`` holds ``v1`` and common neighbours of ``v0`` and ``v1`` not adjacent to
    ``v_{n-1}``; ``B`` symmetrically; ``X`` the common neighbours of all three.
    """
    order = tuple(ham)
    v0, v1, vl = order[0], order[1], order[-1]
    if g.has_edge(v1, vl):
        raise PartitionError(
            f"partition precondition violated: {v1} and {vl} are adjacent"
        )
    rows = g.rows
    n0, n1, nl = rows[v0], rows[v1], rows[vl]
    a = (1 << v1) | (n0 & n1 & ~nl)
    b = (1 << vl) | (n0 & nl & ~n1)
    x = n0 & n1 & nl
    rest = n0 & ~(a | b | x)
    sets = [frozenset(iter_bits(m)) for m in (a, b, x, rest)]
    return ABXPartition(v0, v1, vl, *sets)


@dataclass(frozen=True)
class BipartiteResult:
    bipartite: bool
    coloring: Optional[tuple[int, ...]] = None
    odd_cycle: Optional[tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteResult:
    """BFS 2-colouring, or an odd cycle witnessing that none exists."""
    n = g.n
    color = [-1] * n
    parent = [-1] * n
    depth = [0] * n
    for s in range(n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = [s]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            for w in iter_bits(g.neighbor_mask(u)):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(False, odd_cycle=_odd_cycle(u, w, parent, depth))
    return BipartiteResult(True, coloring=tuple(color))


def _odd_cycle(u: int, w: int, parent: list[int], depth: list[int]) -> tuple[int, ...]:
    # u and w share a colour, so their tree paths to the common ancestor have
    # equal parity and the edge uw closes an odd cycle.
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a = parent[a]
        b = parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return tuple(left + right[::-1])


def independent_triple(g: Graph) -> Optional[tuple[int, int, int]]:
    """Lexicographically first set of three pairwise non-adjacent vertices."""
    rows = g.rows
    full = (1 << g.n) - 1
    for a in range(g.n):
        rest_a = full & ~rows[a] & ~((1 << (a + 1)) - 1)
        for b in iter_bits(rest_a):
            rest_b = rest_a & ~rows[b] & ~((1 << (b + 1)) - 1)
            if rest_b:
                return (a, b, (rest_b & -rest_b).bit_length() - 1)
    return None


def independence_at_most_two(g: Graph) -> bool:
    return independent_triple(g) is None
