"""Constructive witnesses for cycle lengths.

Every cycle produced here is checked edge by edge before it is returned, so a
:class:`Certificate` can be re-verified by anyone holding the graph.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

from .graph import Graph, max_degree, verify_cycle
from .hamilton import (
    HamCycle,
    PreconditionError,
    SearchStatus,
    hamiltonian_path_alpha2,
    root_vertex,
    search_hamiltonian_cycle,
)
from .recognition import (
    ABXPartition,
    ClawError,
    NeighborhoodSplit,
    SplitKind,
    find_claw,
    neighborhood_split,
)
from .spectrum import theorem1_lower_bound

__all__ = [
    "verify_cycle",
    "CertificationError",
    "PathCollection",
    "InsertionResult",
    "CertEntry",
    "Certificate",
    "lemma1_cycles",
    "lemma2_long_cycles",
    "path_decomposition",
    "oriented_collection",
    "classify_paths",
    "prefix_order",
    "insertion_cycles",
    "clique_cycles",
    "certify_spectrum_lower_bound",
]

log = logging.getLogger(__name__)


class CertificationError(ValueError):
    pass


def _checked(g: Graph, cyc: Sequence[int], length: int) -> tuple[int, ...]:
    cyc = tuple(cyc)
    if len(cyc) != length or not verify_cycle(g, cyc):
        raise AssertionError(f"internal error: invalid {length}-cycle {cyc}")
    return cyc


def lemma1_cycles(g: Graph, c: Sequence[int], u: int) -> list[tuple[int, tuple[int, ...]]]:
    """Cycles of every length ``3..n`` through a high-degree vertex off an
    ``(n-1)``-cycle.

    With ``m = n - 1`` cycle positions and more than ``m/2`` of them adjacent
    to ``u``, for every shift ``d`` some position ``i`` has both ``c[i]`` and
    ``c[i+d]`` adjacent to ``u`` (indices mod ``m``).  The arc
    ``c[i..i+d]`` plus ``u`` is a cycle on ``d + 2`` vertices.
    """
    n = g.n
    c = tuple(c)
    m = len(c)
    if m != n - 1 or set(c) | {u} != set(range(n)) or u in c:
        raise PreconditionError("c must be a cycle through every vertex except u")
    if not verify_cycle(g, c):
        raise PreconditionError("c is not a cycle of the graph")
    if 2 * g.degree(u) <= m:
        raise PreconditionError(
            f"degree of {u} is {g.degree(u)}, not more than (n-1)/2 = {m / 2}",
            g.degree(u),
        )
    rows = g.rows
    hit = [bool((rows[u] >> v) & 1) for v in c]
    out = []
    for length in range(3, n + 1):
        d = length - 2
        i = next(i for i in range(m) if hit[i] and hit[(i + d) % m])
        cyc = tuple(c[(i + k) % m] for k in range(d + 1)) + (u,)
        out.append((length, _checked(g, cyc, length)))
    return out


def lemma2_long_cycles(g: Graph, ham: Sequence[int]) -> list[tuple[int, tuple[int, ...]]]:
    """Long cycles from chords at the root of a hamiltonian cycle.

    For each neighbour ``v_i`` of ``v0`` other than ``v1`` and ``v_{n-1}`` the
    longer of ``v0 v_i v_{i+1} ... v_{n-1}`` and ``v0 v_i v_{i-1} ... v1`` is
    kept; every length occurs for at most two chords, so together with the
    hamiltonian cycle at least ``ceil(delta/2)`` distinct lengths, all at
    least ``ceil((n+2)/2)``, are produced.
    """
    order = tuple(ham)
    n = g.n
    if len(order) != n or not verify_cycle(g, order):
        raise PreconditionError("not a hamiltonian cycle of the graph")
    v0 = order[0]
    delta = max_degree(g)
    if g.degree(v0) != delta:
        raise PreconditionError(f"root {v0} has degree {g.degree(v0)}, maximum is {delta}")
    pos = {v: i for i, v in enumerate(order)}
    seen: dict[int, tuple[int, ...]] = {}
    for w in g.neighbors(v0):
        i = pos[w]
        if i in (1, n - 1):
            continue
        if n - i + 1 >= i + 1:
            cyc = (v0,) + order[i:]
        else:
            cyc = (v0,) + order[i:0:-1]
        seen.setdefault(len(cyc), _checked(g, cyc, len(cyc)))
    seen.setdefault(n, order)
    out = sorted(seen.items())
    assert len(out) >= (delta + 1) // 2
    assert all(2 * length >= n + 2 for length, _ in out)
    return out


@dataclass(frozen=True)
class PathCollection:
    """Vertex-disjoint paths with ends in ``endpoints`` and interiors outside
    the closed neighbourhood of ``center``.

    ``crossing[k]`` tells whether path ``k`` joins two different parts;
    ``reversed_`` is filled only by :func:`classify_paths`.  ``removed``
    lists vertices dropped by shortcuts and ``discarded`` the part vertices
    left on no path.
    """

    center: int
    endpoints: frozenset[int]
    paths: tuple[tuple[int, ...], ...]
    crossing: tuple[bool, ...] = ()
    reversed_: tuple[Optional[bool], ...] = ()
    removed: tuple[int, ...] = ()
    discarded: tuple[int, ...] = ()

    @property
    def k(self) -> int:
        return len(self.paths)

    @property
    def internal_counts(self) -> tuple[int, ...]:
        return tuple(len(p) - 2 for p in self.paths)

    def internal_vertices(self) -> set[int]:
        return {v for p in self.paths for v in p[1:-1]}


def path_decomposition(g: Graph, ham: Sequence[int], split: NeighborhoodSplit) -> PathCollection:
    """Split a hamiltonian cycle at a two-clique neighbourhood and shortcut.

    ``v0`` and the cycle edges inside either clique are removed and the rest
    is cut at clique vertices.  Whenever a clique vertex ends two of the
    resulting paths, claw-freeness at that vertex forces its two path
    neighbours to be adjacent and the paths are merged through that edge,
    dropping the vertex.  Order-1 paths are discarded.

    Raises
    ------
    ClawError
        When a forced edge is missing; the claw is centred at the shortcut
        vertex with leaves ``v0`` and the two path neighbours.
    """
    order = tuple(ham)
    n = g.n
    v0 = order[0]
    if split.kind is not SplitKind.TWO_CLIQUES or split.center != v0:
        raise ValueError("path_decomposition needs a two-clique split at the cycle root")
    if len(order) != n or not verify_cycle(g, order):
        raise ValueError("not a hamiltonian cycle of the graph")
    split = split.oriented(order[1])
    a_set, b_set = split.clique_a, split.clique_b
    parts = a_set | b_set
    line = order[1:]
    marks = [i for i, v in enumerate(line) if v in parts]
    segments = []
    for p, q in zip(marks, marks[1:]):
        if q - p >= 2:
            segments.append(line[p:q + 1])
        elif (line[p] in a_set) != (line[q] in a_set):
            raise AssertionError("edge between the two cliques")

    rows = g.rows
    paths: list[tuple[int, ...]] = []
    removed: list[int] = []
    for seg in segments:
        if paths and paths[-1][-1] == seg[0]:
            prev = paths[-1]
            v, x1, y1 = seg[0], prev[-2], seg[1]
            if not (rows[x1] >> y1) & 1:
                raise ClawError((v, tuple(sorted((v0, x1, y1)))))
            paths[-1] = prev[:-1] + seg[1:]
            removed.append(v)
        else:
            paths.append(tuple(seg))

    ends = {v for p in paths for v in (p[0], p[-1])}
    discarded = tuple(sorted(parts - ends - set(removed)))
    crossing = tuple((p[0] in a_set) != (p[-1] in a_set) for p in paths)
    coll = PathCollection(
        v0, frozenset(parts), tuple(paths), crossing, (None,) * len(paths),
        tuple(removed), discarded,
    )
    _check_decomposition(g, coll)
    log.debug(
        "path decomposition: k=%d, internal sum=%d (n - delta - 1 = %d), shortcuts=%d",
        coll.k, sum(coll.internal_counts), n - len(parts) - 1, len(removed),
    )
    return coll


def _check_decomposition(g: Graph, coll: PathCollection) -> None:
    seen: set[int] = set()
    for p in coll.paths:
        assert len(p) >= 3 and _is_path(g, p)
        assert p[0] in coll.endpoints and p[-1] in coll.endpoints
        assert not (set(p[1:-1]) & coll.endpoints) and coll.center not in p
        assert not (seen & set(p))
        seen |= set(p)
    internal = coll.internal_vertices()
    assert len(internal) + 1 + len(coll.endpoints) == g.n
    assert internal | {coll.center} | coll.endpoints == set(range(g.n))


def _is_path(g: Graph, p: Sequence[int]) -> bool:
    rows = g.rows
    return len(set(p)) == len(p) and all((rows[a] >> b) & 1 for a, b in zip(p, p[1:]))


def oriented_collection(g: Graph, ham: Sequence[int], abx: ABXPartition) -> PathCollection:
    """Oriented paths of the hamiltonian cycle cut at ``A``, ``B`` and ``X``.

    ``v0`` and every cycle edge with both ends in the same part are removed;
    the remainder is cut at part vertices.  Paths keep the orientation of
    ``ham`` and may have order 2 when they cross.
    """
    order = tuple(ham)
    if order[0] != abx.root:
        raise ValueError("cycle is not rooted at the partition root")
    label = {}
    for name in ("A", "B", "X"):
        for v in getattr(abx, name):
            label[v] = name
    line = order[1:]
    marks = [i for i, v in enumerate(line) if v in label]
    paths = []
    for p, q in zip(marks, marks[1:]):
        if q - p == 1 and label[line[p]] == label[line[q]]:
            continue
        paths.append(tuple(line[p:q + 1]))
    return PathCollection(abx.root, frozenset(label), tuple(paths))


def classify_paths(coll: PathCollection, abx: ABXPartition, forward: bool = True) -> PathCollection:
    """Tag each oriented path as crossing and/or reversed.

    A path is crossing when its ends lie in two different parts among
    ``A``, ``B``, ``X`` and reversed when it starts in ``B`` or ``X`` and ends
    in ``A`` or ``X``.  ``forward=False`` reads every path backwards.
    """
    crossing, rev = [], []
    for p in coll.paths:
        start, end = (p[0], p[-1]) if forward else (p[-1], p[0])
        try:
            s, e = abx.part_of(start), abx.part_of(end)
        except KeyError as exc:
            raise ValueError(f"path end {exc.args[0]} lies outside A, B and X") from None
        crossing.append(s != e)
        rev.append(s in ("B", "X") and e in ("A", "X"))
    return replace(coll, crossing=tuple(crossing), reversed_=tuple(rev))


def prefix_order(coll: PathCollection) -> list[int]:
    """Indices of the paths: the first crossing path, then the rest by
    decreasing number of internal vertices (ties by position)."""
    idx = list(range(coll.k))
    first = next((k for k in idx if coll.crossing[k]), None)
    rest = [k for k in idx if k != first]
    rest.sort(key=lambda k: -coll.internal_counts[k])
    return ([first] if first is not None else []) + rest


@dataclass(frozen=True)
class InsertionResult:
    cycles: list[tuple[int, tuple[int, ...]]]
    claimed: tuple[int, int]
    diagnostic: Optional[str] = None

    @property
    def lengths(self) -> list[int]:
        return [l for l, _ in self.cycles]


def clique_cycles(g: Graph, v0: int, clique: Sequence[int]) -> list[tuple[int, tuple[int, ...]]]:
    """Cycles ``v0, c_1, ..., c_k`` inside ``{v0}`` plus a clique of neighbours."""
    members = sorted(clique)
    return [(k + 1, _checked(g, (v0,) + tuple(members[:k]), k + 1)) for k in range(2, len(members) + 1)]


def insertion_cycles(
    g: Graph,
    v0: int,
    split: NeighborhoodSplit,
    coll: PathCollection,
    i: int,
    order: Optional[Sequence[int]] = None,
) -> InsertionResult:
    """Cycles through ``v0``, the first ``i`` paths of ``coll`` and a varying
    number of further clique vertices.

    The paths are chained so that consecutive path ends share a clique
    (crossing paths switch cliques, the others do not) and the unused clique
    vertices are threaded into a visit of their clique; this yields every
    length from ``1 + 2i + sum p_j`` to ``1 + delta + sum p_j``.  When the
    chosen paths contain no crossing path the achievable range may be
    shorter, which is reported in ``diagnostic``.
    """
    a_set, b_set = split.clique_a, split.clique_b
    delta = len(a_set) + len(b_set)
    if i == 0:
        big = max((a_set, b_set), key=lambda c: (len(c), -min(c)))
        cyc = clique_cycles(g, v0, big)
        return InsertionResult(cyc, (3, len(big) + 1))
    order = list(order) if order is not None else prefix_order(coll)
    if i > len(order):
        raise ValueError(f"prefix size {i} exceeds the {len(order)} available paths")
    chosen = [coll.paths[k] for k in order[:i]]
    psum = sum(len(p) - 2 for p in chosen)
    lo, hi = 1 + 2 * i + psum, 1 + delta + psum
    used = {v for p in chosen for v in (p[0], p[-1])}
    extra_a = sorted(a_set - used)
    extra_b = sorted(b_set - used)

    def side(v: int) -> str:
        return "A" if v in a_set else "B"

    cross = [p for p in chosen if side(p[0]) != side(p[-1])]
    same_a = [p for p in chosen if side(p[0]) == side(p[-1]) == "A"]
    same_b = [p for p in chosen if side(p[0]) == side(p[-1]) == "B"]

    def orient(p, start_side):
        return p if side(p[0]) == start_side else p[::-1]

    diagnostic = None
    if cross:
        head = same_a + [orient(cross[0], "A")]
        tail = list(same_b)
        cur = "B"
        for p in cross[1:]:
            tail.append(orient(p, cur))
            cur = "A" if cur == "B" else "B"
        slots = [extra_a, extra_b]
    else:
        if same_a and same_b:
            return InsertionResult(
                [], (lo, hi),
                "no crossing path among the chosen paths and both cliques occur",
            )
        head = same_a or same_b
        tail = []
        slots = [extra_a if same_a else extra_b, []]
        if len(slots[0]) < hi - lo:
            diagnostic = (
                f"no crossing path: only one clique is visited, lengths capped at "
                f"{lo + len(slots[0])} instead of {hi}"
            )

    out = []
    for t in range(len(slots[0]) + len(slots[1]) + 1):
        na = min(t, len(slots[0]))
        nb = t - na
        seq = [v0] + slots[0][:na]
        for p in head:
            seq.extend(p)
        seq.extend(slots[1][:nb])
        for p in tail:
            seq.extend(p)
        out.append((len(seq), _checked(g, seq, lo + t)))
    return InsertionResult(out, (lo, hi), diagnostic)


@dataclass(frozen=True)
class CertEntry:
    length: int
    cycle: tuple[int, ...]
    source: str


@dataclass(frozen=True)
class Certificate:
    """Verified cycles of distinct lengths in a graph of order ``n``."""

    n: int
    delta: int
    target: int
    entries: tuple[CertEntry, ...]
    notes: tuple[str, ...] = field(default=())

    @property
    def certified_count(self) -> int:
        return len({e.length for e in self.entries})

    @property
    def reached(self) -> bool:
        return self.certified_count >= self.target

    @property
    def lengths(self) -> list[int]:
        return [e.length for e in self.entries]

    def verify(self, g: Graph) -> bool:
        lengths = [e.length for e in self.entries]
        return len(set(lengths)) == len(lengths) and all(
            len(e.cycle) == e.length and verify_cycle(g, e.cycle) for e in self.entries
        )

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "delta": self.delta,
            "target": self.target,
            "reached": self.reached,
            "certified_count": self.certified_count,
            "entries": [
                {"length": e.length, "cycle": list(e.cycle), "source": e.source}
                for e in self.entries
            ],
        }


def certify_spectrum_lower_bound(
    g: Graph,
    ham: Optional[Sequence[int]] = None,
    budget: int = 2_000_000,
) -> Certificate:
    """Certify cycle lengths of a claw-free hamiltonian graph constructively.

    Stages, each adding only lengths not yet witnessed:

    1. short cycles in ``v0`` plus its larger neighbourhood clique (two-clique
       case) or along a hamiltonian path of ``G[N(v0)]`` (connected case);
    2. insertion cycles over the prefixes of the shortcut path collection
       (two-clique case);
    3. long cycles from chords at ``v0``;
    4. all lengths at once when some vertex of degree above ``(n-1)/2`` has
       adjacent cycle neighbours.

    The target is :func:`theorem1_lower_bound`; the certificate reports
    whether it was reached and is returned either way.
    """
    claw = find_claw(g)
    if claw is not None:
        raise ClawError(claw)
    n = g.n
    if n < 3:
        raise CertificationError("graphs with fewer than 3 vertices have no cycles")
    if ham is None:
        res = search_hamiltonian_cycle(g, budget=budget)
        if res.status is not SearchStatus.FOUND:
            raise CertificationError(f"no hamiltonian cycle available ({res.status.value})")
        cyc = res.cycle
    else:
        try:
            cyc = HamCycle(tuple(ham))
        except ValueError:
            raise CertificationError("supplied sequence is not a permutation of the vertices") from None
        if not cyc.is_valid(g):
            raise CertificationError("supplied sequence is not a hamiltonian cycle")
    cyc = cyc.rooted_at(root_vertex(g))
    order = cyc.order
    v0 = order[0]
    entries: dict[int, CertEntry] = {}
    notes: list[str] = []

    def add(items, source):
        for length, c in items:
            if length not in entries:
                entries[length] = CertEntry(length, c, source)

    split = neighborhood_split(g, v0)
    if split.kind is SplitKind.TWO_CLIQUES:
        add(insertion_cycles(g, v0, split, None, 0).cycles, "clique")
        coll = path_decomposition(g, order, split)
        split_a = split.oriented(order[1])
        seq = prefix_order(coll)
        for i in range(1, coll.k + 1):
            res = insertion_cycles(g, v0, split_a, coll, i, seq)
            if res.diagnostic:
                notes.append(f"insertion prefix {i}: {res.diagnostic}")
            add(res.cycles, f"insertion[{i}]")
    else:
        nbrs = g.neighbors(v0)
        sub = g.induced_subgraph(nbrs)
        hp = [nbrs[j] for j in hamiltonian_path_alpha2(sub)]
        add(((k + 1, _checked(g, [v0] + hp[:k], k + 1)) for k in range(2, len(hp) + 1)), "neighborhood-path")
    add(lemma2_long_cycles(g, order), "long-arc")
    if n >= 4:
        rows = g.rows
        for j, u in enumerate(order):
            if 2 * g.degree(u) > n - 1 and (rows[order[j - 1]] >> order[(j + 1) % n]) & 1:
                rest = order[j + 1:] + order[:j]
                add(lemma1_cycles(g, rest, u), "pigeonhole")
                break
    target = theorem1_lower_bound(n, max_degree(g))
    ordered = tuple(entries[l] for l in sorted(entries))
    return Certificate(n, max_degree(g), target, ordered, tuple(notes))
