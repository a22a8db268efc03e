"""Finite simple undirected graphs on dense integer labels, plus graph6 I/O.

Adjacency is stored as one Python ``int`` bit row per vertex, so neighbourhood
intersections and subset tests are single machine-word operations for the
graph sizes this package targets.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "graph_from_edges",
    "graph_from_mask",
    "decode_graph6",
    "encode_graph6",
    "max_degree",
    "iter_bits",
    "bits_of",
    "MAX_ORDER",
    "verify_path",
    "verify_cycle",
]

# Hard cap on the order of a Graph.  Exact (exponential) routines have their
# own, much smaller, limits; see ``spectrum.EXACT_LIMIT``.
MAX_ORDER = 4096


class GraphError(ValueError):
    """Raised for structurally invalid graph input."""


class Graph6Error(ValueError):
    """Raised when a graph6 string cannot be parsed.

    Attributes
    ----------
    offset : int
        Byte offset in the input line where the problem was detected.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def bits_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    rows : sequence of int
        ``rows[v]`` has bit ``u`` set iff ``u`` and ``v`` are adjacent.  The
        rows are validated for symmetry and the absence of loops.
    """

    __slots__ = ("_n", "_rows", "_m")

    def __init__(self, n: int, rows: Sequence[int]):
        if n < 0 or n > MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        if len(rows) != n:
            raise GraphError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        rows = tuple(int(r) for r in rows)
        for v, r in enumerate(rows):
            if r & ~full:
                raise GraphError(f"row {v} references a vertex outside 0..{n - 1}")
            if (r >> v) & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in iter_bits(r):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._rows = rows
        self._m = sum(r.bit_count() for r in rows) // 2

    @classmethod
    def _unchecked(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        # Internal fast path for callers that build rows symmetric by construction.
        g = object.__new__(cls)
        g._n = n
        g._rows = rows
        g._m = sum(r.bit_count() for r in rows) // 2
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def rows(self) -> tuple[int, ...]:
        return self._rows

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._rows[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self._rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self._rows]

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._rows[v]))

    def neighbor_mask(self, v: int) -> int:
        return self._rows[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``."""
        for u, r in enumerate(self._rows):
            for v in iter_bits(r >> (u + 1)):
                yield u, u + 1 + v

    def is_clique(self, vertices: Iterable[int]) -> bool:
        mask = bits_of(vertices)
        return all((self._rows[v] | (1 << v)) & mask == mask for v in iter_bits(mask))

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced by ``vertices``, relabelled ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        if len(index) != len(vertices):
            raise GraphError("repeated vertex in induced_subgraph")
        rows = []
        for v in vertices:
            rows.append(bits_of(index[u] for u in iter_bits(self._rows[v]) if u in index))
        return Graph(len(vertices), rows)

    def complement(self) -> "Graph":
        full = (1 << self._n) - 1
        return Graph(self._n, [full & ~r & ~(1 << v) for v, r in enumerate(self._rows)])

    def is_connected(self) -> bool:
        if self._n == 0:
            return True
        return self.component_mask(0) == (1 << self._n) - 1

    def component_mask(self, v: int, within: int | None = None) -> int:
        """Vertex mask of the component of ``v`` in the subgraph induced by ``within``."""
        allowed = (1 << self._n) - 1 if within is None else within
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= self._rows[u]
            frontier = nxt & allowed & ~seen
            seen |= frontier
        return seen


def graph_from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges are collapsed.

    Raises
    ------
    GraphError
        On a self-loop or an endpoint outside ``0..n-1``; the message names
        the offending pair.
    """
    if n < 0:
        raise GraphError(f"negative order {n}")
    rows = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Graph whose edge set is given by ``mask`` over the graph6 pair order.

    Bit ``t`` refers to the ``t``-th pair of the column-major upper triangle,
    ``(0,1), (0,2), (1,2), (0,3), ...``, which is also the bit order used by
    graph6 and by the exhaustive sweeps.
    """
    rows = [0] * n
    t = 0
    for j in range(1, n):
        for i in range(j):
            if (mask >> t) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            t += 1
    return Graph._unchecked(n, tuple(rows))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("maximum degree of the null graph is undefined")
    return max(g.degrees())


_HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no trailing newline)."""
    n = g.n
    out = [_encode_size(n)]
    acc = 0
    nbits = 0
    rows = g.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            acc = (acc << 1) | ((rj >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def _decode_size(data: bytes) -> tuple[int, int]:
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise Graph6Error("truncated 6-byte size header", len(data))
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        if n <= 258047:
            raise Graph6Error("non-canonical size header", 0)
        return n, 8
    if len(data) < 4:
        raise Graph6Error("truncated 3-byte size header", len(data))
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    if n <= 62:
        raise Graph6Error("non-canonical size header", 0)
    return n, 4


def decode_graph6(line: str | bytes) -> Graph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` header and surrounding whitespace are accepted.
    Anything else that would break ``encode_graph6(decode_graph6(x)) == x``
    (wrong length, non-zero padding bits, bytes outside 63..126) raises
    :class:`Graph6Error` carrying the byte offset.
    """
    if isinstance(line, str):
        try:
            data = line.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", exc.start) from None
    else:
        data = bytes(line).strip()
    shift = 0
    if data.startswith(_HEADER.encode()):
        data = data[len(_HEADER):]
        shift = len(_HEADER)
    for k, b in enumerate(data):
        if not 63 <= b <= 126:
            raise Graph6Error(f"byte {b!r} outside the graph6 range 63..126", k + shift)
    n, pos = _decode_size(data)
    if n > MAX_ORDER:
        raise Graph6Error(f"order {n} exceeds the supported maximum {MAX_ORDER}", shift)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < nbytes:
        raise Graph6Error(
            f"truncated bit stream: expected {nbytes} data bytes, got {len(body)}",
            len(data) + shift,
        )
    if len(body) > nbytes:
        raise Graph6Error("trailing bytes after bit stream", pos + nbytes + shift)
    rows = [0] * n
    t = 0
    i, j = 0, 1
    for k, b in enumerate(body):
        v = b - 63
        for s in range(5, -1, -1):
            bit = (v >> s) & 1
            if t < nbits:
                if bit:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i = 0
                    j += 1
            elif bit:
                raise Graph6Error("non-zero padding bit", pos + k + shift)
            t += 1
    return Graph._unchecked(n, tuple(rows))


def verify_path(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is a non-empty path in ``g`` (distinct, consecutively adjacent)."""
    if not seq or len(set(seq)) != len(seq):
        return False
    if any(not 0 <= v < g.n for v in seq):
        return False
    rows = g.rows
    return all((rows[a] >> b) & 1 for a, b in zip(seq, seq[1:]))


def verify_cycle(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists >= 3 distinct vertices, cyclically adjacent in ``g``."""
    return len(seq) >= 3 and verify_path(g, seq) and g.has_edge(seq[-1], seq[0])
