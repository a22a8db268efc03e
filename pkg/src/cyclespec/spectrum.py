"""Cycle spectra, pancyclicity, the Hakimi-Schmeichel trichotomy and the
lower-bound functions.

The spectrum of a graph is the set of lengths ``l`` for which it has a cycle
on exactly ``l`` vertices.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import _exact, _kernels
from ._exact import EXACT_LIMIT, HARD_CAP, ExactLimitError
from .graph import Graph, iter_bits, verify_cycle
from .recognition import is_bipartite

__all__ = [
    "Spectrum",
    "EXACT_LIMIT",
    "HARD_CAP",
    "NAIVE_LIMIT",
    "ExactLimitError",
    "HSKind",
    "HSClassification",
    "spectrum_from_bits",
    "cycle_spectrum_exact",
    "cycle_spectrum_naive",
    "cycle_spectrum_partial",
    "is_pancyclic",
    "is_subpancyclic",
    "check_hakimi_schmeichel",
    "classify_hs",
    "theorem1_lower_bound",
    "mw_lower_bound",
    "meets_bound",
]

NAIVE_LIMIT = 10


@dataclass(frozen=True)
class Spectrum:
    """Set of cycle lengths of a graph of order ``n``.

    ``exact`` is False for lower bounds produced by sampling.
    """

    n: int
    lengths: frozenset[int]
    exact: bool = True

    def __post_init__(self):
        bad = [l for l in self.lengths if not 3 <= l <= self.n]
        if bad:
            raise ValueError(f"cycle lengths {sorted(bad)} outside 3..{self.n}")

    @property
    def s(self) -> int:
        return len(self.lengths)

    def __contains__(self, length: int) -> bool:
        return length in self.lengths

    def __len__(self) -> int:
        return len(self.lengths)

    def __iter__(self):
        return iter(sorted(self.lengths))

    def sorted(self) -> list[int]:
        return sorted(self.lengths)

    def bits(self) -> int:
        mask = 0
        for l in self.lengths:
            mask |= 1 << l
        return mask


def spectrum_from_bits(n: int, bits: int, exact: bool = True) -> Spectrum:
    return Spectrum(n, frozenset(iter_bits(int(bits))), exact)


def cycle_spectrum_exact(g: Graph, limit: int | None = None) -> Spectrum:
    """Exact spectrum by subset DP.

    For each root ``r`` (the smallest vertex of the cycle) the DP runs over
    subsets of ``{r, ..., n-1}`` that contain ``r``, tracking the reachable
    path endpoints; a subset of size >= 3 with an endpoint adjacent to ``r``
    contributes its size.  Cost is ``O(2^n n^2)`` in the worst case.

    Raises
    ------
    ExactLimitError
        If ``g.n`` exceeds ``limit`` (default :data:`EXACT_LIMIT`).
    """
    _exact.check_order(g, limit, "cycle_spectrum_exact")
    if g.n < 3:
        return Spectrum(g.n, frozenset())
    reach, pc = _exact.buffers(g.n)
    bits = _kernels.spectrum_bits(_exact.adjacency(g), g.n, reach, pc)
    return spectrum_from_bits(g.n, bits)


def cycle_spectrum_naive(g: Graph) -> Spectrum:
    """Spectrum by depth-first enumeration of cycles; an independent oracle.

    Each cycle is visited once in canonical form: smallest vertex first and
    second vertex smaller than the last.  Enumeration stops early only once
    every length ``3..n`` has been seen.
    """
    n = g.n
    if n > NAIVE_LIMIT:
        raise ExactLimitError(f"naive enumeration is limited to n <= {NAIVE_LIMIT}, got {n}")
    adj = [g.neighbors(v) for v in range(n)]
    found: set[int] = set()
    target = set(range(3, n + 1))

    for s in range(n):
        on_path = [False] * n
        on_path[s] = True
        path = [s]

        def dfs(u: int) -> bool:
            for w in adj[u]:
                if w <= s:
                    if w == s and len(path) >= 3 and path[1] < path[-1]:
                        found.add(len(path))
                        if found == target:
                            return True
                    continue
                if on_path[w]:
                    continue
                on_path[w] = True
                path.append(w)
                if dfs(w):
                    return True
                path.pop()
                on_path[w] = False
            return False

        if dfs(s):
            break
    return Spectrum(n, frozenset(found))


def cycle_spectrum_partial(
    g: Graph,
    budget: int = 200_000,
    seed=0,
    ham: Optional[Sequence[int]] = None,
    certify: bool = True,
) -> Spectrum:
    """Lower bound on the spectrum from explicitly found, verified cycles.

    Runs randomised self-avoiding walks for ``budget`` steps; at every step
    each back-edge from the walk's head closes a cycle whose length is
    recorded.  The walk sequence is fixed by ``seed`` and a larger budget
    only extends it, so the result is monotone in ``budget``.  When a
    hamiltonian cycle is supplied (or ``certify`` is set and ``g`` is
    claw-free and a cycle can be found), the constructive certificate's
    lengths are added as well.
    """
    n = g.n
    rows = g.rows
    rng = np.random.default_rng(seed)
    found: set[int] = set()
    witnesses: dict[int, tuple[int, ...]] = {}
    steps = 0
    while steps < budget and n >= 3:
        v = int(rng.integers(n))
        path = [v]
        pos = {v: 0}
        while steps < budget:
            steps += 1
            head = path[-1]
            for w in iter_bits(rows[head]):
                j = pos.get(w)
                if j is not None:
                    length = len(path) - j
                    if length >= 3 and length not in found:
                        cyc = tuple(path[j:])
                        if verify_cycle(g, cyc):
                            found.add(length)
                            witnesses[length] = cyc
            free = [w for w in iter_bits(rows[head]) if w not in pos]
            if not free:
                break
            w = free[int(rng.integers(len(free)))]
            pos[w] = len(path)
            path.append(w)
    if ham is not None:
        if len(ham) == n and verify_cycle(g, tuple(ham)):
            found.add(n)
    if certify and n >= 3:
        from .certify import CertificationError, certify_spectrum_lower_bound
        from .hamilton import PreconditionError, SearchBudgetExceeded
        from .recognition import ClawError

        try:
            cert = certify_spectrum_lower_bound(g, ham)
        except (CertificationError, ClawError, SearchBudgetExceeded, PreconditionError):
            pass
        else:
            found.update(e.length for e in cert.entries)
    return Spectrum(n, frozenset(found), exact=False)


def is_pancyclic(g: Graph, spectrum: Optional[Spectrum] = None, limit: int | None = None) -> bool:
    spec = spectrum if spectrum is not None else cycle_spectrum_exact(g, limit)
    return g.n >= 3 and spec.lengths == frozenset(range(3, g.n + 1))


def is_subpancyclic(g: Graph, spectrum: Optional[Spectrum] = None, limit: int | None = None) -> bool:
    """``S(G) == {3, ..., max S(G)}``; vacuously true for forests."""
    spec = spectrum if spectrum is not None else cycle_spectrum_exact(g, limit)
    if not spec.lengths:
        return True
    return spec.lengths == frozenset(range(3, max(spec.lengths) + 1))


class HSKind(enum.Enum):
    PANCYCLIC = "pancyclic"
    BIPARTITE = "bipartite"
    MISSING_ONLY_N_MINUS_1 = "missing_only_n_minus_1"
    NOT_APPLICABLE = "not_applicable"
    VIOLATION = "violation"


@dataclass(frozen=True)
class HSClassification:
    kind: HSKind
    pair: tuple[int, int]
    degree_sum: int
    n: int
    missing: tuple[int, ...] = field(default=())

    @property
    def is_violation(self) -> bool:
        return self.kind is HSKind.VIOLATION


def classify_hs(n: int, degree_sum: int, spectrum: Spectrum, bipartite: bool) -> HSKind:
    """Trichotomy verdict for a cycle pair with the given degree sum."""
    full = frozenset(range(3, n + 1))
    pancyclic = spectrum.lengths == full
    if degree_sum < n:
        return HSKind.NOT_APPLICABLE
    if pancyclic:
        return HSKind.PANCYCLIC
    if degree_sum > n:
        return HSKind.VIOLATION
    if bipartite:
        return HSKind.BIPARTITE
    if spectrum.lengths == full - {n - 1}:
        return HSKind.MISSING_ONLY_N_MINUS_1
    return HSKind.VIOLATION


def check_hakimi_schmeichel(
    g: Graph,
    ham: Sequence[int],
    spectrum: Optional[Spectrum] = None,
    limit: int | None = None,
) -> HSClassification:
    """Classify ``g`` along the consecutive pair of ``ham`` with largest degree sum.

    A ``VIOLATION`` means the computed spectrum contradicts the trichotomy,
    which would indicate a defect in this package rather than in the theorem.
    """
    order = tuple(ham)
    n = g.n
    if len(order) != n or not verify_cycle(g, order):
        raise ValueError("not a hamiltonian cycle of the graph")
    degs = g.degrees()
    best = max(range(n), key=lambda i: (degs[order[i]] + degs[order[(i + 1) % n]], -i))
    pair = (order[best], order[(best + 1) % n])
    dsum = degs[pair[0]] + degs[pair[1]]
    spec = spectrum if spectrum is not None else cycle_spectrum_exact(g, limit)
    kind = classify_hs(n, dsum, spec, bool(is_bipartite(g)))
    missing = tuple(sorted(set(range(3, n + 1)) - spec.lengths))
    return HSClassification(kind, pair, dsum, n, missing)


def _check_bound_args(n: int, delta: int) -> None:
    if n < 3 or not 2 <= delta <= n - 1:
        raise ValueError(f"bounds need n >= 3 and 2 <= delta <= n - 1, got n={n}, delta={delta}")


def theorem1_lower_bound(n: int, delta: int) -> int:
    """``min(n, ceil(3 delta / 2)) - 2``."""
    _check_bound_args(n, delta)
    return min(n, (3 * delta + 1) // 2) - 2


def mw_lower_bound(n: int, delta: int) -> Fraction:
    """Marczyk-Wozniak bound for hamiltonian graphs, as an exact rational."""
    _check_bound_args(n, delta)
    if 2 * delta <= n:
        return Fraction(delta - 1)
    return Fraction(n + delta - 3, 2)


def meets_bound(s: int, bound: Fraction | int) -> bool:
    """``s >= bound`` without floating point."""
    b = Fraction(bound)
    return s * b.denominator >= b.numerator
