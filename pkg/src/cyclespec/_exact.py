"""Exact-mode limits and buffers shared by the subset-DP front ends."""

from __future__ import annotations

import warnings

import numpy as np

from . import _kernels
from .graph import Graph

EXACT_LIMIT = 20
HARD_CAP = 24


class ExactLimitError(ValueError):
    """Graph too large for the exponential-time exact routines."""


def resolve_limit(limit: int | None) -> int:
    if limit is None:
        return EXACT_LIMIT
    if limit > HARD_CAP:
        raise ValueError(f"exact-mode limit {limit} exceeds the hard cap {HARD_CAP}")
    if limit > 22:
        warnings.warn(
            f"exact-mode limit {limit}: DP tables need up to {8 << limit >> 20} MiB",
            ResourceWarning,
            stacklevel=3,
        )
    return limit


def check_order(g: Graph, limit: int | None, what: str) -> None:
    lim = resolve_limit(limit)
    if g.n > lim:
        raise ExactLimitError(
            f"{what}: order {g.n} exceeds the exact-mode limit {lim}; "
            "use cycle_spectrum_partial or the certifier for larger graphs"
        )


def adjacency(g: Graph) -> np.ndarray:
    return np.array(g.rows, dtype=np.int64)


def buffers(n: int) -> tuple[np.ndarray, np.ndarray]:
    n = max(n, 1)
    return np.zeros(1 << n, np.int64), _kernels.popcount_table(n)
