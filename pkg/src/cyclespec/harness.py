"""Batch verification: exhaustive and sampled sweeps, per-graph analysis.

Results are plain dicts ready for JSON-lines output.  Work is split into
fixed chunks whose boundaries do not depend on the worker count, and chunk
results are merged in chunk order, so reports are identical for any number
of workers.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable, Optional, Sequence

import numpy as np

from . import _kernels
from ._exact import resolve_limit
from .certify import certify_spectrum_lower_bound
from .constructions import ENUMERATION_LIMIT, count_masks, random_claw_free_hamiltonian
from .graph import Graph, encode_graph6, graph_from_mask, max_degree
from .hamilton import SearchStatus, search_hamiltonian_cycle
from .recognition import find_claw
from .spectrum import (
    HSKind,
    check_hakimi_schmeichel,
    cycle_spectrum_exact,
    cycle_spectrum_partial,
    meets_bound,
    mw_lower_bound,
    theorem1_lower_bound,
)

__all__ = [
    "T1_MIN_DELTA",
    "CHUNK",
    "fraction_str",
    "analyze_graph",
    "exhaustive_sweep",
    "sampled_sweep",
    "run_chunks",
]

T1_MIN_DELTA = 24
CHUNK = 1 << 16


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def run_chunks(fn: Callable, tasks: Sequence, workers: int = 1) -> list:
    """``[fn(t) for t in tasks]``, optionally in worker processes, in task order."""
    if workers <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks))


def _bounds(n: int, delta: int) -> tuple[Optional[int], Optional[Fraction]]:
    if n < 3 or not 2 <= delta <= n - 1:
        return None, None
    return theorem1_lower_bound(n, delta), mw_lower_bound(n, delta)


def analyze_graph(
    g: Graph,
    exact_limit: int | None = None,
    budget: int = 2_000_000,
    seed: int = 0,
    graph6: Optional[str] = None,
) -> dict:
    """Structural predicates, spectrum, bounds and certificate summary for one graph.

    ``violations`` lists checks whose hypotheses hold but whose conclusion
    fails on an exact spectrum; an empty list is the pass condition.
    """
    limit = resolve_limit(exact_limit)
    n = g.n
    delta = max_degree(g) if n else 0
    claw = find_claw(g)
    rec: dict = {
        "graph6": graph6 if graph6 is not None else encode_graph6(g),
        "n": n,
        "m": g.m,
        "delta": delta,
        "claw_free": claw is None,
        "claw": None if claw is None else [claw[0], list(claw[1])],
    }
    ham = None
    if n >= 3:
        res = search_hamiltonian_cycle(g, budget=budget, limit=limit)
        ham = res.cycle
        rec["hamiltonian"] = {
            SearchStatus.FOUND: True, SearchStatus.NOT_FOUND: False, SearchStatus.UNKNOWN: None,
        }[res.status]
    else:
        rec["hamiltonian"] = False
    exact = n <= limit
    if exact:
        spec = cycle_spectrum_exact(g, limit)
    else:
        spec = cycle_spectrum_partial(g, budget=budget, seed=seed, ham=ham)
    s = spec.s
    rec["spectrum_exact"] = exact
    rec["spectrum"] = spec.sorted()
    rec["s"] = s
    t1, mw = _bounds(n, delta)
    rec["bound_t1"] = t1
    rec["bound_mw"] = None if mw is None else fraction_str(mw)
    ham_ok = rec["hamiltonian"] is True
    rec["t1_applicable"] = bool(ham_ok and claw is None and delta >= T1_MIN_DELTA)
    violations = []

    def verdict(ok: bool) -> Optional[bool]:
        # A failed comparison against a partial spectrum proves nothing.
        return True if ok else (False if exact else None)

    # Compared on every claw-free hamiltonian graph; a violation only counts
    # when the degree threshold is met.
    cfh = ham_ok and claw is None and t1 is not None
    rec["t1_satisfied"] = verdict(s >= t1) if cfh else None
    rec["t1_tight"] = (s == t1) if cfh and exact else None
    rec["mw_satisfied"] = None if (mw is None or not ham_ok) else verdict(meets_bound(s, mw))
    if rec["t1_applicable"] and rec["t1_satisfied"] is False:
        violations.append("t1")
    if rec["mw_satisfied"] is False:
        violations.append("mw")
    rec["hs"] = None
    if ham_ok and exact:
        hs = check_hakimi_schmeichel(g, ham, spectrum=spec)
        rec["hs"] = {"kind": hs.kind.value, "pair": list(hs.pair), "degree_sum": hs.degree_sum}
        if hs.is_violation:
            violations.append("hs")
    rec["certificate_summary"] = None
    if ham_ok and claw is None:
        cert = certify_spectrum_lower_bound(g, ham)
        rec["certificate_summary"] = {
            "target": cert.target,
            "certified_count": cert.certified_count,
            "reached": cert.reached,
        }
        if cert.reached and cfh and rec["t1_satisfied"] is None:
            rec["t1_satisfied"] = True
    rec["violations"] = violations
    return rec


# exhaustive sweep -------------------------------------------------------------

def _popcount(a: np.ndarray) -> np.ndarray:
    out = np.zeros(a.shape, np.int64)
    x = a.copy()
    while np.any(x):
        out += x & 1
        x >>= 1
    return out


def _exhaustive_chunk(task: tuple[int, int, int]) -> dict:
    n, lo, hi = task
    spec, delta, pair, bip = _kernels.sweep_block(n, lo, hi)
    masks = np.arange(lo, hi, dtype=np.int64)
    ham = pair >= 0
    s = _popcount(spec)
    full = ((np.int64(1) << (n + 1)) - 1) & ~np.int64(7)
    pancyclic = spec == full
    miss = spec == (full & ~(np.int64(1) << (n - 1)))

    # Marczyk-Wozniak: s >= delta - 1 if 2 delta <= n, else 2 s >= n + delta - 3.
    low = 2 * delta <= n
    mw_ok = np.where(low, s >= delta - 1, 2 * s >= n + delta - 3)
    mw_bad = ham & ~mw_ok

    above = ham & (pair > n)
    equal = ham & (pair == n)
    hs_bad = (above & ~pancyclic) | (equal & ~(pancyclic | bip | miss))

    hs_counts = {
        HSKind.NOT_APPLICABLE.value: int(np.sum(ham & (pair < n))),
        HSKind.PANCYCLIC.value: int(np.sum((above | equal) & pancyclic)),
        HSKind.BIPARTITE.value: int(np.sum(equal & ~pancyclic & bip)),
        HSKind.MISSING_ONLY_N_MINUS_1.value: int(np.sum(equal & ~pancyclic & ~bip & miss)),
        HSKind.VIOLATION.value: int(np.sum(hs_bad)),
    }
    t1_masks = masks[ham & (delta >= T1_MIN_DELTA)]
    violations = []
    for check, bad in (("mw", mw_bad), ("hs", hs_bad)):
        for mask in masks[bad]:
            violations.append((int(mask), check))
    t1_checked = 0
    for mask in t1_masks:
        g = graph_from_mask(n, int(mask))
        if find_claw(g) is None:
            t1_checked += 1
            d = int(delta[mask - lo])
            if int(s[mask - lo]) < theorem1_lower_bound(n, d):
                violations.append((int(mask), "t1"))
    # Doubled gap s - bound keeps the half-integer values exact.
    gap2 = np.where(low, 2 * s - 2 * (delta - 1), 2 * s - (n + delta - 3))[ham]
    values, counts = np.unique(gap2, return_counts=True)
    bound_gap = {fraction_str(Fraction(int(v), 2)): int(c) for v, c in zip(values, counts)}
    return {
        "graphs": hi - lo,
        "hamiltonian": int(ham.sum()),
        "pancyclic": int((ham & pancyclic).sum()),
        "hs": hs_counts,
        "t1_checked": t1_checked,
        "mw_gap": dict(bound_gap),
        "violations": violations,
    }


def exhaustive_sweep(n: int, workers: int = 1, chunk: int = CHUNK) -> dict:
    """Check the Marczyk-Wozniak bound, the Hakimi-Schmeichel trichotomy and
    (where it applies) the claw-free bound on every labelled graph of order ``n``."""
    if n > ENUMERATION_LIMIT:
        raise ValueError(
            f"exhaustive sweeps are limited to n <= {ENUMERATION_LIMIT}; "
            "use the sampled sweep for larger orders"
        )
    if n < 3:
        raise ValueError("exhaustive sweeps need n >= 3")
    total = count_masks(n)
    tasks = [(n, lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
    parts = run_chunks(_exhaustive_chunk, tasks, workers)
    summary = {
        "n": n, "graphs": 0, "hamiltonian": 0, "pancyclic": 0,
        "hs": Counter(), "t1_checked": 0, "mw_gap": Counter(), "violations": [],
    }
    for part in parts:
        for key in ("graphs", "hamiltonian", "pancyclic", "t1_checked"):
            summary[key] += part[key]
        summary["hs"].update(part["hs"])
        summary["mw_gap"].update(part["mw_gap"])
        summary["violations"].extend(part["violations"])
    summary["hs"] = dict(sorted(summary["hs"].items()))
    summary["mw_gap"] = dict(sorted(summary["mw_gap"].items(), key=lambda kv: Fraction(kv[0])))
    summary["violations"] = [
        {"graph6": encode_graph6(graph_from_mask(n, mask)), "n": n, "mask": mask, "check": check}
        for mask, check in summary["violations"]
    ]
    return summary


# sampled sweep ----------------------------------------------------------------

def sample_instance(seed: int, index: int, n_lo: int, n_hi: int):
    """Instance ``index`` of a sampled sweep; depends only on ``(seed, index)``."""
    rng = np.random.default_rng([seed, index])
    n = int(rng.integers(n_lo, n_hi + 1))
    edge_budget = int(rng.integers(n, n * (n - 1) // 2 + 1))
    return random_claw_free_hamiltonian(n, edge_budget, rng)


def _sampled_chunk(task: tuple[int, int, int, int, int, int]) -> list[dict]:
    seed, lo, hi, n_lo, n_hi, limit = task
    out = []
    for index in range(lo, hi):
        sample = sample_instance(seed, index, n_lo, n_hi)
        g, ham = sample.graph, sample.ham
        n, delta = g.n, max_degree(g)
        spec = cycle_spectrum_exact(g, limit)
        t1, mw = _bounds(n, delta)
        hs = check_hakimi_schmeichel(g, ham, spectrum=spec)
        violations = []
        if not meets_bound(spec.s, mw):
            violations.append("mw")
        if hs.is_violation:
            violations.append("hs")
        if delta >= T1_MIN_DELTA and spec.s < t1:
            violations.append("t1")
        out.append({
            "index": index,
            "graph6": encode_graph6(g),
            "n": n,
            "delta": delta,
            "s": spec.s,
            "bound_t1": t1,
            "bound_mw": fraction_str(mw),
            "hs": hs.kind.value,
            "t1_applicable": delta >= T1_MIN_DELTA,
            "violations": violations,
        })
    return out


def sampled_sweep(
    count: int,
    n_range: tuple[int, int],
    seed: int,
    workers: int = 1,
    exact_limit: int | None = None,
    chunk: int = 250,
) -> dict:
    """Run the checks on ``count`` sampled claw-free hamiltonian graphs."""
    n_lo, n_hi = n_range
    limit = resolve_limit(exact_limit)
    if n_lo < 3 or n_hi < n_lo or n_hi > limit:
        raise ValueError(f"sampled n range must lie within 3..{limit}")
    tasks = [(seed, lo, min(lo + chunk, count), n_lo, n_hi, limit) for lo in range(0, count, chunk)]
    records = [r for part in run_chunks(_sampled_chunk, tasks, workers) for r in part]
    hist_t1 = Counter(r["s"] - r["bound_t1"] for r in records)
    hist_mw = Counter(fraction_str(Fraction(r["s"]) - Fraction(r["bound_mw"])) for r in records)
    hs = Counter(r["hs"] for r in records)
    return {
        "instances": len(records),
        "violations": [r for r in records if r["violations"]],
        "t1_checked": sum(r["t1_applicable"] for r in records),
        "s_minus_t1": dict(sorted(hist_t1.items())),
        "s_minus_mw": dict(sorted(hist_mw.items(), key=lambda kv: Fraction(kv[0]))),
        "hs": dict(sorted(hs.items())),
        "mean_delta": round(sum(r["delta"] for r in records) / max(len(records), 1), 6),
    }
