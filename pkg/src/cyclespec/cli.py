"""Command-line front end.

Every mode writes JSON lines (or graph6 lines for the generators) to
``--out`` or stdout.  Exit status: 0 pass, 1 violations found, 2 input errors.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from typing import Iterable, Optional, TextIO

from . import __version__
from ._exact import EXACT_LIMIT, HARD_CAP
from .certify import CertificationError, certify_spectrum_lower_bound, lemma1_cycles, lemma2_long_cycles
from .constructions import ENUMERATION_LIMIT, extremal_graph, extremal_hamiltonian_cycle, random_claw_free_hamiltonian
from .graph import Graph6Error, GraphError, decode_graph6, encode_graph6
from .hamilton import (
    DEFAULT_BUDGET,
    PreconditionError,
    SearchStatus,
    hamiltonian_path_alpha2,
    search_hamiltonian_cycle,
)
from .harness import analyze_graph, exhaustive_sweep, sampled_sweep
from .recognition import ClawError

log = logging.getLogger("cyclespec")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2
MODES = ("analyze", "extremal", "sample", "verify", "certify", "witness")


class InputError(Exception):
    pass


def _range(text: str) -> tuple[int, int]:
    """Parse ``a:b`` (inclusive) or a single integer."""
    try:
        if ":" in text:
            a, b = text.split(":", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a:b, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cyclespec",
        description="Cycle spectra, extremal graphs and spectrum certificates for claw-free hamiltonian graphs.",
    )
    p.add_argument("--mode", choices=MODES, required=True)
    p.add_argument("input", nargs="?", help="graph6 file (default: stdin)")
    p.add_argument("--n", type=int, help="order for generators")
    p.add_argument("--delta", type=int, help="maximum degree for the extremal generator")
    p.add_argument("--n-range", type=_range, help="order range a:b (inclusive)")
    p.add_argument("--delta-range", type=_range, help="maximum-degree range a:b (inclusive)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="search budget (backtracking nodes / sampling steps)")
    p.add_argument("--edge-budget", type=int, help="edge target for --mode sample")
    p.add_argument("--count", type=int, default=1, help="number of graphs for --mode sample")
    p.add_argument("--sweep", choices=("exhaustive", "sampled"), default="exhaustive")
    p.add_argument("--samples", type=int, default=10_000, help="instances for the sampled sweep")
    p.add_argument("--exact-limit", type=int, default=EXACT_LIMIT)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--lemma", type=int, choices=(1, 2, 3))
    p.add_argument("--vertex", type=int, help="off-cycle vertex for --lemma 1")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--sidecar", help="JSON metadata file for --mode sample")
    p.add_argument("--timing", action="store_true", help="add wall-clock runtime to the footer")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return p


def _emit(out: TextIO, obj) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _read_lines(path: Optional[str]) -> list[str]:
    if path is None or path == "-":
        return sys.stdin.read().splitlines()
    with open(path) as fh:
        return fh.read().splitlines()


def _graph_lines(path: Optional[str]) -> Iterable[tuple[int, str]]:
    for lineno, line in enumerate(_read_lines(path), 1):
        if line.strip():
            yield lineno, line.strip()


def _footer(args, instances: int, violations: int, started: float, **extra) -> dict:
    foot = {
        "instances": instances,
        "violations": violations,
        "seed": args.seed,
        "mode": args.mode,
    }
    foot.update(extra)
    if args.timing:
        foot["runtime"] = round(time.perf_counter() - started, 3)
    return {"footer": foot}


def cmd_analyze(args, out: TextIO, started: float) -> int:
    instances = violations = errors = 0
    for lineno, line in _graph_lines(args.input):
        instances += 1
        try:
            g = decode_graph6(line)
        except (Graph6Error, GraphError) as exc:
            errors += 1
            _emit(out, {"line": lineno, "graph6": line, "error": str(exc)})
            continue
        rec = analyze_graph(g, args.exact_limit, args.budget, args.seed, graph6=line)
        rec["line"] = lineno
        violations += bool(rec["violations"])
        _emit(out, rec)
    _emit(out, _footer(args, instances, violations, started, errors=errors))
    if errors:
        return EXIT_INPUT
    return EXIT_VIOLATION if violations else EXIT_OK


def _pairs(args) -> list[tuple[int, int]]:
    if args.n is not None and args.delta is not None:
        return [(args.n, args.delta)]
    if args.n_range is None or args.delta_range is None:
        raise InputError("give --n and --delta, or --n-range and --delta-range")
    n_lo, n_hi = args.n_range
    d_lo, d_hi = args.delta_range
    return [(n, d) for d in range(d_lo, d_hi + 1) for n in range(max(n_lo, d + 2), n_hi + 1)]


def cmd_extremal(args, out: TextIO, started: float) -> int:
    for n, d in _pairs(args):
        try:
            out.write(encode_graph6(extremal_graph(n, d)) + "\n")
        except ValueError as exc:
            raise InputError(str(exc))
    return EXIT_OK


def cmd_sample(args, out: TextIO, started: float) -> int:
    if args.n is None:
        raise InputError("--mode sample needs --n")
    import numpy as np

    edge_budget = args.edge_budget if args.edge_budget is not None else 2 * args.n
    meta = []
    for index in range(args.count):
        rng = np.random.default_rng([args.seed, index])
        sample = random_claw_free_hamiltonian(args.n, edge_budget, rng)
        line = encode_graph6(sample.graph)
        out.write(line + "\n")
        meta.append({"index": index, "seed": [args.seed, index], "graph6": line, **sample.metadata()})
    sidecar = args.sidecar or (args.out + ".json" if args.out else None)
    if sidecar:
        with open(sidecar, "w") as fh:
            json.dump({"seed": args.seed, "samples": meta}, fh, indent=1)
    return EXIT_OK


def cmd_verify(args, out: TextIO, started: float) -> int:
    if args.sweep == "exhaustive":
        lo, hi = args.n_range or (3, 6)
        if hi > ENUMERATION_LIMIT:
            raise InputError(
                f"exhaustive verification is limited to n <= {ENUMERATION_LIMIT}; "
                "use --sweep sampled for larger orders"
            )
        if lo < 3:
            raise InputError("exhaustive verification needs n >= 3")
        instances = violations = t1_checked = 0
        for n in range(lo, hi + 1):
            summary = exhaustive_sweep(n, workers=args.workers)
            for v in summary.pop("violations"):
                violations += 1
                _emit(out, {"violation": v})
            instances += summary["graphs"]
            t1_checked += summary["t1_checked"]
            _emit(out, {"summary": summary})
        _emit(out, _footer(args, instances, violations, started, sweep="exhaustive",
                           n_range=[lo, hi], t1_checked=t1_checked))
    else:
        lo, hi = args.n_range or (8, 16)
        try:
            summary = sampled_sweep(args.samples, (lo, hi), args.seed, args.workers, args.exact_limit)
        except ValueError as exc:
            raise InputError(str(exc))
        bad = summary.pop("violations")
        for rec in bad:
            _emit(out, {"violation": rec})
        violations = len(bad)
        _emit(out, {"summary": summary})
        _emit(out, _footer(args, summary["instances"], violations, started, sweep="sampled",
                           n_range=[lo, hi], t1_checked=summary["t1_checked"]))
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_certify(args, out: TextIO, started: float) -> int:
    if args.n is not None and args.delta is not None or args.n_range is not None:
        items = []
        for n, d in _pairs(args):
            try:
                g = extremal_graph(n, d)
            except ValueError as exc:
                raise InputError(str(exc))
            items.append((None, encode_graph6(g), g, extremal_hamiltonian_cycle(n, d)))
    else:
        items = []
        for lineno, line in _graph_lines(args.input):
            try:
                items.append((lineno, line, decode_graph6(line), None))
            except (Graph6Error, GraphError) as exc:
                items.append((lineno, line, exc, None))
    errors = reached = 0
    for lineno, line, g, ham in items:
        rec = {"graph6": line}
        if lineno is not None:
            rec["line"] = lineno
        if isinstance(g, Exception):
            errors += 1
            rec["error"] = str(g)
            _emit(out, rec)
            continue
        try:
            cert = certify_spectrum_lower_bound(g, ham, budget=args.budget)
        except (ClawError, CertificationError) as exc:
            errors += 1
            rec["error"] = str(exc)
            _emit(out, rec)
            continue
        reached += cert.reached
        rec["certificate"] = cert.to_json()
        _emit(out, rec)
    _emit(out, _footer(args, len(items), 0, started, reached=reached, errors=errors))
    return EXIT_INPUT if errors else EXIT_OK


def cmd_witness(args, out: TextIO, started: float) -> int:
    if args.lemma is None:
        raise InputError("--mode witness needs --lemma")
    lines = list(_graph_lines(args.input))
    if not lines:
        raise InputError("no graph given")
    errors = 0
    for lineno, line in lines:
        rec = {"line": lineno, "graph6": line, "lemma": args.lemma}
        try:
            g = decode_graph6(line)
            rec["witness"] = _witness(g, args)
        except (Graph6Error, GraphError, PreconditionError, CertificationError, InputError) as exc:
            errors += 1
            rec["error"] = str(exc)
            witness = getattr(exc, "witness", None)
            if witness is not None:
                rec["diagnostic"] = witness if not isinstance(witness, tuple) else list(witness)
        _emit(out, rec)
    return EXIT_INPUT if errors else EXIT_OK


def _witness(g, args) -> dict:
    if args.lemma == 3:
        path = hamiltonian_path_alpha2(g)
        return {"path": list(path)}
    if args.lemma == 2:
        res = search_hamiltonian_cycle(g, budget=args.budget)
        if res.status is not SearchStatus.FOUND:
            raise CertificationError(f"no hamiltonian cycle ({res.status.value})")
        cycles = lemma2_long_cycles(g, res.cycle.order)
        return {"ham": list(res.cycle.order), "cycles": [{"length": l, "cycle": list(c)} for l, c in cycles]}
    u = args.vertex
    if u is None:
        u = max(range(g.n), key=lambda v: (g.degree(v), -v))
    if not 0 <= u < g.n:
        raise InputError(f"--vertex {u} out of range")
    if 2 * g.degree(u) <= g.n - 1:
        raise PreconditionError(f"degree of {u} is {g.degree(u)}, not more than (n-1)/2", g.degree(u))
    rest = [v for v in range(g.n) if v != u]
    sub = g.induced_subgraph(rest)
    if sub.n < 3:
        raise PreconditionError("graph too small for an (n-1)-cycle")
    res = search_hamiltonian_cycle(sub, budget=args.budget)
    if res.status is not SearchStatus.FOUND:
        raise PreconditionError(f"no cycle through all vertices except {u}")
    c = [rest[i] for i in res.cycle.order]
    cycles = lemma1_cycles(g, c, u)
    return {"vertex": u, "cycle": c, "cycles": [{"length": l, "cycle": list(cy)} for l, cy in cycles]}


COMMANDS = {
    "analyze": cmd_analyze,
    "extremal": cmd_extremal,
    "sample": cmd_sample,
    "verify": cmd_verify,
    "certify": cmd_certify,
    "witness": cmd_witness,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    if not 3 <= args.exact_limit <= HARD_CAP:
        parser.error(f"--exact-limit must lie in 3..{HARD_CAP}")
    started = time.perf_counter()
    out = open(args.out, "w") if args.out else sys.stdout
    try:
        return COMMANDS[args.mode](args, out, started)
    except InputError as exc:
        print(f"cyclespec: {exc}", file=sys.stderr)
        return EXIT_INPUT
    finally:
        if out is not sys.stdout:
            out.close()
        else:
            out.flush()


if __name__ == "__main__":
    sys.exit(main())
