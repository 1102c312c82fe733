"""Command-line interface.

Exit codes: 0 success, 1 a checked inequality failed, 2 usage or input error.
JSON goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from . import __version__
from .bounds import (
    EQ_TOL,
    MANTEL_TOL,
    bound_report,
    erdos_count,
    gap_table,
    mantel_check,
    scan_extremal,
    turan_floor_bound,
)
from .cliques import enumerate_cliques
from .graph import GraphFormatError, PartiteSpec, read_edge_list, turan_graph, write_edge_list
from .spectral import SolverOptions, SpectralResult, spectral_radius_of, turan_rho

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _sig15(obj):
    """Round every float to 15 significant digits, recursively."""
    if isinstance(obj, float):
        return float(f"{obj:.15g}")
    if isinstance(obj, dict):
        return {k: _sig15(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_sig15(v) for v in obj]
    return obj


def _emit(payload: dict, output: str) -> None:
    payload = _sig15(payload)
    if output == "json":
        print(json.dumps(payload))
        return
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            print(f"{key}:")
            cols = list(value[0])
            print("  " + "\t".join(cols))
            for row in value:
                print("  " + "\t".join(str(row[c]) for c in cols))
        else:
            print(f"{key}: {value}")


def _opts(args) -> SolverOptions:
    try:
        return SolverOptions(tol=args.tol, max_iter=args.max_iter, shift=args.shift, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _load(args):
    try:
        return read_edge_list(args.input)
    except OSError as exc:
        raise UsageError(f"cannot read {args.input}: {exc.strerror or exc}") from None
    except GraphFormatError as exc:
        raise UsageError(f"{args.input}: {exc}") from None


def _check_r(r: int) -> None:
    if r < 2:
        raise UsageError(f"--r must be >= 2, got {r}")


def spectral_payload(res: SpectralResult) -> dict:
    return {
        "n": res.n,
        "r": res.r,
        "rho": res.rho,
        "converged": res.converged,
        "residual": res.residual,
        "iterations": res.iterations,
        "lower": res.lower,
        "upper": res.upper,
        "tolerance": res.tolerance_used,
        "clique_count": res.clique_count,
        "is_clique_connected": res.is_clique_connected,
        "isolated": list(res.isolated),
        "vector": res.global_vector.tolist(),
        "components": [
            {
                "vertices": list(c.vertices),
                "rho": c.rho,
                "converged": c.converged,
                "residual": c.pair.residual_inf,
                "iterations": c.iterations,
                "lower": c.lower,
                "upper": c.upper,
                "degree_min": c.degree_min,
                "degree_max": c.degree_max,
                "positive": c.positive,
                "vector": c.pair.vector.tolist(),
            }
            for c in res.components
        ],
    }


def cmd_cliques(args) -> int:
    _check_r(args.r)
    cs = enumerate_cliques(_load(args), args.r)
    if args.output == "text" and args.list:
        print(f"count: {cs.count}")
        for c in cs.cliques:
            print(" ".join(map(str, c)))
        return EXIT_OK
    payload = {"n": cs.n, "r": cs.r, "count": cs.count}
    if args.list:
        payload["cliques"] = [list(c) for c in cs.cliques]
    _emit(payload, args.output)
    return EXIT_OK


def cmd_spectral(args) -> int:
    _check_r(args.r)
    g = _load(args)
    res = spectral_radius_of(enumerate_cliques(g, args.r), _opts(args))
    _emit(spectral_payload(res), args.output)
    return EXIT_OK


def cmd_bound(args) -> int:
    _check_r(args.r)
    rep = bound_report(_load(args), args.r, _opts(args), eq_tol=args.eq_tol, tol=args.mantel_tol)
    payload = asdict(rep)
    payload["floor_bound"] = rep.count_bound_floor
    payload["equality"] = rep.count_equality
    payload["violations"] = rep.violations
    _emit(payload, args.output)
    return EXIT_VIOLATION if rep.violations else EXIT_OK


def cmd_mantel(args) -> int:
    _check_r(args.r)
    g = _load(args)
    if args.r > g.n:
        raise UsageError(f"--r {args.r} exceeds the vertex count {g.n}")
    mc = mantel_check(g, args.r, _opts(args), tol=args.mantel_tol)
    _emit(asdict(mc), args.output)
    return EXIT_VIOLATION if mc.satisfied is False else EXIT_OK


def cmd_turan(args) -> int:
    _check_r(args.r)
    if args.n is None:
        raise UsageError("turan needs --n")
    if args.r > args.n:
        raise UsageError(f"--r {args.r} exceeds --n {args.n}")
    spec = PartiteSpec.turan(args.n, args.r)
    if args.emit:
        try:
            write_edge_list(turan_graph(args.n, args.r), args.emit)
        except OSError as exc:
            raise UsageError(f"cannot write {args.emit}: {exc.strerror or exc}") from None
    payload = {
        "n": args.n,
        "r": args.r,
        "parts": list(spec.sizes),
        "rho_closed_form": turan_rho(args.n, args.r),
        "clique_count": erdos_count(args.n, args.r),
        "floor_bound": turan_floor_bound(args.n, args.r),
    }
    _emit(payload, args.output)
    return EXIT_OK


def cmd_scan(args) -> int:
    _check_r(args.r)
    if args.n is None:
        raise UsageError("scan needs --n")
    try:
        rep = scan_extremal(
            args.n, args.r, mode=args.mode, budget=args.budget, seed=args.seed,
            opts=_opts(args), tol=args.mantel_tol, eq_tol=args.eq_tol, threads=args.threads,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = rep.to_dict()
    if args.output == "text":
        payload["equality_witnesses"] = [
            {"degree_sequence": w["degree_sequence"], "match": w["degree_sequence_match"]}
            for w in rep.equality_witnesses
        ]
    for edges in payload["violations"]:
        print("violation: " + " ".join(f"{u}-{v}" for u, v in edges), file=sys.stderr)
    _emit(payload, args.output)
    return EXIT_OK if rep.ok else EXIT_VIOLATION


def cmd_gap_table(args) -> int:
    n_max = 60 if args.n is None else args.n
    if args.r is None:
        rs = (2, 3, 4, 5)
    else:
        _check_r(args.r)
        rs = (args.r,)
    _emit({"rows": gap_table(n_max, rs)}, args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquetensor",
        description="r-clique tensor spectral radius and Turan-type bounds",
    )
    parser.add_argument("--version", action="version", version=__version__)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="json")
    common.add_argument("--threads", type=int, default=1)

    solver = argparse.ArgumentParser(add_help=False)
    solver.add_argument("--tol", type=float, default=1e-10, help="relative bracket width")
    solver.add_argument("--shift", type=float, default=1.0)
    solver.add_argument("--max-iter", type=int, default=100_000)
    solver.add_argument("--seed", type=int, default=0)
    solver.add_argument("--eq-tol", type=float, default=EQ_TOL)
    solver.add_argument("--mantel-tol", type=float, default=MANTEL_TOL)

    sub = parser.add_subparsers(dest="command", required=True)

    def with_input(name, help_, func, parents):
        p = sub.add_parser(name, help=help_, parents=parents)
        p.add_argument("input", help="edge-list file")
        p.add_argument("--r", type=int, required=True)
        p.set_defaults(func=func)
        return p

    p = with_input("cliques", "count (and list) r-cliques", cmd_cliques, [common])
    p.add_argument("--list", action="store_true", help="dump every clique")
    with_input("spectral", "r-clique spectral radius", cmd_spectral, [common, solver])
    with_input("bound", "clique-count bound report", cmd_bound, [common, solver])
    with_input("mantel", "compare with the Turan graph radius", cmd_mantel, [common, solver])

    p = sub.add_parser("turan", help="Turan graph T_r(n) closed forms", parents=[common])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--emit", help="write the Turan graph as an edge list")
    p.set_defaults(func=cmd_turan)

    p = sub.add_parser("scan", help="search K_{r+1}-free graphs for violations", parents=[common, solver])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--budget", type=int, default=100)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("gap-table", help="floor bound against Erdos count", parents=[common])
    p.add_argument("--n", type=int, help="largest n (default 60)")
    p.add_argument("--r", type=int, help="single r (default 2..5)")
    p.set_defaults(func=cmd_gap_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
