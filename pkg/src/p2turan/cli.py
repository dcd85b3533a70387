"""Command-line front end.

Structured output is JSON on stdout, a one-line summary goes to stderr.
Exit codes: 0 pass, 1 domain failure (witness found, construction or
verification failed), 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from p2turan import __version__
from p2turan.constructions import build_extremal, build_family
from p2turan.formats import DIGRAPH6, MATRIX, FormatError, parse_digraph, serialize_digraph, to_dot
from p2turan.freeness import find_witness, is_free
from p2turan.formulas import formula_record, phi
from p2turan.search import SearchConfig, branch_and_bound, exhaustive_max, local_search
from p2turan.verify import verify_range

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _say(msg: str) -> None:
    print(msg, file=sys.stderr)


def _render(d, fmt: str, class_of=None) -> str:
    if fmt == "dot":
        return to_dot(d, class_of)
    return serialize_digraph(d, fmt)


def cmd_formula(args) -> int:
    try:
        rec = formula_record(args.n, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(rec)
    _say(f"g={rec['g']} phi={rec['phi']} regime={rec['regime']} [{rec['lower']}, {rec['upper']}]")
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.t < 2 or args.n < args.t + 6:
        raise UsageError(f"constructions need t >= 2 and n >= t+6 (got n={args.n}, t={args.t})")
    try:
        if args.family == "auto":
            d, spec = build_extremal(args.n, args.t)
        else:
            d, spec = build_family(args.family, args.n, args.t)
    except ValueError as exc:
        _emit({"n": args.n, "t": args.t, "family": args.family, "error": str(exc)})
        _say(f"construction failed: {exc}")
        return EXIT_FAIL
    sidecar = {
        "family": spec.family,
        "sizes": list(spec.sizes),
        "arcs": d.size(),
        "phi": phi(args.n, args.t),
        "free": is_free(d, args.t),
    }
    text = _render(d, args.format, spec.class_of)
    if args.out:
        out = Path(args.out)
        out.write_text(text)
        out.with_name(out.name + ".json").write_text(json.dumps(sidecar, indent=2) + "\n")
    _emit({**sidecar, "format": args.format, "digraph": text})
    _say(f"{spec.family} n={args.n} t={args.t}: {sidecar['arcs']} arcs (phi={sidecar['phi']})")
    return EXIT_OK


def _read_input(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def cmd_check(args) -> int:
    if args.t < 1:
        raise UsageError("t must be >= 1")
    try:
        d = parse_digraph(_read_input(args.input), args.format)
    except (FormatError, ValueError) as exc:
        raise UsageError(f"bad digraph: {exc}") from exc
    w = find_witness(d, args.t)
    if w is None:
        _emit({"free": True, "t": args.t, "n": d.order, "arcs": d.size()})
        _say(f"free at t={args.t}")
        return EXIT_OK
    _emit(w.to_dict())
    _say(f"violation: {len(w.midpoints)} midpoints from {w.source} to {w.target}")
    return EXIT_FAIL


def cmd_search(args) -> int:
    seed = None
    if args.seed_digraph:
        try:
            seed = parse_digraph(_read_input(args.seed_digraph))
        except (FormatError, ValueError) as exc:
            raise UsageError(f"bad seed digraph: {exc}") from exc
    try:
        cfg = SearchConfig(
            n=args.n,
            t=args.t,
            node_budget=args.budget_nodes,
            time_budget=args.budget_secs,
            symmetry=args.symmetry,
            seed_digraph=seed,
            rng_seed=args.seed_rng,
        )
        if args.mode == "exhaustive":
            res = exhaustive_max(args.n, args.t)
        elif args.mode == "bnb":
            res = branch_and_bound(cfg, workers=args.workers)
        else:
            res = local_search(cfg)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    fmt = args.format
    if fmt == DIGRAPH6 and args.n > 62:
        fmt = MATRIX
    _emit({"n": args.n, "t": args.t, "mode": args.mode, **res.to_dict(),
           "format": fmt, "digraph": _render(res.best, fmt)})
    _say(f"{args.mode}: {res.best_arcs} arcs, optimal={res.optimal}, nodes={res.nodes}")
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        report = verify_range(args.t, args.n_lo, args.n_hi, command=["verify", *args.argv_echo])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    _emit(report.to_dict())
    failed = [r["n"] for r in report.records if not r["pass"]]
    _say(f"verify t={args.t} n=[{args.n_lo}, {args.n_hi}]: {report.overall}"
         + (f" (failed n: {failed})" if failed else ""))
    return EXIT_OK if report.overall == "pass" else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="p2turan", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("formula", help="closed-form bounds for (n, t)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("construct", help="build an extremal construction")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--family", choices=["d1", "d2", "d3", "auto"], default="auto")
    p.add_argument("--format", choices=[MATRIX, DIGRAPH6, "dot"], default=MATRIX)
    p.add_argument("--out", help="also write the digraph here, with a .json sidecar")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="test a digraph for freeness")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--in", dest="input", required=True, help="input file, '-' for stdin")
    p.add_argument("--format", choices=[MATRIX, DIGRAPH6], default=None)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("search", help="extremal search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "bnb", "local"], default="bnb")
    p.add_argument("--budget-nodes", type=int)
    p.add_argument("--budget-secs", type=float)
    p.add_argument("--seed-rng", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--symmetry", action="store_true")
    p.add_argument("--seed-digraph", help="file with a free starting digraph")
    p.add_argument("--format", choices=[MATRIX, DIGRAPH6, "dot"], default=MATRIX)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", help="verify constructions over a range of n")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--n-lo", type=int, required=True)
    p.add_argument("--n-hi", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.argv_echo = argv[1:]
    try:
        return args.func(args)
    except UsageError as exc:
        _say(f"error: {exc}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
