"""Command-line interface: ``dicolor {color,exact,verify,gen,digirth,stats,bench}``.

Exit codes: 0 ok, 1 verification failure, 2 parse/usage error,
3 precondition violation, 4 size cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from .bench import BenchConfig, rows_to_csv, run_bench
from .cycles import INFINITE, digirth
from .digraph import format_edge_list, read_edge_list, degree_stats
from .engine import auto_g, color_theorem
from .errors import ParseError, PreconditionViolated, TooLarge
from .exact import DEFAULT_N_CAP, dichromatic_number, verify_coloring
from .generators import gen_circulant, gen_directed_cycle, gen_random_digirth

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_PRECONDITION, EXIT_TOO_LARGE = 0, 1, 2, 3, 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _digirth_json(value):
    return "inf" if value == INFINITE else int(value)


def _load(path):
    try:
        return read_edge_list(path)
    except (ParseError, OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read graph {path}: {exc}", EXIT_USAGE) from exc


def cmd_color(args) -> int:
    D = _load(args.input)
    try:
        g = args.g if args.g is not None else auto_g(D)
        col, report = color_theorem(D, g, seed=args.seed)
    except PreconditionViolated as exc:
        raise CliError(str(exc), EXIT_PRECONDITION) from exc
    valid = True
    if args.check:
        valid = verify_coloring(D, col).valid
    doc = {
        "n": D.n,
        "m": D.m,
        "delta": report.delta,
        "digirth": _digirth_json(digirth(D)),
        "g": g,
        "ell": report.ell,
        "colors_used": col.num_colors,
        "integer_bound": report.integer_bound,
        "real_bound": float(report.real_bound),
        "assignment": list(col.assignment),
        "valid": valid,
    }
    if not valid:
        raise CliError("pipeline produced an invalid coloring", EXIT_INVALID)
    print(json.dumps(doc))
    return EXIT_OK


def cmd_exact(args) -> int:
    D = _load(args.input)
    try:
        print(dichromatic_number(D, args.cap))
    except TooLarge as exc:
        raise CliError(str(exc), EXIT_TOO_LARGE) from exc
    return EXIT_OK


def _load_assignment(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read coloring {path}: {exc}", EXIT_USAGE) from exc
    assignment = doc.get("assignment") if isinstance(doc, dict) else doc
    if not isinstance(assignment, list) or not all(isinstance(c, int) for c in assignment):
        raise CliError("coloring must be a list of integers or an object with 'assignment'", EXIT_USAGE)
    return assignment


def cmd_verify(args) -> int:
    D = _load(args.graph)
    assignment = _load_assignment(args.coloring)
    if len(assignment) != D.n:
        raise CliError(f"coloring has {len(assignment)} entries, graph has {D.n} vertices", EXIT_USAGE)
    report = verify_coloring(D, assignment)
    print(json.dumps({
        "valid": report.valid,
        "violations": [{"color": c, "cycle": cyc} for c, cyc in report.violations],
    }))
    return EXIT_OK if report.valid else EXIT_INVALID


def cmd_gen(args) -> int:
    try:
        if args.kind == "cycle":
            D = gen_directed_cycle(args.n)
        elif args.kind == "circulant":
            D = gen_circulant(args.n, args.steps)
        else:
            D = gen_random_digirth(args.n, args.p, args.gamma, args.seed)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_USAGE) from exc
    text = format_edge_list(D)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_digirth(args) -> int:
    print(_digirth_json(digirth(_load(args.input))))
    return EXIT_OK


def cmd_stats(args) -> int:
    D = _load(args.input)
    if D.n == 0:
        raise CliError("digraph has no vertices", EXIT_PRECONDITION)
    doc = {"n": D.n, "m": D.m, **degree_stats(D).as_dict()}
    print(json.dumps(doc))
    return EXIT_OK


def cmd_bench(args) -> int:
    cfg = BenchConfig(
        instances=args.instances,
        seed=args.seed,
        n_min=args.n_min,
        n_max=args.n_max,
        cap=args.cap,
        timing=args.timing,
        workers=args.workers,
    )
    text = rows_to_csv(run_bench(cfg))
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dicolor", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="acyclic coloring via the degree-split/peel pipeline")
    p.add_argument("input")
    p.add_argument("--g", type=int, default=None, help="girth parameter (default: auto)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--check", action="store_true", help="re-verify before printing")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("exact", help="exact dichromatic number")
    p.add_argument("input")
    p.add_argument("--cap", type=int, default=DEFAULT_N_CAP)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("verify", help="check a coloring JSON against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a generated instance as an edge list")
    p.add_argument("-o", "--output", default=None)
    kinds = p.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("cycle")
    k.add_argument("n", type=int)
    k = kinds.add_parser("circulant")
    k.add_argument("n", type=int)
    k.add_argument("steps", type=int, nargs="+")
    k = kinds.add_parser("random")
    k.add_argument("n", type=int)
    k.add_argument("p", type=float)
    k.add_argument("gamma", type=int)
    k.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("digirth", help="shortest directed cycle length, or inf")
    p.add_argument("input")
    p.set_defaults(func=cmd_digirth)

    p = sub.add_parser("stats", help="degree statistics")
    p.add_argument("input")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("bench", help="CSV comparison over a seeded random ensemble")
    p.add_argument("--instances", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=8)
    p.add_argument("--n-max", type=int, default=40)
    p.add_argument("--cap", type=int, default=DEFAULT_N_CAP)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--timing", action="store_true",
                   help="fill the ms_* columns (makes the CSV run-dependent)")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"dicolor: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
