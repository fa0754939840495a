"""Command-line front end.

Exit status: 0 when everything checked out, 1 when violations were found,
2 on usage, parse, or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import ars as ars_mod
from .beta import validate_seq
from .checks import SUITES, run_suite
from .errors import ZlamError
from .superdev import bullet, rhs_steps, self_steps, z_steps
from .syntax import format_trace, parse, parse_trace, print_term

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(ZlamError):
    pass


def cmd_bullet(args: argparse.Namespace) -> int:
    print(print_term(bullet(parse(args.term))))
    return EXIT_OK


def cmd_trace(args: argparse.Namespace) -> int:
    t = parse(args.term)
    if args.kind == "self":
        seq = self_steps(t)
    elif args.kind == "rhs":
        if args.var is None or args.with_ is None:
            raise UsageError("trace rhs needs --var and --with")
        seq = rhs_steps(t, args.var, parse(args.with_))
    else:
        if args.to is None:
            raise UsageError(f"trace {args.kind} needs --to")
        first, second = z_steps(t, parse(args.to))
        seq = first if args.kind == "z-left" else second
    assert validate_seq(seq)
    sys.stdout.write(format_trace(seq))
    return EXIT_OK


def _read_trace(path: str) -> list:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None
    seq = parse_trace(text)
    if not validate_seq(seq):
        raise UsageError(f"{path}: not a valid reduction trace")
    return seq


def cmd_join(args: argparse.Namespace) -> int:
    left, right = _read_trace(args.left), _read_trace(args.right)
    if left[0] != right[0]:
        raise UsageError(f"traces start at different terms: {left[0]} vs {right[0]}")
    e, wl, wr = ars_mod.confluence_join(ars_mod.lambda_view(), bullet, z_steps, left, right)
    sys.stdout.write(f"# common reduct\n{print_term(e)}\n")
    sys.stdout.write("# left extension\n" + format_trace(wl))
    sys.stdout.write("# right extension\n" + format_trace(wr))
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    params = {"max_size": args.max_size, "nvars": args.vars, "depth": args.depth, "seed": args.seed}
    if args.suite == "angle":
        params["count"] = args.count
    report = run_suite(args.suite, **params)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(report.summary())
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_ars(args: argparse.Namespace) -> int:
    try:
        system = ars_mod.FiniteArs.load(args.file)
    except OSError as exc:
        raise UsageError(f"{args.file}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.file}: invalid JSON: {exc}") from None
    view, b = system.view(), system.bullet_map()
    if args.action == "check-z":
        v = ars_mod.check_z(view, b, system.elements, args.depth)
    elif args.action == "check-angle":
        rel = ars_mod.dev_relation(view, b, system.elements, args.depth)
        v = ars_mod.check_angle(view, b, rel, system.elements, args.depth)
    else:
        return _ars_join(system, view, b, args)
    print("ok" if v is None else f"violation {v}")
    return EXIT_OK if v is None else EXIT_VIOLATION


def _ars_join(system, view, b, args: argparse.Namespace) -> int:
    if None in (args.from_, args.left, args.right):
        raise UsageError("ars join needs --from, --left and --right")
    for label in (args.from_, args.left, args.right):
        if label not in system.elements:
            raise UsageError(f"unknown element {label!r}")
    left = view.path(args.from_, args.left, args.depth)
    right = view.path(args.from_, args.right, args.depth)
    if left is None or right is None:
        raise UsageError(f"{args.left} and {args.right} must both be reachable from {args.from_}")
    witness = ars_mod.search_z_witness(view, b, args.depth)
    try:
        e, wl, wr = ars_mod.confluence_join(view, b, witness, left, right)
    except ZlamError as exc:
        print(f"join failed: {exc}")
        return EXIT_VIOLATION
    print(f"common reduct: {e}")
    print("left: " + " -> ".join(wl))
    print("right: " + " -> ".join(wr))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zlam", description="Lambda-calculus Z-property toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bullet", help="print the full superdevelopment of a term")
    p.add_argument("term")
    p.set_defaults(func=cmd_bullet)

    p = sub.add_parser("trace", help="print a witness reduction, one term per line")
    p.add_argument("kind", choices=["self", "z-left", "z-right", "rhs"])
    p.add_argument("term")
    p.add_argument("--to", help="one-step reduct of TERM (z-left, z-right)")
    p.add_argument("--var", help="substituted variable (rhs)")
    p.add_argument("--with", dest="with_", metavar="TERM", help="substituend (rhs)")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("join", help="join two traces that start at the same term")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=cmd_join)

    p = sub.add_parser("check", help="run an exhaustive or randomized check suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--vars", type=int, default=2)
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=100, help="random systems for the angle suite")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ars", help="check a finite ARS given as JSON")
    p.add_argument("file")
    p.add_argument("action", choices=["check-z", "check-angle", "join"])
    p.add_argument("--from", dest="from_")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--depth", type=int, default=8)
    p.set_defaults(func=cmd_ars)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ZlamError, ValueError) as exc:
        print(f"zlam: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
