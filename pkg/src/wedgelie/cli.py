"""Command-line front end.

Exit status: 0 on success, 1 when ``verify`` finds a disagreement, 2 on
invalid input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import report
from .alphabet import build_sphere_wedge_alphabet
from .basis import basis_to_csv, basis_to_jsonl, enumerate_basic_products, render_whitehead
from .errors import WedgeLieError
from .hilton import hilton_rank_table, r_sequence

SUBCOMMANDS = ("basis", "ranks", "census", "verify", "aut", "skeleton")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _sphere_list(text: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--a", type=int, default=None, help="parameter a of the wedge (default 1)")
    common.add_argument("--max-dim", type=int, default=13, help="largest Whitehead dimension")
    common.add_argument("--include-squares", action="store_true")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--unicode", action="store_true", help="use χ/η/ρ glyphs")
    common.add_argument("--spheres", type=_sphere_list, default=None,
                        help="comma-separated sphere dimensions; replaces --a")
    common.add_argument("--max-weight", type=int, default=None)

    parser = _Parser(prog="wedgelie", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    sub.add_parser("basis", parents=[common], help="list basic products")
    sub.add_parser("ranks", parents=[common], help="rational rank table")
    sub.add_parser("census", parents=[common], help="generators by dimension")
    v = sub.add_parser("verify", parents=[common], help="cross-check three independent counts")
    v.add_argument("--dump", action="store_true", help="print the tensor-algebra expansions")
    v.add_argument("--allow-large", action="store_true")
    sub.add_parser("aut", parents=[common], help="automorphism rank ledger")
    sub.add_parser("skeleton", parents=[common], help="vanishing skeleton dimensions")
    return parser


def _alphabet(args):
    if args.spheres is not None:
        return build_sphere_wedge_alphabet(args.spheres)
    return report.em_alphabet_for(args.a, args.max_dim)


def _needs_a(args) -> None:
    if args.spheres is not None:
        raise _UsageError(f"{args.subcommand} is defined for the Eilenberg-MacLane wedge only; drop --spheres")


def run(args) -> int:
    out = sys.stdout
    fmt = args.format
    if args.subcommand == "basis":
        products = enumerate_basic_products(_alphabet(args), args.max_dim, max_weight=args.max_weight)
        if fmt == "json":
            out.write(basis_to_jsonl(products, args.unicode))
        elif fmt == "csv":
            out.write(basis_to_csv(products, args.unicode))
        else:
            rows = [[p.height, p.weight, render_whitehead(p, args.unicode)] for p in products]
            out.write(report.text_table(["height", "weight", "product"], rows))
    elif args.subcommand == "ranks":
        table = hilton_rank_table(_alphabet(args), args.max_dim, args.include_squares,
                                  max_weight=args.max_weight)
        out.write(report.format_rank_table(table, fmt))
    elif args.subcommand == "census":
        _needs_a(args)
        rows = report.census(args.a, args.max_dim, args.unicode, args.max_weight)
        out.write(report.format_census(rows, fmt))
    elif args.subcommand == "aut":
        _needs_a(args)
        m = 1
        while r_sequence(args.a, m + 1) <= args.max_dim:
            m += 1
        rows = report.aut_ledger(args.a, m, args.include_squares)
        out.write(report.format_aut(rows, fmt))
    elif args.subcommand == "skeleton":
        _needs_a(args)
        out.write(report.format_skeleton(report.skeleton_table(args.a, args.max_dim, args.unicode), fmt))
    elif args.subcommand == "verify":
        source = _alphabet(args) if args.spheres is not None else args.a
        rep = report.verify(source, args.max_dim, allow_large=args.allow_large, dump=args.dump,
                            max_weight=args.max_weight)
        out.write(report.format_verify(rep, fmt))
        return 0 if rep.passed else 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.spheres is not None and args.a is not None:
            raise _UsageError("--spheres and --a are mutually exclusive")
        if args.a is None:
            args.a = 1
        if args.a < 1:
            raise _UsageError("--a must be a positive integer")
        if args.max_dim < 2:
            raise _UsageError("--max-dim must be at least 2")
        return run(args)
    except _UsageError as exc:
        print(f"wedgelie: error: {exc}", file=sys.stderr)
        return 2
    except WedgeLieError as exc:
        print(f"wedgelie: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
