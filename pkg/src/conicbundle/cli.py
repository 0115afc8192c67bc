"""Command-line entry point: ``verify``, ``enumerate`` and ``bounds``.

Exit codes: 0 on success, 1 when the certificate has a failing leaf, 2 on
usage errors (argparse's own convention).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bounds, cases, certify, degree_bound
from .numeric import format_rational

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

TABLE_COLUMNS = ("d", "delta", "g", "pi", "class", "certified")


def _class_cell(c: cases.CandidateSolution) -> str:
    data = c.class_data or {}
    if "label" in data:
        return data["label"]
    return ",".join(f"{k}={v}" for k, v in data.items()) or "-"


def render_table(candidates: list[cases.CandidateSolution]) -> str:
    rows = [
        (str(c.d), str(c.delta), str(c.g), str(c.pi), _class_cell(c), "yes" if c.certified else "NO")
        for c in candidates
    ]
    widths = [max(len(r[i]) for r in [TABLE_COLUMNS, *rows]) for i in range(len(TABLE_COLUMNS))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(row, widths)) for row in [TABLE_COLUMNS, *rows]]
    lines.append(f"{len(rows)} survivor(s)")
    return "\n".join(lines) + "\n"


def cmd_verify(args: argparse.Namespace) -> int:
    cert = certify.run_full_verification(delta_max=args.delta_max, omit=args.omit_leaf)
    fmt = "json" if args.json else "text"
    sys.stdout.write(certify.serialize_certificate(cert, fmt).decode("utf-8"))
    if args.out:
        Path(args.out).write_bytes(certify.serialize_certificate(cert, "json"))
    return EXIT_OK if cert.all_passed else EXIT_FAILED


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.case == "cone":
        result = cases.enumerate_cone_case(args.delta_max)
        out = ["d = 2delta branch:", render_table(result.survivors_even)]
        out += ["d = 2delta+1 branch:", render_table(result.survivors_odd)]
        sys.stdout.write("\n".join(out))
    else:
        sys.stdout.write(render_table(cases.run_enumerator(args.case, args.delta_max)))
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.kind == "castelnuovo":
        print(bounds.castelnuovo_bound(args.degree, args.ambient))
    elif args.kind == "gp":
        print(format_rational(bounds.gp_bound(args.degree, args.surface)))
    else:
        result = degree_bound.global_bounds()
        print(f"d_max: {result.d_max}")
        print(f"delta_max: {result.delta_max}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conicbundle",
        description="Exact verification of the degree classification of conic bundles in P^4.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the full case analysis")
    verify.add_argument("--json", action="store_true", help="print the JSON certificate")
    verify.add_argument("--out", metavar="PATH", help="also write the JSON certificate to PATH")
    verify.add_argument(
        "--omit-leaf", metavar="ID", action="append", default=[],
        help="drop a leaf from the certificate (tamper check; repeatable)",
    )
    verify.add_argument(
        "--delta-max", type=int, default=None,
        help="override the certified bound on delta (tamper check)",
    )
    verify.set_defaults(func=cmd_verify)

    enum = sub.add_parser("enumerate", help="print the survivors of one case")
    enum.add_argument("case", choices=cases.CASES)
    enum.add_argument("--delta-max", type=int, default=None)
    enum.set_defaults(func=cmd_enumerate)

    bnd = sub.add_parser("bounds", help="print a genus or degree bound exactly")
    kinds = bnd.add_subparsers(dest="kind", required=True)
    cast = kinds.add_parser("castelnuovo", help="Castelnuovo bound in P^R")
    cast.add_argument("--degree", type=int, required=True)
    cast.add_argument("--ambient", type=int, required=True)
    gp = kinds.add_parser("gp", help="Gruson-Peskine bound on pi - 1")
    gp.add_argument("--degree", type=int, required=True)
    gp.add_argument("--surface", type=int, required=True, choices=bounds.GP_SURFACE_DEGREES)
    kinds.add_parser("degree-max", help="global bounds on d and delta")
    bnd.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"conicbundle: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
