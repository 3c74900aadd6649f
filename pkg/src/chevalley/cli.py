"""Command-line front end.

    chevalley <roots|pairs|quartets|constants|verify|bench>
        --diagram <A|B|C|D|E|F|G> --rank <n>
        [--format json|csv|md] [--out PATH] [--reps N] [--force-general]

Exit status 0 on success; 1 when verification fails; 2 on usage errors.
Payloads are byte-deterministic for a fixed configuration (bench timing
fields are the single exception and are isolated in their own keys).
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time
from typing import Optional

from .constants import compute_all_positive
from .pairs import assign_extraspecial_constants, build_sum_dictionary
from .roots import Diagram, build_root_system
from .tables import (
    FORMATS,
    matrix_table,
    pairs_table,
    quartets_table,
    report_text,
    report_to_json,
    roots_table,
)
from .verify import verify_all

_DEFAULT_MAX_RANK = 12


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chevalley",
        description="Root systems, extraspecial pairs, quartets and certified "
        "Chevalley-basis structure constants in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    default_format = os.environ.get("CHEVALLEY_FORMAT", "md")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--diagram", required=True, choices=list("ABCDEFG"))
        p.add_argument("--rank", required=True, type=int)
        p.add_argument("--format", choices=list(FORMATS), default=default_format)
        p.add_argument("--out", default=None, help="write output here instead of stdout")
        p.add_argument(
            "--max-rank",
            type=int,
            default=_DEFAULT_MAX_RANK,
            help="ceiling for kinds A-D (default 12); keeps exhaustive scans desk-sized",
        )

    common(sub.add_parser("roots", help="positive roots in regular ordering"))
    common(sub.add_parser("pairs", help="special/extraspecial pair dictionary"))
    common(sub.add_parser("quartets", help="quartet table and census"))
    p_const = sub.add_parser("constants", help="structure-constant matrix export")
    common(p_const)
    p_const.add_argument("--force-general", action="store_true")
    p_verify = sub.add_parser("verify", help="run every certification oracle")
    common(p_verify)
    p_verify.add_argument("--force-general", action="store_true")
    p_bench = sub.add_parser("bench", help="specialized vs general formula timing")
    common(p_bench)
    p_bench.add_argument("--reps", type=int, default=20)
    return parser


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _bench(system, reps: int) -> dict:
    dictionary = build_sum_dictionary(system)
    assignment = assign_extraspecial_constants(system, dictionary)
    specialized = []
    general = []
    for _ in range(reps):
        start = time.perf_counter()
        compute_all_positive(system, dictionary, assignment)
        specialized.append(time.perf_counter() - start)
        start = time.perf_counter()
        compute_all_positive(system, dictionary, assignment, force_general=True)
        general.append(time.perf_counter() - start)
    med_s = statistics.median(specialized)
    med_g = statistics.median(general)
    return {
        "diagram": str(system.diagram),
        "reps": reps,
        "median_specialized_s": med_s,
        "median_general_s": med_g,
        "ratio_specialized_over_general": med_s / med_g if med_g else None,
    }


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        diagram = Diagram(args.diagram, args.rank)
    except ValueError as exc:
        parser.exit(2, f"chevalley: {exc}\n")
    if args.diagram in "ABCD" and args.rank > args.max_rank:
        parser.exit(
            2,
            f"chevalley: rank {args.rank} exceeds --max-rank {args.max_rank} "
            f"for kind {args.diagram}\n",
        )
    system = build_root_system(diagram)

    if args.command == "roots":
        _emit(roots_table(system, args.format), args.out)
        return 0
    if args.command == "pairs":
        _emit(pairs_table(system, args.format), args.out)
        return 0
    if args.command == "quartets":
        _emit(quartets_table(system, args.format), args.out)
        return 0
    if args.command == "constants":
        matrix = compute_all_positive(system, force_general=args.force_general)
        _emit(matrix_table(system, matrix, args.format), args.out)
        return 0
    if args.command == "verify":
        matrix = compute_all_positive(system, force_general=args.force_general)
        report = verify_all(system, matrix, with_formula_cross_check=True)
        text = report_to_json(report) if args.format == "json" else report_text(report)
        _emit(text, args.out)
        return 0 if report.passed else 1
    # bench
    result = _bench(system, args.reps)
    if args.format == "json":
        _emit(json.dumps(result, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [f"{key}: {value}" for key, value in sorted(result.items())]
        _emit("\n".join(lines) + "\n", args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
