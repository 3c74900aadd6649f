"""Emitters and loaders: JSON, CSV and Markdown views of every artifact.

All output is byte-deterministic for a fixed input: keys are sorted, rows
follow the regular ordering and rationals render as ``p/q`` in lowest terms
(plain integers stay bare).
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .constants import ConstantMatrix
from .pairs import ExtraspecialAssignment, SumDictionary, assign_extraspecial_constants, build_sum_dictionary
from .quartets import QuartetSummary, classify_quartet, enumerate_quartets, quartet_report
from .roots import Diagram, RootSystem, build_root_system
from .verify import VerificationReport

FORMATS = ("json", "csv", "md")


def format_rational(value) -> str:
    """Render an exact number: integers bare, otherwise p/q in lowest terms."""
    as_fraction = Fraction(value)
    if as_fraction.denominator == 1:
        return str(as_fraction.numerator)
    return f"{as_fraction.numerator}/{as_fraction.denominator}"


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(header: List[str], rows: List[List]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _md_table(header: List[str], rows: List[List]) -> str:
    lines = [
        "| " + " | ".join(header) + " |",
        "| " + " | ".join("---" for _ in header) + " |",
    ]
    for row in rows:
        lines.append("| " + " | ".join(str(cell) for cell in row) + " |")
    return "\n".join(lines) + "\n"


def _coords_text(coords) -> str:
    return "[" + ", ".join(str(c) for c in coords) + "]"


# ---------------------------------------------------------------- roots

def roots_rows(system: RootSystem) -> List[dict]:
    return [
        {
            "index": i,
            "coords": list(root),
            "squared_length": format_rational(system.squared_length(i)),
        }
        for i, root in enumerate(system.positive_roots)
    ]


def roots_table(system: RootSystem, fmt: str = "md") -> str:
    rows = roots_rows(system)
    if fmt == "json":
        return _json_text(
            {
                "kind": system.kind,
                "rank": system.rank,
                "roots": rows,
            }
        )
    if fmt == "csv":
        return _csv_text(
            ["index", "coords", "squared_length"],
            [[r["index"], " ".join(map(str, r["coords"])), r["squared_length"]] for r in rows],
        )
    return _md_table(
        ["index", "coords", "squared length"],
        [[r["index"], _coords_text(r["coords"]), r["squared_length"]] for r in rows],
    )


# ---------------------------------------------------------------- pairs

def pairs_rows(
    system: RootSystem,
    dictionary: Optional[SumDictionary] = None,
    assignment: Optional[ExtraspecialAssignment] = None,
) -> List[dict]:
    if dictionary is None:
        dictionary = build_sum_dictionary(system)
    if assignment is None:
        assignment = assign_extraspecial_constants(system, dictionary)
    rows = []
    for gamma in sorted(dictionary.keys()):
        pairs = dictionary.pairs_for(gamma)
        rows.append(
            {
                "sum_index": gamma,
                "sum_coords": list(system.positive_roots[gamma]),
                "pairs": [[p.i, p.j] for p in pairs],
                "extraspecial": [pairs[0].i, pairs[0].j],
                "constant": assignment.constant_for(gamma),
            }
        )
    return rows


def pairs_table(system: RootSystem, fmt: str = "md") -> str:
    rows = pairs_rows(system)
    if fmt == "json":
        return _json_text({"kind": system.kind, "rank": system.rank, "sums": rows})
    if fmt == "csv":
        return _csv_text(
            ["sum_index", "sum_coords", "pairs", "extraspecial", "constant"],
            [
                [
                    r["sum_index"],
                    " ".join(map(str, r["sum_coords"])),
                    ";".join(f"{i}+{j}" for i, j in r["pairs"]),
                    f"{r['extraspecial'][0]}+{r['extraspecial'][1]}",
                    r["constant"],
                ]
                for r in rows
            ],
        )
    return _md_table(
        ["sum", "coords", "special pairs", "extraspecial", "N"],
        [
            [
                r["sum_index"],
                _coords_text(r["sum_coords"]),
                ", ".join(f"({i}, {j})" for i, j in r["pairs"]),
                f"({r['extraspecial'][0]}, {r['extraspecial'][1]})",
                r["constant"],
            ]
            for r in rows
        ],
    )


# ---------------------------------------------------------------- quartets

def quartets_rows(system: RootSystem, include_coords: bool = False) -> List[dict]:
    quartets = enumerate_quartets(system)
    rows = []
    for ordinal, quartet in enumerate(quartets):
        cls = classify_quartet(system, quartet)
        row = {
            "ordinal": ordinal,
            "r1": quartet.r1,
            "r": quartet.r,
            "s": quartet.s,
            "s1": quartet.s1,
            "mono": cls.mono,
            "simple": cls.simple,
            "s_minus_r1_is_root": cls.s_minus_r1_is_root,
            "r_minus_r1_is_root": cls.r_minus_r1_is_root,
            "phi": format_rational(cls.phi),
        }
        if include_coords:
            row["coords"] = [
                list(system.positive_roots[k])
                for k in (quartet.r1, quartet.r, quartet.s, quartet.s1)
            ]
        rows.append(row)
    return rows


def summary_dict(summary: QuartetSummary) -> dict:
    def histogram(mapping) -> Dict[str, int]:
        return {format_rational(k): v for k, v in sorted(mapping.items())}

    return {
        "diagram": summary.diagram,
        "total": summary.total,
        "mono": summary.mono,
        "simple": summary.simple,
        "non_simple_ordinals": list(summary.non_simple_ordinals),
        "phi_quartets": histogram(summary.phi_quartets),
        "phi_extraspecial_pairs": histogram(summary.phi_extraspecial_pairs),
        "phi_quartet_bearing_pairs": histogram(summary.phi_quartet_bearing_pairs),
    }


def quartets_table(system: RootSystem, fmt: str = "md", include_coords: bool = False) -> str:
    rows = quartets_rows(system, include_coords)
    summary = summary_dict(quartet_report(system))
    if fmt == "json":
        return _json_text(
            {
                "kind": system.kind,
                "rank": system.rank,
                "quartets": rows,
                "summary": summary,
            }
        )
    header = ["ordinal", "r1", "r", "s", "s1", "mono", "simple", "s-r1 root", "r-r1 root", "phi"]
    cells = [
        [
            r["ordinal"], r["r1"], r["r"], r["s"], r["s1"],
            r["mono"], r["simple"], r["s_minus_r1_is_root"], r["r_minus_r1_is_root"], r["phi"],
        ]
        for r in rows
    ]
    if fmt == "csv":
        return _csv_text(
            [h.replace(" ", "_").replace("-", "_") for h in header], cells
        ) + "# summary: " + json.dumps(summary, sort_keys=True) + "\n"
    table = _md_table(header, cells)
    lines = [
        table,
        f"total: {summary['total']}",
        f"mono: {summary['mono']}",
        f"simple: {summary['simple']}",
        f"non-simple ordinals: {summary['non_simple_ordinals']}",
        f"phi over quartets: {summary['phi_quartets']}",
        f"phi over extraspecial pairs: {summary['phi_extraspecial_pairs']}",
        f"phi over quartet-bearing pairs: {summary['phi_quartet_bearing_pairs']}",
    ]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- matrix

def matrix_to_dict(system: RootSystem, matrix: ConstantMatrix) -> dict:
    return {
        "kind": system.kind,
        "rank": system.rank,
        "roots": [list(root) for root in system.positive_roots],
        "entries": [[i, j, value] for i, j, value in matrix.nonzero_upper()],
    }


def matrix_to_json(system: RootSystem, matrix: ConstantMatrix) -> str:
    return _json_text(matrix_to_dict(system, matrix))


def matrix_to_csv(system: RootSystem, matrix: ConstantMatrix) -> str:
    rows = [
        [i, j, " ".join(map(str, system.positive_roots[i])),
         " ".join(map(str, system.positive_roots[j])), value]
        for i, j, value in matrix.nonzero_upper()
    ]
    return _csv_text(["i", "j", "coords_i", "coords_j", "n"], rows)


def matrix_table(system: RootSystem, matrix: ConstantMatrix, fmt: str = "md") -> str:
    if fmt == "json":
        return matrix_to_json(system, matrix)
    if fmt == "csv":
        return matrix_to_csv(system, matrix)
    rows = [
        [i, j, _coords_text(system.positive_roots[i]), _coords_text(system.positive_roots[j]), value]
        for i, j, value in matrix.nonzero_upper()
    ]
    return _md_table(["i", "j", "root i", "root j", "N"], rows)


def matrix_from_json(text: str) -> Tuple[RootSystem, ConstantMatrix]:
    """Rebuild (system, matrix) from the JSON export schema.

    The stored root list is validated against a fresh build so that an
    export from a different ordering convention cannot be misread.  Entries
    absent from the sparse list are zero by schema.
    """
    payload = json.loads(text)
    system = build_root_system(Diagram(payload["kind"], payload["rank"]))
    stored = [tuple(root) for root in payload["roots"]]
    if stored != list(system.positive_roots):
        raise ValueError("stored root list does not match the regular ordering")
    matrix = ConstantMatrix(len(stored))
    for i in range(matrix.size):
        for j in range(matrix.size):
            if i != j:
                matrix.set_entry(i, j, 0)
    for i, j, value in payload["entries"]:
        matrix.set_antisymmetric(i, j, value)
    return system, matrix


# ---------------------------------------------------------------- reports

def report_to_dict(report: VerificationReport) -> dict:
    return {
        "passed": report.passed,
        "checks": [
            {
                "name": check.name,
                "population": check.population,
                "failure_count": len(check.failures),
                "failures": [list(map(str, witness)) for witness in check.failures],
            }
            for check in report.checks
        ],
    }


def report_to_json(report: VerificationReport) -> str:
    return _json_text(report_to_dict(report))


def report_text(report: VerificationReport) -> str:
    lines = []
    for check in report.checks:
        status = "ok" if check.passed else f"FAILED ({len(check.failures)} witnesses)"
        lines.append(f"{check.name}: population={check.population} {status}")
        for witness in check.failures[:10]:
            lines.append(f"  witness: {witness}")
    lines.append("result: " + ("PASS" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"
