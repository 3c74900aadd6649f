import json
from fractions import Fraction

import pytest

from chevalley import check_jacobi, verify_all
from chevalley.tables import (
    format_rational,
    matrix_from_json,
    matrix_table,
    matrix_to_json,
    pairs_table,
    quartets_table,
    report_text,
    report_to_dict,
    report_to_json,
    roots_table,
)


def test_format_rational():
    assert format_rational(2) == "2"
    assert format_rational(Fraction(2, 3)) == "2/3"
    assert format_rational(Fraction(-1, 2)) == "-1/2"
    assert format_rational(Fraction(4, 2)) == "2"


def test_roots_markdown_layout(make_system):
    text = roots_table(make_system("B", 6), "md")
    lines = text.strip().splitlines()
    assert lines[0] == "| index | coords | squared length |"
    assert len(lines) == 2 + 36
    assert "| 15 | [0, 0, 0, 0, 1, 2] | 2 |" in lines
    assert lines[-1] == "| 35 | [1, 2, 2, 2, 2, 2] | 2 |"


def test_roots_json_and_csv(make_system):
    system = make_system("G", 2)
    payload = json.loads(roots_table(system, "json"))
    assert payload["kind"] == "G" and payload["rank"] == 2
    assert payload["roots"][1] == {"index": 1, "coords": [0, 1], "squared_length": "2/3"}
    csv_text = roots_table(system, "csv")
    assert csv_text.splitlines()[0] == "index,coords,squared_length"
    assert "1,0 1,2/3" in csv_text


def test_output_is_deterministic(make_system):
    system = make_system("C", 4)
    for fmt in ("json", "csv", "md"):
        assert roots_table(system, fmt) == roots_table(system, fmt)
        assert pairs_table(system, fmt) == pairs_table(system, fmt)
        assert quartets_table(system, fmt) == quartets_table(system, fmt)


def test_pairs_json_content(make_system):
    payload = json.loads(pairs_table(make_system("B", 2), "json"))
    assert payload["sums"] == [
        {
            "sum_index": 2,
            "sum_coords": [1, 1],
            "pairs": [[0, 1]],
            "extraspecial": [0, 1],
            "constant": 1,
        },
        {
            "sum_index": 3,
            "sum_coords": [0, 1],
            "pairs": [[1, 2]],
            "extraspecial": [1, 2],
            "constant": 2,
        },
    ]


def test_pairs_json_sum_coords_fix(make_system):
    # guard: coords must belong to the sum root, not to a member pair
    payload = json.loads(pairs_table(make_system("B", 2), "json"))
    by_index = {entry["sum_index"]: entry for entry in payload["sums"]}
    system = make_system("B", 2)
    for gamma, entry in by_index.items():
        assert tuple(entry["sum_coords"]) == system.positive_roots[gamma]


def test_quartets_table_f4(make_system):
    payload = json.loads(quartets_table(make_system("F", 4), "json"))
    assert len(payload["quartets"]) == 48
    assert payload["summary"]["total"] == 48
    assert payload["summary"]["simple"] == 38
    md = quartets_table(make_system("F", 4), "md")
    assert "total: 48" in md and "simple: 38" in md


def test_matrix_round_trip(make_system, make_matrix):
    system = make_system("C", 3)
    matrix = make_matrix("C", 3)
    text = matrix_to_json(system, matrix)
    system2, matrix2 = matrix_from_json(text)
    assert system2.positive_roots == system.positive_roots
    assert matrix2 == matrix
    assert verify_all(system2, matrix2).passed


def test_matrix_import_rejects_foreign_root_order(make_system, make_matrix):
    system = make_system("B", 2)
    payload = json.loads(matrix_to_json(system, make_matrix("B", 2)))
    payload["roots"][0], payload["roots"][1] = payload["roots"][1], payload["roots"][0]
    with pytest.raises(ValueError):
        matrix_from_json(json.dumps(payload))


def test_matrix_csv_and_md(make_system, make_matrix):
    system = make_system("B", 2)
    matrix = make_matrix("B", 2)
    csv_text = matrix_table(system, matrix, "csv")
    assert csv_text.splitlines()[0] == "i,j,coords_i,coords_j,n"
    assert "0,1,1 0,0 1,1" in csv_text
    md_text = matrix_table(system, matrix, "md")
    assert "| 1 | 2 | [0, 1] | [1, 1] | 2 |" in md_text


def test_report_serialization(make_system, make_matrix):
    report = check_jacobi(make_system("B", 2), make_matrix("B", 2))
    data = report_to_dict(report)
    assert data["passed"] is True
    assert data["checks"][0]["name"] == "jacobi"
    assert data["checks"][0]["failure_count"] == 0
    assert json.loads(report_to_json(report)) == data
    text = report_text(report)
    assert "jacobi: population=120 ok" in text
    assert text.strip().endswith("result: PASS")


def test_report_text_shows_witnesses(make_matrix):
    from chevalley import check_antisymmetry

    corrupted = make_matrix("B", 2).copy()
    corrupted.set_entry(0, 1, 5)
    report = check_antisymmetry(corrupted)
    text = report_text(report)
    assert "FAILED" in text and "witness" in text
    assert text.strip().endswith("result: FAIL")
