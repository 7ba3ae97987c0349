import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import tworough

DATA = Path(os.environ.get("TWOROUGH_TEST_DATA_DIR", Path(__file__).resolve().parents[1] / "data"))


@pytest.fixture
def example():
    return tworough.Relation.parse((DATA / "worked_example.txt").read_text())


def test_parse_and_neighborhoods(example):
    assert example.shape == (5, 6)
    assert example.right_neighborhood("x4") == ["y1", "y3", "y4", "y5", "y6"]
    assert example.left_neighborhood("y3") == ["x2", "x4"]
    assert example.is_serial()
    assert example.solitary() == []
    u_blocks, v_blocks = example.partitions()
    assert sorted(u_blocks) == [["x1", "x5"], ["x2"], ["x3"], ["x4"]]
    assert sorted(v_blocks) == [["y1", "y5"], ["y2"], ["y3", "y6"], ["y4"]]
    assert example.saturation_identity_holds()


def test_round_trip(example):
    assert tworough.Relation.parse(example.render()) == example


def test_approximations(example):
    y = ["y1", "y2", "y4"]
    assert tworough.lower(example, y) == ["x3"]
    assert tworough.upper(example, y) == ["x1", "x3", "x4", "x5"]
    assert tworough.upper(example, y, strategy="matrix") == tworough.upper(example, y)
    assert tworough.upper(example, y, strategy="neighborhood") == tworough.upper(example, y)
    assert tworough.boundary(example, y) == ["x1", "x4", "x5"]
    assert tworough.rough_type(example, y) == 1
    assert tworough.rough_type(example, ["y1", "y2", "y6"]) == 4


def test_classify(example):
    out = tworough.classify(example, [("Y1", ["y1", "y2", "y4"]), ("Y2", ["y3", "y5", "y6"])])
    assert out["lowers"] == [["x3"], ["x2"]]
    assert out["accuracy"] == Fraction(1, 4)
    assert out["quality"] == Fraction(1, 3)
    assert out["quality_u"] == Fraction(2, 5)
    assert not out["definable"]
    assert out["dualities_violated"] == 0
    assert out["corollaries_violated"] == 0


def test_errors(example):
    with pytest.raises(tworough.ParseError):
        tworough.Relation.parse("V: y1 y2\nx1: 1 0 1\n")
    with pytest.raises(tworough.UnknownLabelError):
        tworough.lower(example, ["y9"])
    with pytest.raises(tworough.ClassificationError):
        tworough.classify(example, [("Y1", ["y1"]), ("Y2", ["y1", "y2"])])
    with pytest.raises(tworough.TwoRoughError):
        tworough.Relation(["x1"], ["y1"], [[1, 0]])


def test_properties_and_tables(example):
    report = tworough.verify_relation(example)
    assert all(violations == 0 for _, violations in report.values())
    assert report["xi"][0] == 1
    table = tworough.type_table("union")
    assert table[1][1] == [1, 2, 3, 4]
    assert sum(len(cell) > 1 for row in table for cell in row) == 7
    w = tworough.find_witness("union", 2, 2, 4)
    assert w is not None
    assert tworough.rough_type(w["relation"], w["x"]) == 2
    assert tworough.find_witness("union", 3, 1, 2) is None


def test_report_json(example):
    doc = json.loads(tworough.neighbors_report(example))
    assert doc["schema_version"] == 1
    assert doc["serial"] is True
