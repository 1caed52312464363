import json
import os
import subprocess
from fractions import Fraction
from pathlib import Path

import jsonschema
import pytest

import quadcomp as qc


def test_classify_case_four():
    ds = qc.classify("x^4 + 2x^3 - x")
    assert ds == [{"g": "x^2 - x", "h": "x^2 + x", "case": "CaseFour", "params": {"c": Fraction(1)}}]
    assert qc.compose(ds[0]["g"], ds[0]["h"]) == qc.normalize("x^4 + 2x^3 - x")


def test_decompose_worked_instances():
    cases = [d["case"] for d in qc.classify("x^6 + 2x^4 + x^2 + 5")]
    assert cases == ["Cyclic", "SymmetricSquare"]
    assert qc.decompose("x^9 + x^5 + x^3 + 1") == []
    trivial = qc.decompose("x^3 + 1", include_trivial=True)
    assert {d["case"] for d in trivial} == {"Trivial"}


def test_rational_parameters_are_fractions():
    ds = qc.classify("2x^8 + 3x^6 - 27/32 x^2")
    assert ds[1]["params"]["c"] == Fraction(3, 4)
    assert qc.dickson(2, Fraction(1, 2)) == "x^2 - 1"
    assert qc.evaluate("1/2 x^2", 3) == Fraction(9, 2)


def test_dickson_match():
    m = qc.dickson_match("x^2 - 2")
    assert m == {"u": 1, "v": 0, "gamma": 1, "gamma_zero": False}
    assert qc.dickson_match("x^9 + x^5 + x^3 + 1") is None


def test_other_operations():
    assert qc.gv_determinant([1, 2], [0, 1]) == (1, True)
    assert qc.gv_determinant([1, 2], [0, 3]) == (0, False)
    assert qc.radical("x^3 - x^2") == "x^2 - x"
    assert qc.mason_stothers("x^2", "-x^2 + 1", "1") == (2, 3, True)


def test_verdicts():
    assert qc.theorem_a("x^9+x^5+x^3+1", "x^10+x^7+x^2")["status"] == "FiniteByTheoremA"
    v = qc.theorem_a("x^9+x^6+x^3+1", "x^10+x^7+x^2")
    assert v["status"] == "NotApplicable"
    assert ("gcd(n1,n2,n3)=1", False) in v["conditions"]
    assert qc.theorem_b("x^7+x^5+x^3+x^2+1", "x^24+x^3+x")["status"] == "FiniteByTheoremB"
    assert qc.theorem_b("x^7+x^5+x^3+x^2+1", "x^23+x^3+x")["status"] == "NotApplicable"


def test_search():
    assert qc.search_solutions("x^2", "2x^2", 100) == [(0, 0)]
    sols = qc.search_solutions("x^3", "x^2", 100)
    assert sols == sorted(sols)
    assert (16, -64) in sols and len(sols) == 9


def test_errors():
    with pytest.raises(qc.DomainError):
        qc.classify("x^3 + 1")
    with pytest.raises(qc.ParseError):
        qc.normalize("x +")
    with pytest.raises(ValueError):
        qc.search_solutions("x", "x", 11, max_bound=10)


CLI = os.environ.get("QUADCOMP_CLI")
SCHEMAS = Path(os.environ.get("QUADCOMP_SCHEMAS", Path(__file__).resolve().parents[2] / "schemas"))


def run_json(*args):
    out = subprocess.run([CLI, *args], check=True, capture_output=True, text=True).stdout
    return json.loads(out), out


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


@pytest.mark.skipif(not CLI, reason="QUADCOMP_CLI not set")
def test_cli_json_matches_schemas():
    doc, _ = run_json("decompose", "--json", "--include-trivial", "2x^8 + 3x^6 - 27/32 x^2")
    jsonschema.validate(doc, schema("decompositions"))
    assert [d["case"] for d in doc].count("CaseFour") == 1

    doc, _ = run_json("classify", "--json", "x^6 + 2x^4 + x^2 + 5")
    jsonschema.validate(doc, schema("decompositions"))
    assert list(doc[0]) == ["g", "h", "case", "params"]

    doc, _ = run_json("finiteness", "B", "x^7+x^5+x^3+x^2+1", "x^24+x^3+x", "--json")
    jsonschema.validate(doc, schema("verdict"))
    assert doc["status"] == "FiniteByTheoremB"

    doc, _ = run_json("solve", "x^3", "x^2", "--bound", "100", "--json")
    jsonschema.validate(doc, schema("solutions"))
    assert {"x": "16", "y": "64"} in doc


@pytest.mark.skipif(not CLI, reason="QUADCOMP_CLI not set")
def test_cli_is_deterministic():
    args = ("finiteness", "A", "x^9+x^5+x^3+1", "x^10+x^7+x^2", "--json")
    first = run_json(*args)[1]
    assert all(run_json(*args)[1] == first for _ in range(3))
