import json
from fractions import Fraction

import pytest

import xop


def test_classical_charlier():
    assert xop.exceptional("charlier", 2, a=1) == [Fraction(1, 2), Fraction(-3, 2), Fraction(1, 2)]


def test_hermite_lambda():
    assert xop.eigenvalue("hermite", F=[1, 2]) == [0, 2, 0, Fraction(4, 3)]


def test_charlier_recurrence():
    rec = xop.recurrence("charlier", a=2, F=[1, 2], const="-4/3")
    assert rec["order"] == 7
    num, den = rec["A"][-3]
    assert num == [Fraction(4, 3)] and den == [1]


def test_minimal_order():
    r = xop.minimal_order("meixner", a=Fraction(1, 2), c=2, F2=[1])
    assert r["r_min"] == 2 and r["order"] == 5


def test_duality():
    assert xop.verify_duality("charlier", a="1/2", F=[2, 3], m_max=4, v_max=12)


def test_paper_cases():
    ids = xop.paper_cases()
    assert "charlier-12-ord7" in ids
    assert xop.verify_paper("charlier-12-ord7")["passed"]


def test_cli():
    code, out, _ = xop.cli(["poly", "--family", "hermite", "--n", "0"])
    assert (code, out) == (0, "1\n")
    code, out, _ = xop.cli(["lambda", "--family", "hermite", "--F", "1,2", "--format", "json"])
    assert code == 0 and json.loads(out)["schema_version"] == "1"
    assert xop.cli(["bogus"])[0] == 2


def test_errors():
    with pytest.raises(xop.ParameterError):
        xop.exceptional("charlier", 2, a=0)
    with pytest.raises(xop.ParameterError):
        xop.exceptional("charlier", 2)
    with pytest.raises(xop.UnsupportedFamilyError):
        xop.verify_duality("hermite", F=[1, 2])
