import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import adw

DATA = Path(__file__).resolve().parents[2] / "data"


def load(name):
    return json.loads((DATA / name).read_text())


NILP2 = {"dimension": 2, "succ": [{"i": 0, "j": 0, "k": 1, "c": "1"}], "prec": []}
BAD1D = {"dimension": 1, "succ": [{"i": 0, "j": 0, "k": 0, "c": "1"}], "prec": []}


def test_axiom_check_verdicts():
    assert adw.check_anti_dendriform({"dimension": 2})["verdict"] == "pass"
    assert adw.check_anti_dendriform(NILP2)["verdict"] == "pass"
    rep = adw.check_anti_dendriform(BAD1D)
    assert rep["verdict"] == "fail"
    v = rep["violations"][0]
    assert v["equation"] == "A1"
    assert v["witness"] == [0, 0, 0]


def test_dimension_one_sweep_only_zero_passes():
    for a in range(-2, 3):
        for b in range(-2, 3):
            alg = {
                "dimension": 1,
                "succ": [{"i": 0, "j": 0, "k": 0, "c": str(a)}],
                "prec": [{"i": 0, "j": 0, "k": 0, "c": str(b)}],
            }
            passed = adw.check_anti_dendriform(alg)["verdict"] == "pass"
            assert passed == (a == 0 and b == 0)


def test_representation_and_semidirect_product():
    reg = adw.regular_representation(NILP2)
    assert adw.check_representation(reg)["verdict"] == "pass"
    dual = adw.dual_representation(reg)
    assert adw.check_representation(dual)["verdict"] == "pass"
    sd = adw.semidirect_product(reg)
    assert sd["dimension"] == 4
    assert adw.check_anti_dendriform(sd)["verdict"] == "pass"


def test_associated_product_is_exact():
    op = adw.associated_associative(NILP2)
    assert op["product"] == [{"i": 0, "j": 0, "k": 1, "c": "1"}]


def test_ybe_residual_of_skew_r_vanishes():
    res = adw.adybe_residual(NILP2, load("r_skew.json"))
    assert res["entries"] == []


def test_gh2_zero_tuples_not_cohomologous():
    z = [["0"]]
    t0 = {"n": 1, "A": z, "B": z, "C": z, "D": z, "theta": ["0"], "epsilon": ["0"]}
    t1 = dict(t0, theta=["1"])
    assert adw.check_gh2_tuple(t1)["verdict"] == "pass"
    verdict = adw.gh2_tuples_cohomologous(t0, t1)
    assert verdict["cohomologous"] is False
    assert "certificate" in verdict


def test_section_cocycle_and_factorize():
    res = adw.cocycle_from_section(NILP2, adw.matrix([[1, 0]]), adw.matrix([[1], [Fraction(1, 3)]]))
    assert adw.check_crossed_system(res["datum"])["verdict"] == "pass"
    assert adw.factorize(NILP2, [0], [1]) is None
    datum = adw.factorize({"dimension": 2}, [0], [1])
    assert adw.check_matched_pair(datum)["verdict"] == "pass"


def test_o_operator_lift():
    reg = adw.regular_representation(NILP2)
    lift = adw.o_operator_to_ybe(adw.matrix([[0, 0], [0, 0]]), reg)
    assert lift["oOperator"] and lift["zeroResidual"]
    assert lift["ambient"]["dimension"] == 4


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        adw.check_anti_dendriform({"dimension": -1})
    bad_rep = {"algebra": BAD1D, "modDim": 1}
    with pytest.raises(RuntimeError):
        adw.semidirect_product(dict(bad_rep, lsucc=[{"x": 0, "r": 0, "c": 0, "v": "1"}]))


def test_cli_in_process():
    code, out, _ = adw.run_cli(["algebra", "check", str(DATA / "bad1d.json"), "--json"])
    assert code == 1
    assert json.loads(out)["violations"][0]["equation"] == "A1"
    code, _, _ = adw.run_cli(["algebra", "check", str(DATA / "zero2.json")])
    assert code == 0
    code, _, _ = adw.run_cli(["nonsense"])
    assert code == 2
