import json

import pytest

import scext


def test_builtin_and_validate():
    m = scext.builtin("triplet", p=2)
    weights = {l["name"]: l["weight"] for l in m["labels"]}
    assert weights["X2+"] == "-1/8"
    assert weights["X1-"] == "1"
    assert scext.validate(m) == []


def test_extend_symplectic_fermions():
    r = scext.extend(scext.builtin("triplet", p=2))
    assert r["parity"] == "IntegerGradedSVOA_WrongStatistics"
    assert [s["label"] for s in r["sectors"]] == ["X1+", "X1-"]


def test_lift_and_induce():
    m = scext.builtin("triplet", p=2)
    d = scext.lift(m, "X2+")
    assert d["lifts"] is False
    assert d["phase"] == "1/2"
    assert scext.induce(m, "P1+")["sectors"] == ["P1+", "P1-"]
    with pytest.raises(ValueError):
        scext.induce(m, "X2+")


def test_osp_family():
    c = scext.family("osp")
    assert len(c["derived"]["simple_lifts"]) == 4
    assert len(c["derived"]["lift_classes"]) == 2
    assert c["divergences"] == []


def test_family_parities():
    assert scext.family("C", p=4)["parity"] == "IntegerGradedVOA"
    assert scext.family("B", p=5)["parity"] == "IntegerGradedSVOA_WrongStatistics"
    odd = scext.family("A", p=3)
    assert odd["divergences"]
    assert odd["vacuum_lifts"] is True


def test_cocycles():
    cs = scext.cocycle_enumerate("Z2", 4)
    assert len(cs) == 4 == scext.cocycle_count("Z2", 4)
    omegas = sorted(c["Omega"].get("1,1", "0") for c in cs)
    assert omegas == ["0", "1/2", "1/4", "3/4"]
    for c in cs:
        assert scext.cocycle_verify(c)["ok"]
        assert scext.cocycle_monodromy(c)["ok"]
    i = {"group": "Z2", "m": 4, "Omega": {"1,1": "1/4"}, "F": {"1,1,1": "1/2"}}
    assert scext.cocycle_quadratic(i)["q"]["1"] == "1/4"
    assert scext.cocycle_pullback(i)
    assert scext.cocycle_equivalent(i, i, 4) is not None
    assert scext.cocycle_equivalent(i, {"group": "Z2", "m": 4}, 4) is None


def test_cli_passthrough():
    code, out, _ = scext.run_cli("lift", "--model", "triplet", "--p", 2, "--module", "X2+", "--json")
    assert code == 0
    assert json.loads(out)["phase"] == "1/2"
    assert scext.run_cli("nonsense")[0] == 1
