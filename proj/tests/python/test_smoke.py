import json
import pathlib
from fractions import Fraction

import pytest

import adelic_chars as ac

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "golden"


def test_fractional_parts():
    assert ac.frac(Fraction(-1, 4)) == Fraction(3, 4)
    assert ac.frac_p(Fraction(5, 6), 2) == Fraction(1, 2)
    assert ac.frac_p(Fraction(5, 6), 3) == Fraction(1, 3)
    assert ac.frac_p("3/4", 3) == 0
    assert all(ac.global_phase_zero(Fraction(n, d)) for n in range(-30, 30) for d in range(1, 40))
    with pytest.raises(ac.DomainError):
        ac.frac_p(Fraction(1, 6), 4)
    with pytest.raises(ac.ParseError):
        ac.frac(0.5)


def test_catalog_round_trip():
    assert ac.catalog_names() == ["abelian-sl2", "heisenberg-1", "heisenberg-2", "free-3"]
    system, lambdas = ac.catalog("heisenberg-1")
    assert system.dim == 3
    assert system.basis_names == ["X", "Y", "Z"]
    assert set(lambdas) == {"zero", "center", "V"}
    again = ac.load_system(ac.system_json(system))
    assert again.to_json() == system.to_json()


def test_classify_matches_golden():
    for name in ac.catalog_names():
        system = ac.load_system((GOLDEN / name / "system.json").read_text())
        for path in sorted((GOLDEN / name).glob("lambda_*.json")):
            expected = json.loads((GOLDEN / name / path.name.replace("lambda_", "expected_")).read_text())
            assert ac.classify(system, path.read_text()) == expected["report"]


def test_heisenberg_center():
    system, lambdas = ac.catalog("heisenberg-1")
    report = ac.classify(system, lambdas["center"])
    assert report["k"]["dim"] == 0
    assert report["p"]["basis"] == [["0/1", "0/1", "1/1"]]
    assert report["duality_ok"]
    assert ac.eval(system, lambdas["center"], [0, 0, Fraction(1, 3)]) == Fraction(1, 3)
    assert not ac.same_quasi_orbit(system, lambdas["center"], lambdas["V"])
    moved = {"dim": 3, "components": [{"place": "inf", "vector": ["3/7", "-5/1", "1/1"]}]}
    assert ac.same_quasi_orbit(system, lambdas["center"], moved)


def test_errors():
    system, _ = ac.catalog("heisenberg-1")
    bad_dim = {"dim": 2, "components": [{"place": "inf", "vector": ["1/1", "0/1"]}]}
    with pytest.raises(ac.DimensionError):
        ac.classify(system, bad_dim)
    with pytest.raises(ac.ParseError):
        ac.load_system("{")
    broken = {"dim": 3, "structure": [[0, 1, 2, "1/1"], [0, 2, 1, "1/1"], [1, 2, 1, "1/1"]], "levi_generators": []}
    with pytest.raises(ac.ValidationError):
        ac.load_system(broken)


def test_verify_deterministic():
    system, _ = ac.catalog("abelian-sl2")
    a = ac.verify(system, suite="core", seed=5, lambdas=5)
    assert a == ac.verify(system, suite="core", seed=5, lambdas=5)
    assert all(r["result"] == "pass" for r in a)
    control = ac.verify(system, suite="core", seed=5, lambdas=5, negative_control=True)
    assert control[-1]["check"] == "negative_control_centrality"
    assert control[-1]["result"] == "fail"
