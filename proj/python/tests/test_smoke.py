import math

import pytest

import pqtrig


def test_classical_case():
    ev = pqtrig.Evaluator(2, 2)
    assert ev.arcsin(0.5) == pytest.approx(math.pi / 6, abs=1e-12)
    assert ev.arccos(0.5) == pytest.approx(math.pi / 3, abs=1e-12)
    assert ev.arcsinh(2.0) == pytest.approx(math.asinh(2.0), abs=1e-12)
    assert ev.sin(0.7) == pytest.approx(math.sin(0.7), abs=1e-12)
    assert ev.cos(0.7) == pytest.approx(math.cos(0.7), abs=1e-12)
    assert ev.sinh(1.5) == pytest.approx(math.sinh(1.5), abs=1e-11)
    assert ev.half_pi == pytest.approx(math.pi / 2, abs=1e-12)
    assert math.isinf(ev.m_star)


def test_constants():
    c = pqtrig.constants(2, 4)
    assert c["m_star"] == pytest.approx(1.8540746773, abs=1e-9)
    assert c["half_pi"] > 1.0
    assert math.isinf(pqtrig.constants(3, 2)["m_star"])


def test_series_agrees():
    ev = pqtrig.Evaluator(1.5, 3)
    assert ev.arcsin(0.6) == pytest.approx(pqtrig.arcsin_series(1.5, 3, 0.6), abs=1e-12)


def test_holder_mean():
    assert pqtrig.holder_mean(0, 4, 9) == pytest.approx(6)
    assert pqtrig.holder_mean(1, 2, 4) == pytest.approx(3)
    assert pqtrig.holder_mean(-1, 2, 4) == pytest.approx(8 / 3)


def test_verdicts():
    ev = pqtrig.Evaluator(2, 2)
    v = ev.thm11_sin(0.3, 1.2)
    assert v["satisfied"]
    assert v["margin"] == pytest.approx(0.0398, abs=1e-4)
    assert ev.lemma21(0.5)["margin"] == pytest.approx(0.0905860737, abs=1e-9)
    assert ev.lemma23()["satisfied"]
    assert pqtrig.Evaluator(2, 4).lemma22(1.0)["at"]["note"] == "at-x0"
    assert ev.G(1e-6) == pytest.approx(-1, abs=1e-3)
    assert ev.Gstar(1.0) > 1


def test_sweep_and_search():
    report = pqtrig.run_sweep("thm11-sin", (1.5, 3, 2), (2, 4, 2), grid=6)
    assert report["all_satisfied"]
    assert len(report["verdicts"]) == 4 * 36
    assert report["worst_margin"] >= -1e-9

    bad = pqtrig.run_sweep("gm-sin", (2, 2, 1), (2, 2, 1), grid=12, order=1)
    assert not bad["all_satisfied"]

    found = pqtrig.counterexample_search(pqtrig.Evaluator(2, 2), order=1.0)
    assert found["violating"]["margin"] < 0 < found["satisfying"]["margin"]

    probe = pqtrig.monotonicity_probe(pqtrig.Evaluator(2, 2), "F", order=0.0)
    assert probe["all_satisfied"]
    assert "double-angle" in pqtrig.check_names()


def test_errors():
    with pytest.raises(ValueError, match="p must exceed 1"):
        pqtrig.Evaluator(0.9, 2)
    with pytest.raises(ValueError, match="1.854"):
        pqtrig.Evaluator(2, 4).sinh(2.0)
    with pytest.raises(ValueError):
        pqtrig.run_sweep("nope", (2, 2, 1), (2, 2, 1))
    with pytest.raises(ValueError):
        pqtrig.holder_mean(1, -1, 2)
    assert issubclass(pqtrig.ComputationError, ArithmeticError)
