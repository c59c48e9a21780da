"""Smoke tests for the python bindings: the worked conversion vectors and a
few numeric spot values, end to end through the extension module."""

import math

import pytest

import holomellin as hm


def test_inverse_conversion_golden():
    rec = hm.parse("(2+n)*S^2 - S - (n+1)")
    ode = hm.rec_to_ode(rec)
    expected = hm.parse("(x - x^3)*Dx - (x^2 + x)", kind="diff")
    assert ode.equivalent(expected)
    assert ode.order == 1


def test_forward_conversion_boundary_constant():
    ode = hm.parse("2*(x^2-1)*Dx^2 + (x-3)*Dx")
    rec = hm.ode_to_mellin_rec(ode)
    assert not rec.homogeneous
    assert rec.inhomogeneous_part == [("f^(0)(1)", "-6")]
    assert rec.order == 2


def test_trace_mirrors_reduction_passes():
    rec = hm.parse("(2+n)*S^2 - S - (n+1)")
    ode, passes, differentiated = hm.rec_to_ode_trace(rec)
    assert len(passes) == 2
    assert not differentiated
    assert "f^(1)(x)" in passes[0]


def test_series_and_moments():
    ode = hm.parse("(1+x)*Dx + 1", kind="diff")
    series = hm.expand(ode, ["1"], 50000, exact=False)
    m0 = series.mellin(0, tol=1e-9)
    assert m0["ok"]
    assert abs(m0["value"] - math.log(2.0)) < 1e-8

    exact = hm.expand(ode, ["1"], 6)
    assert exact.coefficients() == ["1", "-1", "1", "-1", "1", "-1", "1"]

    b = series.boundary(0)
    assert b["ok"] and abs(b["value"] - 0.5) < 1e-8


def test_solvers():
    rec = hm.parse("S - (n+1)")
    ratios = hm.hyper_solutions(rec)
    assert {"num": "1 + n", "den": "1"} in ratios

    ode = hm.parse("x^2*(2-x-x^2)*Dx + x^2*(1-x)", kind="diff")
    sols = hm.rational_ode_solutions(ode)
    assert {"num": "1", "den": "2 + x"} in sols["basis"]
    ok, residual = hm.verify_ode_solution(ode, "1", "2+x")
    assert ok and residual == "0"


def test_json_roundtrip():
    rec = hm.parse("-(1+n)*M(n) + M(n+1) + (2+n)*M(n+2)")
    again = hm.from_json(rec.to_json())
    assert again == rec


def test_quadrature_identity():
    got = hm.regularized_mellin_quadrature(lambda x: math.log(x) / (1.0 - x), 2)
    assert abs(got - (1.0 + 0.25)) < 1e-6


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        hm.parse("Dx*S")
    with pytest.raises(ValueError):
        hm.parse("(2+n")
