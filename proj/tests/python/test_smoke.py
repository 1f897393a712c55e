"""Smoke tests for the Python bindings: one happy path per exposed operation."""

import math

import pytest

import gjms


def test_exact_constants():
    assert gjms.q_curvature(3, 2) == 15 / 8
    assert gjms.q_curvature_exact(3, 2) == "15/8"
    assert gjms.q_curvature_exact(3, 3) == "-105/32"
    assert gjms.q_curvature_exact(5, 3) == "945/32"
    assert gjms.eigenvalue(3, 2, 0) == -15 / 16
    assert gjms.expand_polynomial_exact(3, 2) == ["-15/16", "-1/2", "1"]
    coeffs = gjms.expand_polynomial(3, 2)
    assert coeffs[-1] == 1.0 and len(coeffs) == 3


def test_derived_scalars():
    assert gjms.critical_alpha(3, 2) == 7.0
    surf = gjms.sphere_surface_area(3)
    assert surf == pytest.approx(2 * math.pi**2, rel=1e-15)
    sharp = gjms.sharp_constant(3, 2, 7.0)
    assert sharp == pytest.approx(-15 / 16 * surf ** (4 / 3), rel=1e-15)


def test_gamma_identity():
    closed = gjms.gamma_closed_form(3, 2)
    assert gjms.compute_gamma(3, 2, resolution=128) == pytest.approx(closed, rel=1e-8)


def test_minimize_quotient():
    res = gjms.minimize_quotient(n=3, m=2, alpha=7.0, eps=0.1, degree=12,
                                 resolution=48, seed=1)
    assert res["converged"]
    assert res["value"] == pytest.approx(res["predicted"], rel=1e-6)
    assert res["constancy"] < 1e-5


def test_solve_ie():
    res = gjms.solve_ie(n=3, m=2, alpha=3.0, eps=0.3, resolution=64, tol=1e-9)
    assert res["converged"]
    assert res["residual"] < 1e-8
    assert res["mass_balance"] < 1e-8
    assert len(res["r"]) == len(res["u"]) == 64
    assert min(res["u"]) > 0


def test_pohozaev():
    res = gjms.pohozaev(n=3, m=2, alpha=3.0, eps=0.1, resolution=64)
    assert res["converged"]
    assert res["residual"] < 1e-6


def test_suites():
    sob = gjms.sobolev_suite(trials=100, seed=0, resolution=48)
    assert sob["trials"] == 100 and sob["violations"] == 0
    log = gjms.log_sobolev_suite(trials=100, seed=0, resolution=48)
    assert log["violations"] == 0
    chain = gjms.chain_suite(trials=100, seed=0)
    assert chain["violations"] == 0
    assert chain["checked"] > 0
    assert {s["name"] for s in chain["steps"]} == {
        "hoelder", "jensen", "reverse-jensen", "final"}


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gjms.minimize_quotient(n=4)
    with pytest.raises(ValueError):
        gjms.solve_ie(alpha=9.0)
