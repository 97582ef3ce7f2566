import json
import math

import numpy as np
import pytest

from sievedjacobi.laurent import LaurentPoly
from sievedjacobi.report import CheckReport, combine
from sievedjacobi.sieve import JacobiParams, weight_rho_N
from sievedjacobi.verify import (
    SUITES,
    QuadratureGrid,
    circle_inner,
    eval_on_circle,
    run_suite,
    weight_is_exact,
)

P = JacobiParams(0.5, 1.5)


def test_grid_basics():
    grid = QuadratureGrid(8, offset=0.5)
    thetas = grid.thetas()
    assert len(thetas) == 8
    assert abs(thetas[0] - math.pi / 8) < 1e-15
    assert abs(grid.weight - math.pi / 4) < 1e-15
    with pytest.raises(ValueError):
        QuadratureGrid(0)


def test_weight_is_exact():
    assert weight_is_exact(JacobiParams(0.5, 1.5))
    assert weight_is_exact(JacobiParams(-0.5, 2.5))
    assert not weight_is_exact(JacobiParams(0.3, 1.7))


def test_constant_inner_product():
    grid = QuadratureGrid(64)
    one = LaurentPoly.one()
    w = np.ones(64)
    val = circle_inner(one, one, w, grid)
    assert abs(val - 2 * math.pi) < 1e-12


def test_monomials_orthogonal_under_flat_weight():
    grid = QuadratureGrid(64)
    w = np.ones(64)
    f = LaurentPoly({3: 1.0})
    g = LaurentPoly({5: 1.0})
    assert abs(circle_inner(f, g, w, grid)) < 1e-12
    assert abs(circle_inner(f, f, w, grid) - 2 * math.pi) < 1e-12


def test_quadrature_doubling_stable_for_exact_weight():
    N = 2
    f = LaurentPoly({4: 1.0, -4: 1.0, 0: 0.5})
    vals = []
    for M in (64, 128, 256):
        grid = QuadratureGrid(M)
        thetas = grid.thetas()
        w = np.array([weight_rho_N(P, N, t) for t in thetas])
        vals.append(circle_inner(f, f, w, grid))
    assert abs(vals[1] - vals[0]) < 1e-12 * max(1.0, abs(vals[0]))
    assert abs(vals[2] - vals[1]) < 1e-12 * max(1.0, abs(vals[1]))


def test_eval_on_circle_matches_eval():
    f = LaurentPoly({2: 1.0 + 0.5j, -1: -0.25})
    thetas = np.array([0.3, 1.1, 2.9])
    vals = eval_on_circle(f, thetas)
    for t, v in zip(thetas, vals):
        assert abs(v - f.eval(np.exp(1j * t))) < 1e-13


@pytest.mark.parametrize("name", sorted(SUITES))
def test_suite_smoke(name):
    kwargs = {}
    if name in ("eigen-l", "eigen-h", "eigen-q", "eigen-y"):
        kwargs["n_max"] = 6
    elif name in ("ortho", "cmv", "three-term"):
        kwargs["n_max"] = 6
    if name == "selfadjoint":
        kwargs["panel_size"] = 10
    report = run_suite(name, P, 2, **kwargs)
    assert report.passed, report.summary_line()
    assert report.suite == name
    assert report.details


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("nope", P, 2)


def test_report_json_roundtrip():
    report = CheckReport(
        suite="demo",
        params={"alpha": 0.5, "beta": 1.5, "N": 2},
        tolerance=1e-8,
        max_residual=1e-10,
        seed=42,
        details=[{"name": "sub", "residual": 1e-10, "value": 1 + 2j}],
    )
    data = json.loads(report.to_json())
    assert data["pass"] is True
    assert data["suite"] == "demo"
    assert data["details"][0]["value"] == {"re": 1.0, "im": 2.0}
    assert "PASS" in report.summary_line()


def test_combine_takes_worst_residual():
    report = combine(
        "demo",
        {"N": 1},
        1e-6,
        [{"name": "a", "residual": 1e-9}, {"name": "b", "residual": 1e-5}],
    )
    assert not report.passed
    assert report.max_residual == 1e-5
    assert len(report.details) == 2
