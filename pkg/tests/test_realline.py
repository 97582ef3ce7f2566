import pytest

from sievedjacobi.errors import ValidityError
from sievedjacobi.laurent import make_plan, max_residual_on_samples
from sievedjacobi.operators import build_H, build_H_tilde, eig_Lambda
from sievedjacobi.realline import (
    GENERALIZED_ULTRA,
    SIEVED_ULTRA_1,
    SIEVED_ULTRA_2,
    SymmetricFamily,
    measured_recurrence_bu,
    measured_recurrence_u,
    poly_P,
    poly_P_phi_route,
    poly_Q,
    poly_Q_psi_route,
    special_operator,
    special_recurrence_u,
)
from sievedjacobi.sieve import JacobiParams

P = JacobiParams(0.3, 1.7)


def test_p_routes_agree():
    for N in (1, 2, 3):
        for n in range(8):
            a = poly_P(P, N, n)
            b = poly_P_phi_route(P, N, n)
            assert a.allclose(b, tol=1e-11), (N, n)
            assert a.is_symmetric(1e-10)


def test_q_routes_agree():
    for N in (1, 2, 3):
        for n in range(8):
            a = poly_Q(P, N, n)
            b = poly_Q_psi_route(P, N, n)
            assert a.allclose(b, tol=1e-11), (N, n)
            assert a.is_symmetric(1e-10)


def test_x_coefficients_monic():
    fam = SymmetricFamily(P, 2, "P", 8)
    for n in range(9):
        coeffs = fam.x_coefficients(n)
        assert len(coeffs) == n + 1
        assert abs(coeffs[-1] - 1.0) < 1e-10


def test_generic_three_term_with_diagonal():
    fam = SymmetricFamily(P, 3, "P", 12)
    for n in range(1, 11):
        b, u, fit = measured_recurrence_bu(fam, n)
        assert fit < 1e-9, (n, fit)


def test_even_weight_has_no_diagonal_term():
    fam = SymmetricFamily(P, 2, "P", 12)
    for n in range(1, 11):
        b, u, fit = measured_recurrence_bu(fam, n)
        assert abs(b) < 1e-10, (n, b)
        u2, fit2 = measured_recurrence_u(fam, n)
        assert abs(u - u2) < 1e-9
        assert fit2 < 1e-9


def test_generalized_ultra_table():
    p = JacobiParams(0.4, 1.1)
    fam = SymmetricFamily(p, 2, "P", 14)
    for n in range(1, 13):
        u, fit = measured_recurrence_u(fam, n)
        assert fit < 1e-9
        table = special_recurrence_u(p.alpha, 2, GENERALIZED_ULTRA, n, beta=p.beta)
        assert abs(u - table) < 1e-10, n


def test_sieved_ultra_tables():
    alpha = 0.6
    p = JacobiParams(alpha, alpha)
    for N in (2, 3):
        famP = SymmetricFamily(p, N, "P", 14)
        famQ = SymmetricFamily(p, N, "Q", 14)
        for n in range(1, 13):
            u, fit = measured_recurrence_u(famP, n)
            assert fit < 1e-9
            assert abs(u - special_recurrence_u(alpha, N, SIEVED_ULTRA_1, n)) < 1e-10
            u, fit = measured_recurrence_u(famQ, n)
            assert fit < 1e-9
            assert abs(u - special_recurrence_u(alpha, N, SIEVED_ULTRA_2, n)) < 1e-10


def test_recurrence_family_validation():
    with pytest.raises(ValueError):
        special_recurrence_u(0.5, 2, "nope", 1)
    with pytest.raises(ValueError):
        special_recurrence_u(0.5, 2, GENERALIZED_ULTRA, 0)
    with pytest.raises(ValidityError):
        special_recurrence_u(0.5, 3, GENERALIZED_ULTRA, 1)


def test_generalized_ultra_operator_matches_square():
    p = JacobiParams(0.4, 1.1)
    op = special_operator(p, 2, "H_gu")
    ref = build_H(p, 2, "square")
    fam = SymmetricFamily(p, 2, "P", 6)
    plan = make_plan(40, 2, pole_tolerance=1e-2)
    for n in range(7):
        f = fam.laurent(n)
        assert max_residual_on_samples(op.bound(f), ref.bound(f), plan, 2) < 1e-9
        lam = eig_Lambda(n, 2, p)
        assert (
            max_residual_on_samples(op.bound(f), lambda z: lam * f.eval(z), plan, 2)
            < 1e-8
        )


def test_h_gu_requires_n_2():
    with pytest.raises(ValidityError):
        special_operator(P, 3, "H_gu")


def test_ultraspherical_operators_and_spectra():
    alpha = 0.6
    p = JacobiParams(alpha, alpha)
    for N in (2, 3):
        opP = special_operator(p, N, "H_ultra_P")
        opQ = special_operator(p, N, "H_ultra_Q")
        famP = SymmetricFamily(p, N, "P", 6)
        famQ = SymmetricFamily(p, N, "Q", 6)
        plan = make_plan(40, N, pole_tolerance=1e-2)
        for n in range(7):
            f = famP.laurent(n)
            lam = n * (n + (2 * alpha + 1) * N)
            assert (
                max_residual_on_samples(opP.bound(f), lambda z: lam * f.eval(z), plan, N)
                < 1e-8
            ), (N, n)
            g = famQ.laurent(n)
            lam = n * (n + (2 * alpha + 1) * N + 2)
            assert (
                max_residual_on_samples(opQ.bound(g), lambda z: lam * g.eval(z), plan, N)
                < 1e-8
            ), (N, n)


def test_h_tilde_spectrum_on_q():
    for N in (1, 2):
        op = build_H_tilde(P, N)
        fam = SymmetricFamily(P, N, "Q", 6)
        plan = make_plan(40, N, pole_tolerance=1e-2)
        for n in range(7):
            f = fam.laurent(n)
            lam = eig_Lambda(n + 1, N, P)
            assert (
                max_residual_on_samples(op.bound(f), lambda z: lam * f.eval(z), plan, N)
                < 1e-7
            ), (N, n)
