import random

import pytest

from sievedjacobi.dihedral import GroupElement
from sievedjacobi.errors import CompositionError
from sievedjacobi.laurent import LaurentPoly, make_plan, max_residual_on_samples
from sievedjacobi.operators import (
    DunklOperator,
    OperatorTerm,
    build_H,
    build_H_hat,
    build_H_tilde,
    build_K,
    build_L,
    build_Y,
    coeff_A,
    coeff_G,
    eig_lambda,
    eig_Lambda,
    eig_mu,
    eigenvalue,
)
from sievedjacobi.rational import RationalCoeff
from sievedjacobi.sieve import JacobiParams, SievedFamily

P = JacobiParams(0.3, 1.7)
RNG = random.Random(19)


def rand_poly(span=6):
    return LaurentPoly(
        {k: complex(RNG.uniform(-1, 1), RNG.uniform(-1, 1)) for k in range(-span, span + 1)}
    )


def rand_symmetric(span=5):
    f = LaurentPoly(
        {k: complex(RNG.uniform(-1, 1), RNG.uniform(-1, 1)) for k in range(span + 1)}
    )
    return f + f.reflect(0, 1)


def test_l_forms_agree():
    for N in (1, 2, 3, 4):
        a = build_L(P, N, form="difference")
        b = build_L(P, N, form="b_form")
        plan = make_plan(30, N)
        f = rand_poly()
        assert max_residual_on_samples(a.bound(f), b.bound(f), plan, N) < 1e-12


def test_k_equals_l1_term_by_term():
    K = build_K(P)
    L1 = build_L(P, 1)
    g = coeff_G(P)
    refl = GroupElement.reflection(0, 1)
    z0 = 0.9j
    assert abs(K.coefficient_eval(0, refl, z0) - L1.coefficient_eval(0, refl, z0)) < 1e-14
    assert abs(K.coefficient_eval(0, refl, z0) - g.eval(z0)) < 1e-14
    ident = GroupElement.identity(1)
    assert abs(K.coefficient_eval(1, ident, z0) - z0) < 1e-15
    assert abs(K.coefficient_eval(0, ident, z0) - L1.coefficient_eval(0, ident, z0)) < 1e-13


def test_k_eigenvalues_on_jacobi_psi():
    fam = SievedFamily(P, 1, 12)
    K = build_K(P)
    plan = make_plan(40, 1)
    for n in range(13):
        psi = fam.psi(n)
        mu = eig_mu(n, P)
        r = max_residual_on_samples(K.bound(psi), lambda z: mu * psi.eval(z), plan, 1)
        assert r < 1e-10, n


def test_l_eigenvalues_on_sieved_psi():
    for N in (2, 3):
        fam = SievedFamily(P, N, 15)
        L = build_L(P, N)
        plan = make_plan(50, N)
        for n in range(16):
            psi = fam.psi(n)
            lam = eig_lambda(n, N, P)
            r = max_residual_on_samples(L.bound(psi), lambda z: lam * psi.eval(z), plan, N)
            assert r < 1e-9, (N, n)


def test_h_three_forms_agree_on_symmetric():
    for N in (1, 2, 3, 4):
        hs = build_H(P, N, "square")
        hr = build_H(P, N, "explicit_R")
        ht = build_H(P, N, "explicit_T")
        plan = make_plan(60, N)
        f = rand_symmetric()
        assert max_residual_on_samples(hs.bound(f), hr.bound(f), plan, N) < 1e-9
        assert max_residual_on_samples(hs.bound(f), ht.bound(f), plan, N) < 1e-9


def test_h_tilde_is_conjugation_of_square_form():
    N = 2
    Ht = build_H_tilde(P, N)
    H = build_H(P, N, "square")
    phi = LaurentPoly({1: 1.0, -1: -1.0})
    f = rand_symmetric()
    plan = make_plan(40, N)
    bound = H.bound(phi * f)

    def ref(z):
        return bound(z) / phi.eval(z)

    assert max_residual_on_samples(Ht.bound(f), ref, plan, N) < 1e-10


def test_h_hat_routes_agree():
    pu = JacobiParams(0.7, 0.7)
    for N in (1, 2, 3):
        hc = build_H_hat(pu, N, "conjugation")
        hr = build_H_hat(pu, N, "explicit_R")
        ht = build_H_hat(pu, N, "explicit_T")
        plan = make_plan(50, N, pole_tolerance=1e-2)
        f = rand_symmetric()
        assert max_residual_on_samples(hr.bound(f), hc.bound(f), plan, N) < 1e-7
        assert max_residual_on_samples(ht.bound(f), hc.bound(f), plan, N) < 1e-7


def test_y_tilde_closed_form_matches_conjugation():
    for N in (3, 4):
        for m in range(1, N):
            ye = build_Y(N, m, tilde=True, route="explicit")
            yc = build_Y(N, m, tilde=True, route="conjugation")
            plan = make_plan(40, N)
            f = rand_symmetric()
            assert max_residual_on_samples(ye.bound(f), yc.bound(f), plan, N) < 1e-12


def test_composition_order_cap():
    N = 1
    ident = GroupElement.identity(N)
    second = DunklOperator(
        [OperatorTerm(RationalCoeff.one(), 2, ident)], N
    )
    first = DunklOperator([OperatorTerm(RationalCoeff.one(), 1, ident)], N)
    with pytest.raises(CompositionError):
        second.compose(first)


def test_merged_keeps_denominators_separate():
    N = 2
    ident = GroupElement.identity(N)
    c1 = RationalCoeff(LaurentPoly({1: 1.0}), LaurentPoly({2: 1.0, 0: -1.0}))
    c2 = RationalCoeff(LaurentPoly({1: 1.0}), LaurentPoly({2: 1.0, 0: 1.0}))
    op = DunklOperator(
        [OperatorTerm(c1, 0, ident), OperatorTerm(c2, 0, ident), OperatorTerm(c1, 0, ident)],
        N,
    ).merged()
    assert len(op.terms) == 2


def test_eigenvalue_dispatch():
    assert eigenvalue("mu", P, n=2) == -1.0
    assert eigenvalue("lambda", P, N=3, n=2) == -1.0
    assert eigenvalue("Lambda", P, N=2, n=3) == 3 * (3 + 2 * (P.alpha + P.beta + 1))
    lam = eig_lambda(5, 2, P)
    assert eigenvalue("lambda_tilde", P, N=2, n=5) == lam * lam - 2 * (
        P.alpha + P.beta + 1
    ) * lam
    assert eigenvalue("Xi", P, N=2, n=4) == eig_Lambda(5, 2, P) - eig_Lambda(1, 2, P)
    with pytest.raises(ValueError):
        eigenvalue("nope", P)
