"""Szego map to the real line: the first-kind (P) and second-kind (Q)
families, three-term recurrence coefficients for the special cases, and the
closed-form special-case operators.
"""

from __future__ import annotations

from .errors import ConsistencyError, ValidityError
from .laurent import LaurentPoly
from .operators import (
    build_H_hat,
    coeff_B_ultra,
    coeff_C_ultra,
    DunklOperator,
    OperatorTerm,
)
from .rational import RationalCoeff
from .dihedral import GroupElement
from .sieve import SievedFamily, sieved_verblunsky

PHI = LaurentPoly({1: 1.0, -1: -1.0})  # z - 1/z


class SymmetricFamily:
    """Cache of P_n or Q_n, both as symmetric Laurent polynomials and as
    monic x-coefficient lists, built from the sieved CMV polynomials."""

    def __init__(self, p, N, kind, n_max):
        if kind not in ("P", "Q"):
            raise ValueError("kind must be 'P' or 'Q'")
        self.params = p
        self.N = N
        self.kind = kind
        self.n_max = n_max
        self._sieved = SievedFamily(p, N, 2 * n_max + 2)
        self._laurent = {}
        self._xcoeffs = {}

    def laurent(self, n):
        if n not in self._laurent:
            self._laurent[n] = self._build(n)
        return self._laurent[n]

    def x_coefficients(self, n):
        if n not in self._xcoeffs:
            self._xcoeffs[n] = self.laurent(n).to_x_basis()
        return self._xcoeffs[n]

    def _build(self, n):
        if self.kind == "P":
            return poly_P(self.params, self.N, n, family=self._sieved)
        return poly_Q(self.params, self.N, n, family=self._sieved)


def poly_P(p, N, n, family=None):
    """P_n(x(z);N) = psi_{2n}(z;N) + (1 + a_{2n-1}(N)) psi_{2n-1}(z;N)."""
    family = family or SievedFamily(p, N, 2 * n + 1)
    if n == 0:
        return LaurentPoly.one()
    out = family.psi(2 * n) + (1.0 + sieved_verblunsky(p, N, 2 * n - 1)) * family.psi(2 * n - 1)
    if not out.is_symmetric(1e-9):
        raise ConsistencyError(f"P_{n} came out non-symmetric (upstream bug)")
    return out


def poly_P_phi_route(p, N, n, family=None):
    """Cross-route: P_n = z^{1-n} Phi_{2n-1}(z;N) + z^{n-1} Phi_{2n-1}(1/z;N)."""
    family = family or SievedFamily(p, N, 2 * n + 1)
    if n == 0:
        return LaurentPoly.one()
    phi = family.phi(2 * n - 1)
    return phi.shift(1 - n) + phi.reflect(0, 1).shift(n - 1)


def poly_Q(p, N, n, family=None):
    """Q_n from exact Laurent division of the antisymmetric numerator by z - 1/z."""
    family = family or SievedFamily(p, N, 2 * n + 2)
    psi = family.psi(2 * n + 1)
    numerator = psi - psi.reflect(0, 1)
    quotient, rem = numerator.divide(PHI)
    scale = max(1.0, numerator.max_abs_coeff())
    if not rem.is_zero and rem.max_abs_coeff() > 1e-9 * scale:
        raise ConsistencyError(f"Q_{n} division left remainder {rem!r}")
    out = quotient.cleanup(1e-13 * scale)
    if not out.is_symmetric(1e-9):
        raise ConsistencyError(f"Q_{n} came out non-symmetric (upstream bug)")
    return out


def poly_Q_psi_route(p, N, n, family=None):
    """Cross-route via (z - 1/z) Q_{n-1} = -psi_{2n} + (1 - a_{2n-1}(N)) psi_{2n-1},
    returning Q_{n} (so the relation is used at index n+1)."""
    family = family or SievedFamily(p, N, 2 * n + 2)
    m = n + 1
    numerator = (1.0 - sieved_verblunsky(p, N, 2 * m - 1)) * family.psi(2 * m - 1) - family.psi(2 * m)
    quotient, rem = numerator.divide(PHI)
    scale = max(1.0, numerator.max_abs_coeff())
    if not rem.is_zero and rem.max_abs_coeff() > 1e-9 * scale:
        raise ConsistencyError(f"Q_{n} (psi route) division left remainder")
    return quotient.cleanup(1e-13 * scale)


# ---------------------------------------------------------------------------
# three-term recurrence coefficients of the special families
# ---------------------------------------------------------------------------

GENERALIZED_ULTRA = "generalized_ultra"
SIEVED_ULTRA_1 = "sieved_ultra_1"
SIEVED_ULTRA_2 = "sieved_ultra_2"


def special_recurrence_u(alpha, N, family, n, beta=None):
    """Recurrence coefficient u_n in  P_{n+1} + u_n P_{n-1} = x P_n.

    generalized_ultra: N = 2 with beta free, covering even and odd indices
    as u_{2m} and u_{2m+1}.  sieved_ultra_1 describes the first-kind (P)
    family and sieved_ultra_2 the second-kind (Q) family for alpha = beta;
    u = 1 except at the stated index classes.
    """
    if n < 1:
        raise ValueError("recurrence coefficients start at n = 1")
    if family == GENERALIZED_ULTRA:
        if N != 2:
            raise ValidityError("generalized ultraspherical recurrence requires N = 2")
        b = alpha if beta is None else beta
        if n % 2 == 0:
            m = n // 2
            return 4.0 * m * (alpha + m) / ((alpha + b + 2 * m) * (alpha + b + 2 * m + 1))
        m = (n - 1) // 2
        return (
            4.0 * (b + m + 1) * (alpha + b + m + 1)
            / ((alpha + b + 2 * m + 2) * (alpha + b + 2 * m + 1))
        )
    if family == SIEVED_ULTRA_1:
        if n % N == 0:
            m = n // N
            return 2.0 * m / (2 * alpha + 2 * m + 1)
        if n % N == 1:
            m = (n - 1) // N
            return (4 * alpha + 2 * m + 2) / (2 * alpha + 2 * m + 1)
        return 1.0
    if family == SIEVED_ULTRA_2:
        if n % N == 0:
            m = n // N
            return 2.0 * m / (2 * alpha + 2 * m + 1)
        if n % N == N - 1:
            m = (n + 1) // N
            return (4 * alpha + 2 * m + 2) / (2 * alpha + 2 * m + 1)
        return 1.0
    raise ValueError(f"unknown recurrence family {family!r}")


def measured_recurrence_u(family, n):
    """u_n extracted from the cached polynomials in x-coefficient space.

    Fits  x P_n - P_{n+1} = u_n P_{n-1}  by the leading coefficient and
    reports (u_n, fit residual) so callers can assert the pure-u form."""
    pn = family.x_coefficients(n)
    pm = family.x_coefficients(n - 1)
    pp = family.x_coefficients(n + 1)
    lhs = [0j] + list(pn)
    for k, c in enumerate(pp):
        lhs[k] -= c
    # degree check: lhs should be a multiple of P_{n-1}
    u = lhs[n - 1] / pm[n - 1]
    residual = 0.0
    for k in range(len(lhs)):
        ref = u * pm[k] if k < len(pm) else 0j
        residual = max(residual, abs(lhs[k] - ref))
    scale = max(1.0, max(abs(c) for c in pn))
    return u, residual / scale


def measured_recurrence_bu(family, n):
    """(b_n, u_n, fit residual) for  x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}.

    The general monic orthogonal recurrence carries a diagonal term; it
    vanishes only when the interval weight is even in x."""
    pn = family.x_coefficients(n)
    pm = family.x_coefficients(n - 1)
    pp = family.x_coefficients(n + 1)
    lhs = [0j] + list(pn)
    for k, c in enumerate(pp):
        lhs[k] -= c
    b = lhs[n] / pn[n]
    for k, c in enumerate(pn):
        lhs[k] -= b * c
    u = lhs[n - 1] / pm[n - 1]
    residual = 0.0
    for k in range(len(lhs)):
        ref = u * pm[k] if k < len(pm) else 0j
        residual = max(residual, abs(lhs[k] - ref))
    scale = max(1.0, max(abs(c) for c in pn))
    return b, u, residual / scale


def check_three_term(family, u_source, n_max):
    """Max residual of  P_{n+1} + u_n P_{n-1} - x P_n  over n <= n_max."""
    worst = 0.0
    for n in range(1, n_max + 1):
        measured, fit_res = measured_recurrence_u(family, n)
        expected = u_source(n)
        worst = max(worst, fit_res, abs(measured - expected))
    return worst


# ---------------------------------------------------------------------------
# closed-form special-case operators
# ---------------------------------------------------------------------------


def special_operator(p, N, which):
    """Operators from the special-case coefficient tables.

    H_gu: N = 2 with generic (alpha, beta):
    z^2 d^2 + C(z) d + z A_1'(z) (T - I) with T the sign flip, where
    C(z) = z (2a+2b+3 + 4((a+b+1) + (a-b) z^2)/(z^4-1)) and
    z A_1'(z) = -2(2b+1) z^2 / (1+z^2)^2.
    H_ultra_P / H_ultra_Q: alpha = beta closed forms for arbitrary N.
    """
    ident = GroupElement.identity(N)
    if which == "H_gu":
        if N != 2:
            raise ValidityError("the generalized ultraspherical operator requires N = 2")
        a, b = p.alpha, p.beta
        den = LaurentPoly({4: 1.0, 0: -1.0})
        c_num = LaurentPoly({1: 2 * a + 2 * b + 3}) * den + LaurentPoly(
            {1: 4 * (a + b + 1), 3: 4 * (a - b)}
        )
        c_gu = RationalCoeff(c_num, den)
        flip_den = LaurentPoly({2: 1.0, 0: 1.0})
        d_gu = RationalCoeff(
            LaurentPoly({2: -2.0 * (2 * b + 1)}), flip_den * flip_den
        )
        flip = GroupElement.rotation(1, 2)
        return DunklOperator(
            [
                OperatorTerm(RationalCoeff(LaurentPoly({2: 1.0})), 2, ident),
                OperatorTerm(c_gu, 1, ident),
                OperatorTerm(d_gu, 0, flip),
                OperatorTerm(-d_gu, 0, ident),
            ],
            2,
            p,
        )
    if which == "H_ultra_P":
        terms = [
            OperatorTerm(RationalCoeff(LaurentPoly({2: 1.0})), 2, ident),
            OperatorTerm(coeff_C_ultra(p, N), 1, ident),
        ]
        for k in range(N):
            b = coeff_B_ultra(p, N, k)
            terms.append(OperatorTerm(b, 0, GroupElement.reflection(k, N)))
            terms.append(OperatorTerm(-b, 0, ident))
        return DunklOperator(terms, N, p).merged()
    if which == "H_ultra_Q":
        return build_H_hat(p, N, mode="explicit_R")
    raise ValueError(f"unknown special operator {which!r}")
