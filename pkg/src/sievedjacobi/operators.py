"""Dunkl-type differential-reflection operators for the sieved Jacobi family.

An operator is a finite sum of terms  coeff(z) * d^order (g f)(z)  with a
rational coefficient, a derivative order 0/1/2 and a dihedral group element g.
Composition is symbolic: the group part reduces exactly through the D_N table,
substitutions are pushed through derivatives by the chain rule, and the
coefficient bookkeeping stays in the rational-function field.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .dihedral import GroupElement, root_of_unity
from .errors import CompositionError, ValidityError
from .laurent import LaurentPoly
from .rational import RationalCoeff
from .sieve import psi_case

MAX_ORDER = 2


@dataclass(frozen=True)
class OperatorTerm:
    coeff: RationalCoeff
    order: int
    element: GroupElement

    def apply(self, f, z):
        g = self.element.act(f)
        for _ in range(self.order):
            g = g.derivative()
        return self.coeff.eval(z) * g.eval(z)


class DunklOperator:
    """Finite sum of OperatorTerm over a common D_N."""

    def __init__(self, terms, N, params=None):
        self.N = N
        self.params = params
        self.terms = [t for t in terms if not t.coeff.is_zero]

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, N, scalar=1.0, params=None):
        return cls(
            [OperatorTerm(RationalCoeff(scalar), 0, GroupElement.identity(N))], N, params
        )

    @classmethod
    def multiplication(cls, coeff, N, params=None):
        """Multiplication operator f -> coeff(z) * f."""
        if not isinstance(coeff, RationalCoeff):
            coeff = RationalCoeff(coeff)
        return cls([OperatorTerm(coeff, 0, GroupElement.identity(N))], N, params)

    # -- application --------------------------------------------------

    def apply(self, f, z):
        return sum(t.apply(f, z) for t in self.terms)

    def bound(self, f):
        """Precompute the substituted/differentiated polynomials for one f."""
        pieces = []
        for t in self.terms:
            g = t.element.act(f)
            for _ in range(t.order):
                g = g.derivative()
            pieces.append((t.coeff, g))
        return lambda z: sum(c.eval(z) * g.eval(z) for c, g in pieces)

    # -- linear structure ---------------------------------------------

    def _check_compatible(self, other):
        if self.N != other.N:
            raise ValueError("operators over different D_N")

    def __add__(self, other):
        self._check_compatible(other)
        return DunklOperator(self.terms + other.terms, self.N, self.params or other.params).merged()

    def __sub__(self, other):
        return self + (-1.0) * other

    def __mul__(self, scalar):
        scalar = complex(scalar)
        return DunklOperator(
            [OperatorTerm(t.coeff * scalar, t.order, t.element) for t in self.terms],
            self.N,
            self.params,
        )

    __rmul__ = __mul__

    def merged(self):
        """Combine terms with the same (order, element, denominator).

        Terms with different denominators are deliberately left separate:
        forcing a common denominator builds numerators with catastrophic
        cancellation and denominators that nearly vanish on the sampling
        circle.  Application sums the terms anyway.
        """
        acc = {}
        for t in self.terms:
            key = (t.order, t.element, t.coeff.den)
            acc[key] = acc[key] + t.coeff if key in acc else t.coeff
        terms = [
            OperatorTerm(c, order, g)
            for (order, g, _), c in acc.items()
            if not c.is_zero
        ]
        return DunklOperator(terms, self.N, self.params)

    def coefficient_eval(self, order, element, z):
        """Evaluate the total coefficient in front of  d^order (element f)  at z."""
        return sum(
            t.coeff.eval(z)
            for t in self.terms
            if t.order == order and t.element == element
        )

    def cleanup(self, threshold=1e-13):
        """Drop numerically-dead numerator coefficients after a merge."""
        terms = []
        for t in self.terms:
            c = t.coeff.cleanup(threshold)
            if not c.is_zero:
                terms.append(OperatorTerm(c, t.order, t.element))
        return DunklOperator(terms, self.N, self.params)

    # -- composition --------------------------------------------------

    def compose(self, other):
        """(self . other) f = self (other f), reduced to canonical terms."""
        self._check_compatible(other)
        out = []
        for t1 in self.terms:
            for t2 in other.terms:
                out.extend(_compose_terms(t1, t2, self.N))
        return DunklOperator(out, self.N, self.params or other.params).merged()

    def commutator(self, other):
        return self.compose(other) - other.compose(self)

    def anticommutator(self, other):
        return self.compose(other) + other.compose(self)


def _push_factor(g):
    """r with  g(df/dz) = r(z) * d(g f)/dz, i.e. r = 1/m'(z) for the map m of g."""
    if g.tag == "identity":
        return RationalCoeff.one()
    if g.tag == "rotation":
        return RationalCoeff(root_of_unity(g.N, -g.index))
    # reflection: m(z) = q^j / z, 1/m'(z) = -q^{-j} z^2
    return RationalCoeff(LaurentPoly({2: -root_of_unity(g.N, -g.index)}))


def _compose_terms(t1, t2, N):
    """Canonical terms of (t1 . t2) f = c1 d^{d1} [ g1 ( c2 d^{d2} (g2 f) ) ]."""
    g1, g2 = t1.element, t2.element
    c2_sub = t2.coeff.substitute(g1)
    g12 = g1 * g2
    r = _push_factor(g1)
    if t2.order == 0:
        inner = [(RationalCoeff.one(), 0)]
    elif t2.order == 1:
        inner = [(r, 1)]
    else:
        inner = [(r * r.derivative(), 1), (r * r, 2)]
    out = []
    for s, a in inner:
        u = c2_sub * s
        if t1.order == 0:
            pieces = [(u, a)]
        elif t1.order == 1:
            pieces = [(u.derivative(), a), (u, a + 1)]
        else:
            du = u.derivative()
            pieces = [(du.derivative(), a), (2.0 * du, a + 1), (u, a + 2)]
        for c, order in pieces:
            c = t1.coeff * c
            if c.is_zero:
                continue
            if order > MAX_ORDER:
                raise CompositionError(
                    f"composition would need derivative order {order} > {MAX_ORDER}"
                )
            out.append(OperatorTerm(c, order, g12))
    return out


def op_algebra(a, b, kind):
    """Symbolic algebra on operators: compose | add | commutator | anticommutator."""
    if kind == "compose":
        return a.compose(b)
    if kind == "add":
        return a + b
    if kind == "commutator":
        return a.commutator(b)
    if kind == "anticommutator":
        return a.anticommutator(b)
    raise ValueError(f"unknown algebra kind {kind!r}")


# ---------------------------------------------------------------------------
# coefficient functions
# ---------------------------------------------------------------------------


def coeff_A(p, N, k):
    """A_k(z;N): parity-of-N dependent numerator over the denominator q^k - z^2."""
    k = k % N
    q_k = root_of_unity(N, k)
    den = LaurentPoly({0: q_k, 2: -1.0})
    s = p.alpha + p.beta + 1.0
    d = p.alpha - p.beta
    if N % 2 == 0:
        sigma = s + (-1.0) ** k * d
        num = LaurentPoly({2: sigma})
    else:
        rho = root_of_unity(2 * N, k) if k % 2 == 0 else root_of_unity(2 * N, k - N)
        num = LaurentPoly({2: s, 1: rho * d})
    return RationalCoeff(num, den)


def coeff_B(p, N):
    """B(z) = N ((alpha+beta+1) z^{2N} + (alpha-beta) z^N) / (z^{2N} - 1)."""
    s = p.alpha + p.beta + 1.0
    d = p.alpha - p.beta
    num = LaurentPoly({2 * N: N * s, N: N * d})
    den = LaurentPoly({2 * N: 1.0, 0: -1.0})
    return RationalCoeff(num, den)


def coeff_C(p, N):
    """First-derivative coefficient of the explicit H(N)."""
    s = p.alpha + p.beta + 1.0
    d = p.alpha - p.beta
    den = LaurentPoly({2 * N: 1.0, 0: -1.0})
    num = LaurentPoly({1: 1.0 + N * s}) * den + LaurentPoly({1: 2.0 * N * s, N + 1: 2.0 * N * d})
    return RationalCoeff(num, den)


def coeff_D(p, N, k):
    """D_k(z) = z A_k'(z;N)."""
    return RationalCoeff(LaurentPoly.z()) * coeff_A(p, N, k).derivative()


def coeff_G(p):
    """G(z) = z((alpha+beta+1)z + alpha-beta)/(1 - z^2), the N=1 coefficient."""
    s = p.alpha + p.beta + 1.0
    d = p.alpha - p.beta
    return RationalCoeff(LaurentPoly({2: s, 1: d}), LaurentPoly({0: 1.0, 2: -1.0}))


def coeff_B_ultra(p, N, k):
    """B_k(z) = 2(2 alpha + 1) q^k z^2 / (q^k - z^2)^2 for alpha = beta."""
    _require_ultra(p)
    q_k = root_of_unity(N, k % N)
    den = LaurentPoly({0: q_k, 2: -1.0})
    return RationalCoeff(LaurentPoly({2: 2.0 * (2.0 * p.alpha + 1.0) * q_k}), den * den)


def coeff_C_ultra(p, N):
    """C(z) = z [1 + N(2 alpha + 1) + 2N(2 alpha + 1)/(z^{2N} - 1)] for alpha = beta."""
    _require_ultra(p)
    s = 2.0 * p.alpha + 1.0
    den = LaurentPoly({2 * N: 1.0, 0: -1.0})
    num = LaurentPoly({1: 1.0 + N * s}) * den + LaurentPoly({1: 2.0 * N * s})
    return RationalCoeff(num, den)


def coeff_B_hat(p, N, k):
    """hat B_k(z) = (q^{2k} - z^2) / (q^k (z^2 - 1)) * B_k(z)."""
    q_k = root_of_unity(N, k % N)
    factor = RationalCoeff(
        LaurentPoly({0: q_k * q_k, 2: -1.0}),
        LaurentPoly({2: q_k, 0: -q_k}),
    )
    return factor * coeff_B_ultra(p, N, k)


def coeff_C_hat(p, N):
    """hat C(z) = C(z) + 2z(z^2 + 1)/(z^2 - 1)."""
    extra = RationalCoeff(LaurentPoly({3: 2.0, 1: 2.0}), LaurentPoly({2: 1.0, 0: -1.0}))
    return coeff_C_ultra(p, N) + extra


def _require_ultra(p):
    if p.alpha != p.beta:
        raise ValidityError("ultraspherical coefficients require alpha == beta")


# ---------------------------------------------------------------------------
# operator builders
# ---------------------------------------------------------------------------


def _euler_term(N):
    return OperatorTerm(RationalCoeff(LaurentPoly.z()), 1, GroupElement.identity(N))


def build_L(p, N, form="difference"):
    """L(N) = z d/dz + sum_k A_k (R_k - I), or the equivalent B-form with
    L(N) = z d/dz + sum_k A_k R_k + B I."""
    terms = [_euler_term(N)]
    ident = GroupElement.identity(N)
    if form == "difference":
        for k in range(N):
            a = coeff_A(p, N, k)
            terms.append(OperatorTerm(a, 0, GroupElement.reflection(k, N)))
            terms.append(OperatorTerm(-a, 0, ident))
    elif form == "b_form":
        for k in range(N):
            terms.append(OperatorTerm(coeff_A(p, N, k), 0, GroupElement.reflection(k, N)))
        terms.append(OperatorTerm(coeff_B(p, N), 0, ident))
    else:
        raise ValueError(f"unknown L form {form!r}")
    return DunklOperator(terms, N, p).merged()


def build_K(p):
    """The N=1 operator K = z d/dz + G(z)(R - I)."""
    g = coeff_G(p)
    ident = GroupElement.identity(1)
    return DunklOperator(
        [
            _euler_term(1),
            OperatorTerm(g, 0, GroupElement.reflection(0, 1)),
            OperatorTerm(-g, 0, ident),
        ],
        1,
        p,
    )


def _second_order_head(p, N, c_coeff):
    ident = GroupElement.identity(N)
    return [
        OperatorTerm(RationalCoeff(LaurentPoly({2: 1.0})), 2, ident),
        OperatorTerm(c_coeff, 1, ident),
    ]


def build_H(p, N, mode="square"):
    """H(N): 'square' composes L(N)^2 - N(alpha+beta+1) L(N); 'explicit_R' and
    'explicit_T' use the closed-form coefficients with reflections/rotations."""
    if mode == "square":
        L = build_L(p, N)
        return (L.compose(L) - (N * (p.alpha + p.beta + 1.0)) * L).merged()
    ident = GroupElement.identity(N)
    terms = _second_order_head(p, N, coeff_C(p, N))
    if mode == "explicit_R":
        for k in range(N):
            d = coeff_D(p, N, k)
            terms.append(OperatorTerm(d, 0, GroupElement.reflection(k, N)))
            terms.append(OperatorTerm(-d, 0, ident))
    elif mode == "explicit_T":
        for k in range(1, N):
            d = coeff_D(p, N, k)
            terms.append(OperatorTerm(d, 0, GroupElement.rotation(-k, N)))
            terms.append(OperatorTerm(-d, 0, ident))
    else:
        raise ValueError(f"unknown H mode {mode!r}")
    return DunklOperator(terms, N, p).merged()


def phi_multiplication(N, inverse=False):
    """Multiplication by phi(z) = z - 1/z (or by its reciprocal)."""
    phi = RationalCoeff(LaurentPoly({1: 1.0, -1: -1.0}))
    return DunklOperator.multiplication(phi.reciprocal() if inverse else phi, N)


def conjugate_by_phi(op):
    """phi^{-1} . op . phi, computed symbolically."""
    return (
        phi_multiplication(op.N, inverse=True)
        .compose(op)
        .compose(phi_multiplication(op.N))
        .merged()
    )


def build_H_tilde(p, N, mode="square"):
    """tilde H(N) = phi^{-1} H(N) phi, the eigenvalue operator for the Q family.

    The conjugation must start from the genuine square form: the rotation and
    reflection forms of H agree with it only on symmetric Laurent polynomials,
    and phi times a symmetric polynomial is antisymmetric.
    """
    return conjugate_by_phi(build_H(p, N, mode=mode))


def build_H_hat(p, N, mode="conjugation"):
    """hat H(N) for alpha = beta: tilde H(N) minus the constant Lambda_1(N);
    'explicit_R'/'explicit_T' use the closed-form hat-coefficients instead."""
    _require_ultra(p)
    if mode == "conjugation":
        return (
            build_H_tilde(p, N) - DunklOperator.identity(N, eig_Lambda(1, N, p))
        ).merged()
    ident = GroupElement.identity(N)
    terms = _second_order_head(p, N, coeff_C_hat(p, N))
    if mode == "explicit_R":
        ks, mk = range(N), lambda k: GroupElement.reflection(k, N)
    elif mode == "explicit_T":
        ks, mk = range(1, N), lambda k: GroupElement.rotation(-k, N)
    else:
        raise ValueError(f"unknown hat-H mode {mode!r}")
    for k in ks:
        b = coeff_B_hat(p, N, k)
        terms.append(OperatorTerm(b, 0, mk(k)))
        terms.append(OperatorTerm(-b, 0, ident))
    return DunklOperator(terms, N, p).merged()


def build_Y(N, m, tilde=False, route="explicit"):
    """Y_m = T_m + T_{-m}; tilde Y_m = phi^{-1} Y_m phi (closed form or conjugation)."""
    if not 1 <= m <= N - 1:
        raise ValueError("Y_m requires 1 <= m <= N-1")
    tm = GroupElement.rotation(m, N)
    tmm = GroupElement.rotation(-m, N)
    plain = DunklOperator(
        [OperatorTerm(RationalCoeff.one(), 0, tm), OperatorTerm(RationalCoeff.one(), 0, tmm)],
        N,
    )
    if not tilde:
        return plain
    if route == "conjugation":
        return conjugate_by_phi(plain)
    qm = root_of_unity(N, m)
    phi = LaurentPoly({1: 1.0, -1: -1.0})
    c_plus = RationalCoeff(LaurentPoly({1: qm, -1: -1.0 / qm}), phi)
    c_minus = RationalCoeff(LaurentPoly({1: 1.0 / qm, -1: -qm}), phi)
    return DunklOperator([OperatorTerm(c_plus, 0, tm), OperatorTerm(c_minus, 0, tmm)], N)


# ---------------------------------------------------------------------------
# eigenvalues
# ---------------------------------------------------------------------------


def eig_mu(n, p):
    """Eigenvalue of K on psi_n: -n/2 for even n, (n+1)/2 + alpha + beta + 1 for odd."""
    if n % 2 == 0:
        return -n / 2.0
    return (n + 1) / 2.0 + p.alpha + p.beta + 1.0


def eig_lambda(n, N, p):
    """Eigenvalue of L(N) on psi_n(.;N)."""
    if n % 2 == 0:
        return -n / 2.0
    return (n + 1) / 2.0 + (p.alpha + p.beta + 1.0) * N


def eig_lambda_tilde(n, N, p):
    lam = eig_lambda(n, N, p)
    return lam * lam - N * (p.alpha + p.beta + 1.0) * lam


def eig_Lambda(n, N, p):
    """Lambda_n(N) = n (n + N(alpha+beta+1)), the H(N) eigenvalue on P_n."""
    return n * (n + N * (p.alpha + p.beta + 1.0))


def eig_Xi(n, N, p):
    """Xi_n(N) = Lambda_{n+1}(N) - Lambda_1(N)."""
    return eig_Lambda(n + 1, N, p) - eig_Lambda(1, N, p)


def eig_omega(m, n, N):
    """Eigenvalue of Y_m on P_n: q^{m nu} + q^{-m nu} with nu the rotation
    exponent of psi_{2n-1}(.;N); the two summands are complex conjugates."""
    if n == 0:
        return 2.0 + 0j
    nu = psi_case(2 * n - 1, N).nu
    return 2.0 * cmath.cos(2.0 * cmath.pi * m * nu / N)


def eigenvalue(which, p, N=1, n=0, m=1):
    """Closed-form eigenvalue dispatch: mu | lambda | lambda_tilde | Lambda | Xi | omega."""
    table = {
        "mu": lambda: eig_mu(n, p),
        "lambda": lambda: eig_lambda(n, N, p),
        "lambda_tilde": lambda: eig_lambda_tilde(n, N, p),
        "Lambda": lambda: eig_Lambda(n, N, p),
        "Xi": lambda: eig_Xi(n, N, p),
        "omega": lambda: eig_omega(m, n, N),
    }
    if which not in table:
        raise ValueError(f"unknown eigenvalue kind {which!r}")
    return table[which]()
