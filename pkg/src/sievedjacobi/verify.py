"""Verification suites: circle quadrature, orthogonality, self-adjointness,
eigenvalue residuals, coefficient identities, CMV structure and three-term
recurrences.

Every suite returns a CheckReport whose pass flag is max_residual against a
pinned tolerance, and is reproducible from (parameters, seed).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

import numpy as np

from .dihedral import GroupElement, relation_suite, root_of_unity
from .laurent import LaurentPoly, make_plan
from .operators import (
    build_H,
    build_H_tilde,
    build_L,
    build_Y,
    coeff_A,
    coeff_B,
    eig_lambda,
    eig_Lambda,
    eig_omega,
)
from .opuc import CmvTruncation, h_norm
from .realline import (
    GENERALIZED_ULTRA,
    SIEVED_ULTRA_1,
    SIEVED_ULTRA_2,
    SymmetricFamily,
    measured_recurrence_bu,
    measured_recurrence_u,
    special_recurrence_u,
)
from .report import CheckReport
from .sieve import (
    PhaseTable,
    SievedFamily,
    sieved_sequence,
    weight_rho_N,
)

DEFAULT_SEED = 42


# ---------------------------------------------------------------------------
# quadrature
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadratureGrid:
    """Periodic trapezoid rule on [0, 2pi): nodes 2pi(j + offset)/M, equal
    weights 2pi/M.  Exact for trigonometric polynomials of degree < M; the
    half-offset variant keeps nodes away from the coefficient poles at the
    2N-th roots of unity."""

    M: int
    offset: float = 0.0

    def __post_init__(self):
        if self.M < 1:
            raise ValueError("need at least one node")

    def thetas(self):
        return np.array([2 * math.pi * (j + self.offset) / self.M for j in range(self.M)])

    def points(self):
        return np.exp(1j * self.thetas())

    @property
    def weight(self):
        return 2 * math.pi / self.M


def weight_is_exact(p):
    """True when rho(theta; N) is a trigonometric polynomial, i.e. when both
    exponents alpha+1/2 and beta+1/2 are nonnegative integers."""

    def nonneg_int(v):
        return v >= 0 and abs(v - round(v)) < 1e-12

    return nonneg_int(p.alpha + 0.5) and nonneg_int(p.beta + 0.5)


def eval_on_circle(poly, thetas):
    """Vectorized evaluation of a LaurentPoly at exp(i theta)."""
    out = np.zeros(len(thetas), dtype=complex)
    for k, c in poly.coeffs.items():
        out += c * np.exp(1j * k * thetas)
    return out


def circle_inner(f, g, weight_values, grid):
    """(f, g) = integral f(e^{i theta}) conj(g)(e^{-i theta}) w(theta) dtheta.

    For polynomials with conjugated coefficients evaluated at e^{-i theta}
    this is the plain complex conjugate of g on the circle.
    """
    thetas = grid.thetas()
    fv = eval_on_circle(f, thetas) if isinstance(f, LaurentPoly) else f
    gv = eval_on_circle(g, thetas) if isinstance(g, LaurentPoly) else g
    return grid.weight * np.sum(fv * np.conj(gv) * weight_values)


def _gram(values, weight_values, grid):
    """Gram matrix of the rows of `values` under the circle inner product."""
    scaled = values * weight_values[None, :]
    return grid.weight * (scaled @ np.conj(values).T)


# ---------------------------------------------------------------------------
# eigenvalue residuals
# ---------------------------------------------------------------------------


def eigen_residual(op, eigenfunction, eigenvalue, plan, N=1):
    """max over plan samples of |op f - lambda f| / max(1, max |lambda f|)."""
    bound = op.bound(eigenfunction)
    pts = plan.points(N)
    ref = [eigenvalue * eigenfunction.eval(z) for z in pts]
    scale = max(1.0, max(abs(v) for v in ref))
    return max(abs(bound(z) - v) for z, v in zip(pts, ref)) / scale


def eigen_l_suite(p, N, n_max=40, samples=None, tolerance=1e-8):
    """L(N) psi_n = lambda_n(N) psi_n over n <= n_max."""
    p.validate(n_max // N + 2)
    fam = SievedFamily(p, N, n_max + 1)
    L = build_L(p, N)
    max_span = max(fam.psi(n).span for n in range(n_max + 1))
    plan = make_plan(samples or 2 * max_span + 17, N)
    details = []
    for n in range(n_max + 1):
        r = eigen_residual(L, fam.psi(n), eig_lambda(n, N, p), plan, N)
        details.append({"name": f"L psi_{n}", "residual": r})
    return _fold("eigen-l", p, N, n_max, tolerance, details, samples=plan.count)


def eigen_h_suite(p, N, n_max=25, samples=None, tolerance=1e-7):
    """H(N) P_n = Lambda_n(N) P_n over n <= n_max."""
    fam = SymmetricFamily(p, N, "P", n_max)
    H = build_H(p, N)
    max_span = max(fam.laurent(n).span for n in range(n_max + 1))
    # wider pole clearance: the operator coefficients blow up near the
    # 2N-th roots of unity and the residual is amplified there
    plan = make_plan(samples or 2 * max_span + 17, N, pole_tolerance=1.5e-2)
    details = []
    for n in range(n_max + 1):
        r = eigen_residual(H, fam.laurent(n), eig_Lambda(n, N, p), plan, N)
        details.append({"name": f"H P_{n}", "residual": r})
    return _fold("eigen-h", p, N, n_max, tolerance, details, samples=plan.count)


def eigen_q_suite(p, N, n_max=25, samples=None, tolerance=1e-7):
    """tilde H(N) Q_n = Lambda_{n+1}(N) Q_n over n <= n_max."""
    fam = SymmetricFamily(p, N, "Q", n_max)
    Ht = build_H_tilde(p, N)
    max_span = max(fam.laurent(n).span for n in range(n_max + 1))
    plan = make_plan(samples or 2 * max_span + 17, N, pole_tolerance=1.5e-2)
    details = []
    for n in range(n_max + 1):
        r = eigen_residual(Ht, fam.laurent(n), eig_Lambda(n + 1, N, p), plan, N)
        details.append({"name": f"Ht Q_{n}", "residual": r})
    return _fold("eigen-q", p, N, n_max, tolerance, details, samples=plan.count)


def eigen_y_suite(p, N, n_max=16, samples=None, tolerance=1e-9, seed=DEFAULT_SEED):
    """Y_m P_n and tilde-Y_m Q_{n-1} eigenvalues, plus [H, Y_m] = 0 on the
    symmetric span.  The eigenvalues must be constant across samples, take at
    most N distinct values over n, and match the closed form."""
    details = []
    famP = SymmetricFamily(p, N, "P", n_max)
    famQ = SymmetricFamily(p, N, "Q", max(n_max - 1, 0))
    max_span = max(famP.laurent(n).span for n in range(n_max + 1))
    plan = make_plan(samples or 2 * max_span + 17, N, pole_tolerance=1e-2)
    rng = random.Random(seed)
    H = build_H(p, N)
    for m in range(1, N):
        Y = build_Y(N, m)
        Yt = build_Y(N, m, tilde=True)
        seen = set()
        for n in range(n_max + 1):
            omega = eig_omega(m, n, N)
            seen.add(round(omega.real if isinstance(omega, complex) else omega, 9))
            r = eigen_residual(Y, famP.laurent(n), omega, plan, N)
            details.append({"name": f"Y_{m} P_{n}", "residual": r})
            if n >= 1:
                r = eigen_residual(Yt, famQ.laurent(n - 1), omega, plan, N)
                details.append({"name": f"Yt_{m} Q_{n - 1}", "residual": r})
        details.append(
            {
                "name": f"Y_{m} distinct eigenvalue count <= N",
                "residual": 0.0 if len(seen) <= N else float(len(seen) - N),
            }
        )
        # commutation with H on random symmetric Laurent polynomials,
        # relative to the magnitude of the composed action
        hy = H.compose(Y)
        yh = Y.compose(H)
        worst = 0.0
        for _ in range(5):
            base = LaurentPoly(
                {k: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for k in range(6)}
            )
            f = base + base.reflect(0, 1)
            a, b = hy.bound(f), yh.bound(f)
            pts = plan.points(N)
            scale = max(1.0, max(abs(b(z)) for z in pts))
            worst = max(worst, max(abs(a(z) - b(z)) for z in pts) / scale)
        details.append({"name": f"[H, Y_{m}] on symmetric", "residual": worst})
    if not details:
        details.append({"name": "no rotations at N=1", "residual": 0.0})
    return _fold("eigen-y", p, N, n_max, tolerance, details, seed=seed)


# ---------------------------------------------------------------------------
# orthogonality
# ---------------------------------------------------------------------------


def orthogonality_suite(p, N, n_max=12, tolerance=None, max_nodes=2**16):
    """Gram matrices of the psi, P and Q families under the circle weights.

    psi under rho(theta; N) with diagonal ratios compared to h_n; P under
    rho(theta; N); Q under rho(theta; N) (4 - x^2) with x = 2 cos(theta).
    Node count doubles adaptively until the Gram matrix stabilizes.
    """
    exact = weight_is_exact(p)
    if tolerance is None:
        tolerance = 1e-9 if exact else 1e-5
    fam = SievedFamily(p, N, 2 * n_max + 2)
    famP = SymmetricFamily(p, N, "P", n_max)
    famQ = SymmetricFamily(p, N, "Q", n_max)
    psis = [fam.psi(n) for n in range(n_max + 1)]
    ps = [famP.laurent(n) for n in range(n_max + 1)]
    qs = [famQ.laurent(n) for n in range(n_max + 1)]

    def rho_values(thetas):
        return np.array([weight_rho_N(p, N, t) for t in thetas])

    def q_weight(thetas):
        return rho_values(thetas) * (4.0 * np.sin(thetas) ** 2)

    details = []
    gram_psi = _stable_gram(psis, rho_values, max_nodes)
    details.extend(_gram_offdiag("psi", gram_psi))
    a = sieved_sequence(p, N)
    for n in range(1, n_max + 1):
        ratio = (gram_psi[n, n] / gram_psi[0, 0]).real
        h = h_norm(a, n)
        details.append(
            {"name": f"psi diag ratio h_{n}", "residual": abs(ratio - h) / abs(h)}
        )
    details.extend(_gram_offdiag("P", _stable_gram(ps, rho_values, max_nodes)))
    details.extend(_gram_offdiag("Q", _stable_gram(qs, q_weight, max_nodes)))
    return _fold("ortho", p, N, n_max, tolerance, details)


def _stable_gram(polys, weight_fn, max_nodes):
    """Double the node count until the Gram matrix stops changing."""
    prev = None
    M = 256
    while True:
        grid = QuadratureGrid(M)
        thetas = grid.thetas()
        values = np.array([eval_on_circle(f, thetas) for f in polys])
        gram = _gram(values, weight_fn(thetas), grid)
        if prev is not None:
            scale = max(1.0, np.abs(gram).max())
            if np.abs(gram - prev).max() <= 1e-12 * scale or 2 * M > max_nodes:
                return gram
        prev = gram
        M *= 2


def _gram_offdiag(label, gram):
    n = gram.shape[0]
    out = []
    worst = 0.0
    diag = np.sqrt(np.abs(np.diag(gram)))
    for i in range(n):
        for j in range(i + 1, n):
            worst = max(worst, abs(gram[i, j]) / (diag[i] * diag[j]))
    out.append({"name": f"{label} off-diagonal", "residual": worst})
    out.append(
        {
            "name": f"{label} diagonal positive",
            "residual": 0.0 if np.all(np.diag(gram).real > 0) else 1.0,
        }
    )
    return out


# ---------------------------------------------------------------------------
# self-adjointness (weak form)
# ---------------------------------------------------------------------------


def selfadjoint_suite(p, N, panel_size=100, seed=DEFAULT_SEED, tolerance=1e-8, M=None):
    """|<L f, g> - <f, L g>| over random Laurent pairs, normalized by the norms.

    Nodes use the half-offset grid with M a multiple of 2N so that none falls
    on the coefficient poles (the 2N-th roots of unity).
    """
    if M is None:
        M = 2 * N * math.ceil(2048 / (2 * N))
    grid = QuadratureGrid(M, offset=0.5)
    thetas = grid.thetas()
    zs = np.exp(1j * thetas)
    rho = np.array([weight_rho_N(p, N, t) for t in thetas])
    L = build_L(p, N)
    rng = random.Random(seed)
    details = []

    def rand_poly():
        return LaurentPoly(
            {k: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for k in range(-5, 6)}
        )

    def pair_residual(f, g):
        fv = eval_on_circle(f, thetas)
        gv = eval_on_circle(g, thetas)
        Lf = np.array([L.bound(f)(z) for z in zs])
        Lg = np.array([L.bound(g)(z) for z in zs])
        lhs = grid.weight * np.sum(Lf * np.conj(gv) * rho)
        rhs = grid.weight * np.sum(fv * np.conj(Lg) * rho)
        nf = grid.weight * np.sum(np.abs(fv) ** 2 * rho)
        ng = grid.weight * np.sum(np.abs(gv) ** 2 * rho)
        return abs(lhs - rhs) / math.sqrt(nf.real * ng.real)

    worst = 0.0
    for _ in range(panel_size):
        worst = max(worst, pair_residual(rand_poly(), rand_poly()))
    details.append({"name": f"weak symmetry over {panel_size} pairs", "residual": worst})

    f = rand_poly()
    fv = eval_on_circle(f, thetas)
    Lf = np.array([L.bound(f)(z) for z in zs])
    ip = grid.weight * np.sum(Lf * np.conj(fv) * rho)
    nf = grid.weight * np.sum(np.abs(fv) ** 2 * rho)
    details.append({"name": "<Lf, f> real", "residual": abs(ip.imag) / nf.real})
    return _fold("selfadjoint", p, N, None, tolerance, details, seed=seed)


# ---------------------------------------------------------------------------
# coefficient identities
# ---------------------------------------------------------------------------


def identity_suite(p, N, samples=60, tolerance=1e-10, seed=DEFAULT_SEED):
    """The closed-form coefficient identities behind the explicit H(N)."""
    # keep samples well clear of the coefficient poles: several identities
    # multiply an exact zero by a coefficient that blows up there
    plan = make_plan(samples, N, pole_tolerance=1e-2)
    pts = plan.points(N)
    s = p.alpha + p.beta + 1.0
    As = [coeff_A(p, N, k) for k in range(N)]
    B = coeff_B(p, N)
    details = []

    def record(name, values):
        details.append({"name": name, "residual": max(values)})

    # rotation coefficients of L(N)^2 vanish
    for k in range(1, N):
        vals = []
        for z in pts:
            total = 0j
            for i in range(N):
                qi = root_of_unity(N, i)
                total += As[i].eval(z) * As[(i + k) % N].eval(qi / z)
            vals.append(abs(total))
        record(f"E_{k} = 0", vals)

    # B(z) + B(q^k/z) = N(alpha+beta+1)
    for k in range(N):
        qk = root_of_unity(N, k)
        record(
            f"B(z) + B(q^{k}/z) - N(a+b+1)",
            [abs(B.eval(z) + B.eval(qk / z) - N * s) for z in pts],
        )

    # B = -sum A_k
    record(
        "B + sum A_k",
        [abs(B.eval(z) + sum(a.eval(z) for a in As)) for z in pts],
    )

    # sum_l q^{l(h+1)}/(q^l - z) = N z^h / (1 - z^N)
    for h in range(N):
        vals = []
        for z in pts:
            total = sum(
                root_of_unity(N, l * (h + 1)) / (root_of_unity(N, l) - z) for l in range(N)
            )
            vals.append(abs(total - N * z**h / (1 - z**N)))
        record(f"rational sum h={h}", vals)

    # the reflection coefficient of H(N) reduces to z A_k'; evaluated
    # pointwise so the vanishing factor is not buried in a symbolic product,
    # and relative to |A_k| which grows without bound near its poles
    for k in range(N):
        qk = root_of_unity(N, k)
        vals = []
        for z in pts:
            ak = As[k].eval(z)
            vals.append(abs(ak * (B.eval(z) + B.eval(qk / z) - N * s)) / max(1.0, abs(ak)))
        record(f"D_{k} - z A_{k}'", vals)

    # R_k = T_{-k} on symmetric Laurent polynomials
    rng = random.Random(seed)
    base = LaurentPoly({k: complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for k in range(7)})
    f = base + base.reflect(0, 1)
    for k in range(N):
        g1 = f.reflect(k, N)
        g2 = f.rotate(-k, N)
        record(f"R_{k} f = T_{-k} f (symmetric f)", [abs(g1.eval(z) - g2.eval(z)) for z in pts])
    return _fold("identities", p, N, None, tolerance, details, seed=seed)


def _reflected(coeff, k, N):
    return coeff.substitute(GroupElement.reflection(k, N))


# ---------------------------------------------------------------------------
# CMV structure
# ---------------------------------------------------------------------------


def cmv_suite(p, N, n_max=14, samples=24, tolerance=1e-10, size=None):
    """Truncated CMV relations for the sieved Verblunsky parameters, plus the
    sieved reflection relations with measured rotation phases."""
    if size is None:
        size = n_max + 6 + (n_max % 2)
    a = sieved_sequence(p, N)
    cmv = CmvTruncation(a, size)
    fam = SievedFamily(p, N, size + 1)
    plan = make_plan(samples, N)
    pts = plan.points(N)
    rows = min(cmv.valid_rows, n_max + 1)
    psis = [fam.psi(n) for n in range(size)]
    details = []

    ident = np.eye(size)
    details.append(
        {
            "name": "M1^2 = I",
            "residual": float(np.abs(cmv.M1[:rows] @ cmv.M1 - ident[:rows]).max()),
        }
    )
    details.append(
        {
            "name": "M2^2 = I",
            "residual": float(np.abs(cmv.M2[:rows] @ cmv.M2 - ident[:rows]).max()),
        }
    )

    def vec(z):
        return np.array([f.eval(z) for f in psis])

    worst_c = worst_r1 = worst_r2 = worst_g = 0.0
    for z in pts:
        v = vec(z)
        vr = vec(1.0 / z)
        scale = max(1.0, np.abs(v[:rows]).max())
        worst_c = max(worst_c, np.abs((cmv.C @ v - z * v)[:rows]).max() / scale)
        worst_r1 = max(worst_r1, np.abs((cmv.M1 @ v - vr)[:rows]).max() / scale)
        worst_r2 = max(worst_r2, np.abs((cmv.M2 @ v - z * vr)[:rows]).max() / scale)
        worst_g = max(worst_g, np.abs((cmv.M2 @ v - z * (cmv.M1 @ v))[:rows]).max() / scale)
    details.append({"name": "C psi = z psi", "residual": worst_c})
    details.append({"name": "psi(1/z) = M1 psi", "residual": worst_r1})
    details.append({"name": "z psi(1/z) = M2 psi", "residual": worst_r2})
    details.append({"name": "M2 psi = z M1 psi", "residual": worst_g})

    # sieved reflections: psi(q^j/z) = M1 diag(omega_j) psi(z), and the same
    # with M2 carrying an extra factor q^j
    phases = PhaseTable(p, N)
    for j in range(N):
        om = np.array([phases.omega(n, j) for n in range(size)])
        details.append(
            {"name": f"|omega_{j}| = 1", "residual": float(np.abs(np.abs(om) - 1.0).max())}
        )
        qj = root_of_unity(N, j)
        worst1 = worst2 = 0.0
        for z in pts:
            v = vec(z)
            vj = vec(qj / z)
            scale = max(1.0, np.abs(v[:rows]).max())
            worst1 = max(worst1, np.abs((cmv.M1 @ (om * v) - vj)[:rows]).max() / scale)
            worst2 = max(
                worst2, np.abs((qj * (cmv.M2 @ (om * v)) - z * vj)[:rows]).max() / scale
            )
        details.append({"name": f"psi(q^{j}/z) = M1;{j} psi", "residual": worst1})
        details.append({"name": f"z psi(q^{j}/z) = M2;{j} psi", "residual": worst2})
    return _fold("cmv", p, N, n_max, tolerance, details)


# ---------------------------------------------------------------------------
# three-term recurrences
# ---------------------------------------------------------------------------


def three_term_suite(p, N, n_max=30, tolerance=1e-9):
    """P and Q satisfy a pure three-term recurrence in x; where a special
    coefficient table applies, the measured coefficients must match it."""
    famP = SymmetricFamily(p, N, "P", n_max + 1)
    famQ = SymmetricFamily(p, N, "Q", n_max + 1)
    details = []
    for label, fam in (("P", famP), ("Q", famQ)):
        worst = 0.0
        for n in range(1, n_max + 1):
            _, u, fit = measured_recurrence_bu(fam, n)
            worst = max(worst, fit, abs(u.imag))
        details.append({"name": f"{label} three-term fit", "residual": worst})
    if N == 2:
        worst = max(
            abs(
                measured_recurrence_u(famP, n)[0]
                - special_recurrence_u(p.alpha, 2, GENERALIZED_ULTRA, n, beta=p.beta)
            )
            for n in range(1, n_max + 1)
        )
        details.append({"name": "P matches generalized ultraspherical table", "residual": worst})
    if p.alpha == p.beta:
        worst = max(
            abs(
                measured_recurrence_u(famP, n)[0]
                - special_recurrence_u(p.alpha, N, SIEVED_ULTRA_1, n)
            )
            for n in range(1, n_max + 1)
        )
        details.append({"name": "P matches first-kind table", "residual": worst})
        worst = max(
            abs(
                measured_recurrence_u(famQ, n)[0]
                - special_recurrence_u(p.alpha, N, SIEVED_ULTRA_2, n)
            )
            for n in range(1, n_max + 1)
        )
        details.append({"name": "Q matches second-kind table", "residual": worst})
    return _fold("three-term", p, N, n_max, tolerance, details)


# ---------------------------------------------------------------------------
# dispatch
# ---------------------------------------------------------------------------


SUITES = {
    "eigen-l": eigen_l_suite,
    "eigen-h": eigen_h_suite,
    "eigen-q": eigen_q_suite,
    "eigen-y": eigen_y_suite,
    "ortho": orthogonality_suite,
    "selfadjoint": selfadjoint_suite,
    "algebra": relation_suite,
    "identities": identity_suite,
    "cmv": cmv_suite,
    "three-term": three_term_suite,
}


def run_suite(name, p, N, **kwargs):
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return SUITES[name](p, N, **kwargs)


def _fold(suite, p, N, n_max, tolerance, details, seed=None, samples=None):
    params = {"alpha": p.alpha, "beta": p.beta, "N": N, "nmax": n_max}
    if samples is not None:
        params["samples"] = samples
    worst = max(d["residual"] for d in details)
    return CheckReport(
        suite=suite,
        params=params,
        tolerance=tolerance,
        max_residual=worst,
        seed=seed,
        details=details,
    )
