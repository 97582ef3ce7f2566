"""The dihedral group D_N acting on Laurent polynomials, and word reduction.

Elements are the reflections R_j : f(z) -> f(q^j / z) and the rotations
T_k : f(z) -> f(q^k z), with q = exp(2 pi i / N).  Operator words of the
form  (scalar) * z^p * (group element)  are closed under composition, which
covers the M_j = z R_j operators as well.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

IDENTITY = "identity"
REFLECTION = "reflection"
ROTATION = "rotation"


def root_of_unity(N, power=1):
    return cmath.exp(2j * cmath.pi * power / N)


@dataclass(frozen=True)
class GroupElement:
    """Identity, reflection R_j or rotation T_k of D_N (index taken mod N)."""

    tag: str
    index: int
    N: int

    def __post_init__(self):
        if self.tag not in (IDENTITY, REFLECTION, ROTATION):
            raise ValueError(f"unknown tag {self.tag!r}")
        object.__setattr__(self, "index", self.index % self.N)
        if self.tag == IDENTITY:
            object.__setattr__(self, "index", 0)
        elif self.tag == ROTATION and self.index == 0:
            object.__setattr__(self, "tag", IDENTITY)

    # -- constructors -------------------------------------------------

    @classmethod
    def identity(cls, N):
        return cls(IDENTITY, 0, N)

    @classmethod
    def reflection(cls, j, N):
        return cls(REFLECTION, j, N)

    @classmethod
    def rotation(cls, k, N):
        return cls(ROTATION, k, N)

    # -- action -------------------------------------------------------

    def act(self, p):
        """Apply the substitution to a LaurentPoly."""
        if self.tag == IDENTITY:
            return p
        if self.tag == REFLECTION:
            return p.reflect(self.index, self.N)
        return p.rotate(self.index, self.N)

    def map_point(self, z):
        """The underlying map on the argument z."""
        if self.tag == IDENTITY:
            return z
        if self.tag == REFLECTION:
            return root_of_unity(self.N, self.index) / z
        return root_of_unity(self.N, self.index) * z

    def __mul__(self, other):
        """Operator product: (a * b) f = a (b f), reduced via the D_N table."""
        if not isinstance(other, GroupElement):
            return NotImplemented
        if self.N != other.N:
            raise ValueError("group elements of different D_N cannot be composed")
        N = self.N
        a, b = self, other
        if a.tag == IDENTITY:
            return b
        if b.tag == IDENTITY:
            return a
        if a.tag == REFLECTION and b.tag == REFLECTION:
            # R_k R_j = T_{j-k}  with a=R_k, b=R_j
            return GroupElement.rotation(b.index - a.index, N)
        if a.tag == ROTATION and b.tag == REFLECTION:
            # T_k R_j = R_{j-k}
            return GroupElement.reflection(b.index - a.index, N)
        if a.tag == REFLECTION and b.tag == ROTATION:
            # R_j T_k = R_{j+k}
            return GroupElement.reflection(a.index + b.index, N)
        return GroupElement.rotation(a.index + b.index, N)

    def inverse(self):
        if self.tag == ROTATION:
            return GroupElement.rotation(-self.index, self.N)
        return self


def full_group(N):
    """All 2N elements of D_N (identity counted among the rotations)."""
    return [GroupElement.rotation(k, N) for k in range(N)] + [
        GroupElement.reflection(j, N) for j in range(N)
    ]


@dataclass(frozen=True)
class DihedralWord:
    """(scalar) * z^power * element, the reduced form of any word in R_j, T_k, z."""

    scalar: complex
    power: int
    element: GroupElement

    @classmethod
    def from_element(cls, g):
        return cls(1.0 + 0j, 0, g)

    @classmethod
    def m_operator(cls, j, N):
        """M_j = z R_j."""
        return cls(1.0 + 0j, 1, GroupElement.reflection(j, N))

    @property
    def N(self):
        return self.element.N

    def act(self, p):
        """Apply to a LaurentPoly: scalar * z^power * (element f)."""
        return (self.element.act(p)).shift(self.power) * self.scalar

    def act_point(self, f, z):
        """Evaluate the word applied to a callable f at the point z."""
        return self.scalar * z ** self.power * f(self.element.map_point(z))

    def __mul__(self, other):
        """Reduced product: (a*b) f = a (b f)."""
        if not isinstance(other, DihedralWord):
            return NotImplemented
        if self.N != other.N:
            raise ValueError("words over different D_N cannot be composed")
        g1, g2 = self.element, other.element
        # g1 acting on z^{p2} h(z) picks up a phase and possibly flips the power
        if g1.tag == REFLECTION:
            phase = root_of_unity(self.N, g1.index * other.power)
            p2 = -other.power
        elif g1.tag == ROTATION:
            phase = root_of_unity(self.N, g1.index * other.power)
            p2 = other.power
        else:
            phase = 1.0 + 0j
            p2 = other.power
        return DihedralWord(self.scalar * other.scalar * phase, self.power + p2, g1 * g2)

    def approx_equal(self, other, tol=1e-12):
        return (
            self.power == other.power
            and self.element == other.element
            and abs(self.scalar - other.scalar) <= tol
        )


def compose_group(a, b):
    """Reduced product of two dihedral words (operator order: a after b)."""
    return a * b


def _word_residual(lhs_words, rhs_word, panel, points):
    """Max pointwise deviation of a product of words from its reduced form."""
    worst = 0.0
    for f in panel:
        g = f
        for w in reversed(lhs_words):
            g = w.act(g)
        h = rhs_word.act(f)
        for z in points:
            ref = abs(h.eval(z))
            worst = max(worst, abs(g.eval(z) - h.eval(z)) / max(1.0, ref))
    return worst


def _panel(rng, size=20, span=8):
    from .laurent import LaurentPoly

    return [
        LaurentPoly(
            {k: complex(rng.uniform(0, 1), rng.uniform(0, 1)) for k in range(-span, span + 1)}
        )
        for _ in range(size)
    ]


def relation_suite(p, N, seed=42, panel_size=20, samples=40, tolerance=1e-10):
    """Check the D_N word relations and the (anti)commutators with L(N).

    Every relation is verified both by word reduction and by acting on a
    panel of random Laurent polynomials at off-grid sample points.  The
    rotation-sum phase in the odd-N M_j anticommutator is q^{kJ} (it agrees
    with the word algebra and the panel at every j, where q^{j+kJ} does not).
    """
    import random

    from .laurent import make_plan
    from .operators import (
        DunklOperator,
        OperatorTerm,
        build_K,
        build_L,
    )
    from .rational import RationalCoeff
    from .laurent import LaurentPoly
    from .report import CheckReport

    rng = random.Random(seed)
    panel = _panel(rng, panel_size)
    points = make_plan(samples, N).points(N)
    details = []

    def record(name, residual):
        details.append({"name": name, "residual": residual})

    # group-table relations as words
    for k in range(N):
        for j in range(N):
            rk = DihedralWord.from_element(GroupElement.reflection(k, N))
            rj = DihedralWord.from_element(GroupElement.reflection(j, N))
            tk = DihedralWord.from_element(GroupElement.rotation(k, N))
            tj = DihedralWord.from_element(GroupElement.rotation(j, N))
            mj = DihedralWord.m_operator(j, N)
            mk = DihedralWord.m_operator(k, N)
            cases = [
                (f"R_{k} R_{j}", [rk, rj], DihedralWord.from_element(GroupElement.rotation(j - k, N))),
                (f"T_{k} T_{j}", [tk, tj], DihedralWord.from_element(GroupElement.rotation(k + j, N))),
                (f"T_{k} R_{j}", [tk, rj], DihedralWord.from_element(GroupElement.reflection(j - k, N))),
                (f"R_{j} T_{k}", [rj, tk], DihedralWord.from_element(GroupElement.reflection(j + k, N))),
                (
                    f"M_{j} M_{k}",
                    [mj, mk],
                    DihedralWord(root_of_unity(N, j), 0, GroupElement.rotation(k - j, N)),
                ),
                (
                    f"M_{j} R_{k}",
                    [mj, rk],
                    DihedralWord(1.0 + 0j, 1, GroupElement.rotation(k - j, N)),
                ),
                # the scalar here is q^k, matching the measured action
                (
                    f"R_{k} M_{j}",
                    [rk, mj],
                    DihedralWord(root_of_unity(N, k), -1, GroupElement.rotation(j - k, N)),
                ),
            ]
            for name, lhs, rhs in cases:
                reduced = lhs[0]
                for w in lhs[1:]:
                    reduced = reduced * w
                if not reduced.approx_equal(rhs):
                    record(name + " (word)", 1.0)
                else:
                    record(name + " (word)", 0.0)
                record(name + " (panel)", _word_residual(lhs, rhs, panel[:3], points[:7]))
        rword = DihedralWord.from_element(GroupElement.reflection(k, N))
        record(f"R_{k}^2", _word_residual([rword, rword], DihedralWord.from_element(GroupElement.identity(N)), panel[:2], points[:5]))
        tword = DihedralWord.from_element(GroupElement.rotation(k, N))
        record(f"T_{k}^{N}", _word_residual([tword] * N, DihedralWord.from_element(GroupElement.identity(N)), panel[:2], points[:5]))

    # operator relations with L(N)
    def op_word(tag, idx, z_power=0, scalar=1.0):
        elem = GroupElement(tag, idx, N)
        coeff = RationalCoeff(LaurentPoly({z_power: scalar}))
        return DunklOperator([OperatorTerm(coeff, 0, elem)], N)

    L = build_L(p, N)
    plan = make_plan(samples, N)
    s = p.alpha + p.beta + 1.0

    def op_residual(a, b, name):
        worst = 0.0
        for f in panel:
            fa, fb = a.bound(f), b.bound(f)
            for z in plan.points(N):
                ref = abs(fb(z))
                worst = max(worst, abs(fa(z) - fb(z)) / max(1.0, ref))
        record(name, worst)

    for j in range(N):
        op_residual(
            L.commutator(op_word(ROTATION, j)),
            DunklOperator([], N),
            f"[L, T_{j}]",
        )
        r_j = op_word(REFLECTION, j)
        m_j = op_word(REFLECTION, j, z_power=1)
        lhs_r = L.anticommutator(r_j)
        lhs_m = L.anticommutator(m_j)
        if N % 2 == 0:
            rhs_r = N * s * r_j
            for k in range(N // 2):
                rhs_r = rhs_r - (2 * p.alpha + 1) * op_word(ROTATION, 2 * k + j)
                rhs_r = rhs_r - (2 * p.beta + 1) * op_word(ROTATION, 2 * k + j + 1)
            rhs_m = (s * N + 1.0) * m_j
        else:
            rhs_r = N * s * r_j
            for k in range(N):
                rhs_r = rhs_r - s * op_word(ROTATION, k)
            J = (N - 1) // 2
            rhs_m = (s * N + 1.0) * m_j
            for k in range(N):
                rhs_m = rhs_m + (p.alpha - p.beta) * root_of_unity(N, k * J) * op_word(
                    ROTATION, j + k
                )
        op_residual(lhs_r, rhs_r, f"{{R_{j}, L}}")
        op_residual(lhs_m, rhs_m, f"{{M_{j}, L}}")

    if N == 1:
        K = build_K(p)
        m1 = op_word(REFLECTION, 0)
        m2 = op_word(REFLECTION, 0, z_power=1)
        ident = DunklOperator.identity(1)
        op_residual(K.anticommutator(m1), s * m1 + (-s) * ident, "{K, M1}")
        op_residual(
            K.anticommutator(m2),
            (2.0 + p.alpha + p.beta) * m2 + (p.alpha - p.beta) * ident,
            "{K, M2}",
        )

    worst = max(d["residual"] for d in details)
    return CheckReport(
        suite="algebra",
        params={"alpha": p.alpha, "beta": p.beta, "N": N, "nmax": None},
        tolerance=tolerance,
        max_residual=worst,
        seed=seed,
        details=details,
    )
