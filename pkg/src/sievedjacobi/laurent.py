"""Laurent polynomials with complex coefficients and sampled identity testing.

A Laurent polynomial is stored as a dict mapping integer exponents to complex
coefficients.  Zero coefficients are dropped exactly (no tolerance) so that
long recurrences do not silently lose accuracy; approximate cleanup is a
separate, explicit operation.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, PlanError, SymmetryError


class LaurentPoly:
    """Finite sum  sum_k c_k z^k  with integer exponents of either sign."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                v = complex(v)
                if v != 0:
                    c[int(k)] = v
        self.coeffs = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1.0})

    @classmethod
    def monomial(cls, exp, coeff=1.0):
        return cls({exp: coeff})

    @classmethod
    def z(cls):
        return cls({1: 1.0})

    # -- basic structure ----------------------------------------------

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def min_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no span")
        return min(self.coeffs)

    @property
    def max_exp(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no span")
        return max(self.coeffs)

    @property
    def span(self):
        """Width max_exp - min_exp; 0 for the zero polynomial."""
        if not self.coeffs:
            return 0
        return self.max_exp - self.min_exp

    def coeff(self, k):
        return self.coeffs.get(k, 0j)

    def max_abs_coeff(self):
        return max((abs(v) for v in self.coeffs.values()), default=0.0)

    def cleanup(self, threshold):
        """Drop coefficients with magnitude <= threshold (explicit, caller-chosen)."""
        return LaurentPoly({k: v for k, v in self.coeffs.items() if abs(v) > threshold})

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({v:.6g})z^{k}" for k, v in sorted(self.coeffs.items()))
        return f"LaurentPoly({terms})"

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def allclose(self, other, tol=1e-12):
        keys = set(self.coeffs) | set(other.coeffs)
        scale = max(1.0, self.max_abs_coeff(), other.max_abs_coeff())
        return all(abs(self.coeff(k) - other.coeff(k)) <= tol * scale for k in keys)

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = LaurentPoly({0: other})
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = c.get(k, 0j) + v
            if s == 0:
                c.pop(k, None)
            else:
                c[k] = s
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {k: -v for k, v in self.coeffs.items()}
        return out

    def __sub__(self, other):
        if isinstance(other, (int, float, complex)):
            other = LaurentPoly({0: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            other = complex(other)
            if other == 0:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out.coeffs = {k: v * other for k, v in self.coeffs.items()}
            return out
        c = {}
        for k1, v1 in self.coeffs.items():
            for k2, v2 in other.coeffs.items():
                k = k1 + k2
                s = c.get(k, 0j) + v1 * v2
                if s == 0:
                    c.pop(k, None)
                else:
                    c[k] = s
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = c
        return out

    __rmul__ = __mul__

    def shift(self, m):
        """Multiply by z^m."""
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {k + m: v for k, v in self.coeffs.items()}
        return out

    # -- evaluation ---------------------------------------------------

    def __call__(self, z):
        return self.eval(z)

    def eval(self, z):
        """Evaluate by Horner's scheme, split over nonnegative and negative exponents."""
        z = complex(z)
        if not self.coeffs:
            return 0j
        neg = [k for k in self.coeffs if k < 0]
        if neg and z == 0:
            raise DomainError("cannot evaluate negative exponents at z=0")
        top = max(max(self.coeffs), 0)
        acc = 0j
        for k in range(top, -1, -1):
            acc = acc * z + self.coeffs.get(k, 0j)
        if neg:
            w = 1.0 / z
            accn = 0j
            for k in range(min(neg), 0):
                accn = accn * w + self.coeffs.get(k, 0j)
            # accn currently equals sum_{k<0} c_k w^{-1-k}; one more factor of w fixes it
            acc += accn * w
        return acc

    # -- calculus -----------------------------------------------------

    def derivative(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {k - 1: k * v for k, v in self.coeffs.items() if k != 0}
        return out

    # -- dihedral substitutions ---------------------------------------

    def reflect(self, j, N):
        """f(z) -> f(q^j / z) with q = exp(2*pi*i/N):  z^k -> q^{jk} z^{-k}."""
        q = cmath.exp(2j * cmath.pi / N)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {-k: v * q ** (j * k) for k, v in self.coeffs.items()}
        return out

    def rotate(self, k, N):
        """f(z) -> f(q^k z):  z^m -> q^{km} z^m."""
        q = cmath.exp(2j * cmath.pi / N)
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {m: v * q ** (k * m) for m, v in self.coeffs.items()}
        return out

    def power_substitute(self, s):
        """f(z) -> f(z^s) for a nonzero integer s:  z^k -> z^{sk}."""
        if s == 0:
            raise ValueError("power substitution requires a nonzero exponent")
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {s * k: v for k, v in self.coeffs.items()}
        return out

    def conj_coeffs(self):
        out = LaurentPoly.__new__(LaurentPoly)
        out.coeffs = {k: v.conjugate() for k, v in self.coeffs.items()}
        return out

    # -- symmetry and the x = z + 1/z basis ---------------------------

    def is_symmetric(self, tol=1e-10):
        """True when f(1/z) = f(z) within a coefficient-wise tolerance."""
        return self.allclose(self.reflect(0, 1), tol=tol)

    def to_x_basis(self, tol=1e-10):
        """Coefficients of P with P(z + 1/z) = self, for symmetric input.

        Works by repeatedly stripping the top pair z^d + z^{-d} using the
        expansion of (z + 1/z)^d.  Returns a list [c_0, c_1, ..., c_deg].
        """
        if not self.is_symmetric(tol=tol):
            raise SymmetryError("to_x_basis requires a symmetric Laurent polynomial")
        if self.is_zero:
            return [0j]
        deg = self.max_exp
        scale = max(1.0, self.max_abs_coeff())
        xcoeffs = [0j] * (deg + 1)
        rem = self
        for d in range(deg, -1, -1):
            c = rem.coeff(d)
            if c != 0:
                xcoeffs[d] = c
                rem = rem - c * _x_power(d)
            # drop accumulated rounding so lower strips see clean data
            rem = rem.cleanup(1e-14 * scale * (deg + 1))
        if not rem.is_zero:
            raise SymmetryError("nonzero remainder after x-basis extraction")
        return xcoeffs

    @staticmethod
    def from_x_basis(xcoeffs):
        """Rebuild the symmetric Laurent polynomial  sum_k xcoeffs[k] (z + 1/z)^k."""
        out = LaurentPoly()
        for k, c in enumerate(xcoeffs):
            if c != 0:
                out = out + c * _x_power(k)
        return out

    # -- division -----------------------------------------------------

    def divide(self, divisor):
        """Long division by a Laurent polynomial; returns (quotient, remainder).

        Elimination proceeds from the top exponent, so exactness means the
        remainder collapses to (numerically) zero.
        """
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero:
            return LaurentPoly(), LaurentPoly()
        dtop = divisor.max_exp
        dlead = divisor.coeff(dtop)
        qmin = self.min_exp - divisor.min_exp
        quotient = LaurentPoly()
        rem = self
        while not rem.is_zero and rem.max_exp - dtop >= qmin:
            k = rem.max_exp - dtop
            c = rem.coeff(rem.max_exp) / dlead
            term = LaurentPoly({k: c})
            quotient = quotient + term
            rem = rem - term * divisor
        return quotient, rem


_X_POWER_CACHE = {0: LaurentPoly.one()}


def _x_power(d):
    """(z + 1/z)^d, cached."""
    if d not in _X_POWER_CACHE:
        x = LaurentPoly({1: 1.0, -1: 1.0})
        top = max(_X_POWER_CACHE)
        p = _X_POWER_CACHE[top]
        for k in range(top + 1, d + 1):
            p = p * x
            _X_POWER_CACHE[k] = p
    return _X_POWER_CACHE[d]


@dataclass(frozen=True)
class SamplePlan:
    """Deterministic off-grid sample points on a circle for identity checks.

    Points are z_j = radius * exp(i (2 pi j / count + phase_offset)).  The
    default phase offset 0.37 rad keeps samples away from all roots of unity
    for every N of practical size, which is where the operator coefficients
    have their poles.
    """

    count: int
    radius: float = 1.0
    phase_offset: float = 0.37
    pole_tolerance: float = 1e-3

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("sample count must be positive")
        if self.radius <= 0:
            raise ValueError("sample radius must be positive")

    def raw_points(self):
        return [
            self.radius * cmath.exp(1j * (2 * math.pi * j / self.count + self.phase_offset))
            for j in range(self.count)
        ]

    def points(self, N=1):
        """Sample points, validated against the poles for the given N.

        Poles sit at the 2N-th roots of unity and at +-1; a sample within
        pole_tolerance of any of them raises PlanError.
        """
        pts = self.raw_points()
        poles = [cmath.exp(1j * math.pi * m / N) for m in range(2 * N)] + [1.0, -1.0]
        for z in pts:
            for p in poles:
                if abs(z - p) < self.pole_tolerance:
                    raise PlanError(
                        f"sample {z:.6f} lies within {self.pole_tolerance} of pole {p:.6f}"
                    )
        return pts


def make_plan(count, N=1, radius=1.0, phase_offset=0.37, pole_tolerance=1e-3):
    """SamplePlan with the requested count, nudged upward if a sample hits a pole."""
    for c in range(count, count + 64):
        plan = SamplePlan(c, radius, phase_offset, pole_tolerance)
        try:
            plan.points(N)
        except PlanError:
            continue
        return plan
    raise PlanError(f"no valid plan near count={count} for N={N}")


def max_residual_on_samples(f, g, plan, N=1):
    """max_j |f(z_j) - g(z_j)| / max(1, max_j |g(z_j)|) over the plan samples."""
    pts = plan.points(N)
    fv = [f(z) for z in pts]
    gv = [g(z) for z in pts]
    scale = max(1.0, max(abs(v) for v in gv))
    return max(abs(a - b) for a, b in zip(fv, gv)) / scale
