"""Rational functions of z stored as Laurent-polynomial numerator/denominator.

This is the coefficient field for the Dunkl-type operators: closed under the
ring operations, d/dz (quotient rule) and the dihedral substitutions, which is
exactly what symbolic operator composition needs.  No gcd reduction is
attempted; at desk-scale degrees the growth is harmless.
"""

from __future__ import annotations

from .errors import PlanError
from .laurent import LaurentPoly


class RationalCoeff:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if isinstance(num, (int, float, complex)):
            num = LaurentPoly({0: num})
        if den is None:
            den = LaurentPoly.one()
        elif isinstance(den, (int, float, complex)):
            den = LaurentPoly({0: den})
        if den.is_zero:
            raise ZeroDivisionError("rational coefficient with zero denominator")
        if num.is_zero:
            self.num, self.den = LaurentPoly(), LaurentPoly.one()
            return
        # normalize: monic denominator with nonnegative exponents starting at 0
        shift = -den.min_exp
        scale = 1.0 / den.coeff(den.max_exp)
        self.num = (num * scale).shift(shift)
        self.den = (den * scale).shift(shift)

    @classmethod
    def zero(cls):
        return cls(LaurentPoly())

    @classmethod
    def one(cls):
        return cls(LaurentPoly.one())

    @property
    def is_zero(self):
        return self.num.is_zero

    def __repr__(self):
        return f"RationalCoeff({self.num!r} / {self.den!r})"

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.den == other.den:
            return RationalCoeff(self.num + other.num, self.den)
        return RationalCoeff(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalCoeff(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return RationalCoeff.zero()
        return RationalCoeff(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.is_zero:
            raise ZeroDivisionError("reciprocal of zero")
        return RationalCoeff(self.den, self.num)

    def __truediv__(self, other):
        return self * _coerce(other).reciprocal()

    # -- calculus and substitution ------------------------------------

    def derivative(self):
        """Quotient rule: (n/d)' = (n'd - nd') / d^2."""
        if self.is_zero:
            return RationalCoeff.zero()
        n, d = self.num, self.den
        return RationalCoeff(n.derivative() * d - n * d.derivative(), d * d)

    def substitute(self, element):
        """Compose with the map of a dihedral GroupElement (z -> q^k z or q^j/z)."""
        return RationalCoeff(element.act(self.num), element.act(self.den))

    # -- evaluation ---------------------------------------------------

    def eval(self, z, pole_tolerance=1e-12):
        dv = self.den.eval(z)
        if abs(dv) < pole_tolerance * max(1.0, self.den.max_abs_coeff()):
            raise PlanError(f"evaluation at {z} too close to a coefficient pole")
        return self.num.eval(z) / dv

    def __call__(self, z):
        return self.eval(z)

    def cleanup(self, threshold):
        """Drop sub-threshold numerator coefficients (relative to the largest)."""
        if self.is_zero:
            return self
        return RationalCoeff(self.num.cleanup(threshold * self.num.max_abs_coeff()), self.den)


def _coerce(v):
    if isinstance(v, RationalCoeff):
        return v
    if isinstance(v, LaurentPoly):
        return RationalCoeff(v)
    if isinstance(v, (int, float, complex)):
        return RationalCoeff(LaurentPoly({0: v}))
    raise TypeError(f"cannot coerce {type(v)} to RationalCoeff")
