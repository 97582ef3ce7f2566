"""Szego recurrence for monic OPUC with real Verblunsky parameters,
the CMV Laurent polynomials psi_n, and the block matrices M1, M2, C = M1 M2.
"""

from __future__ import annotations

import numpy as np

from .errors import ValidityError
from .laurent import LaurentPoly


class VerblunskySequence:
    """Accessor n -> a_n for real Verblunsky parameters with |a_n| < 1."""

    def __init__(self, fn, description="custom"):
        self._fn = fn
        self.description = description

    @classmethod
    def from_list(cls, values):
        values = [float(v) for v in values]

        def fn(n):
            return values[n]

        return cls(fn, description=f"explicit[{len(values)}]")

    def __call__(self, n):
        if n < 0:
            raise ValueError("Verblunsky index must be nonnegative")
        a = float(self._fn(n))
        if abs(a) >= 1.0:
            raise ValidityError(f"|a_{n}| = {abs(a)} >= 1 ({self.description})")
        return a


def h_norm(a, n):
    """h_0 = 1, h_n = prod_{k<n} (1 - a_k^2); strictly positive."""
    h = 1.0
    for k in range(n):
        h *= 1.0 - a(k) ** 2
    return h


class OpucFamily:
    """Cache of the monic OPUC Phi_0 .. Phi_{n_max} built from the Szego recurrence.

    Phi_{k+1}(z) = z Phi_k(z) - a_k Phi_k^*(z), with Phi_k^* the coefficient
    reversal (real parameters, so no conjugation enters).
    """

    def __init__(self, source, n_max):
        if n_max < 0:
            raise ValueError("n_max must be nonnegative")
        self.source = source
        self.n_max = n_max
        self._phi = [LaurentPoly.one()]
        z = LaurentPoly.z()
        for k in range(n_max):
            phi = self._phi[k]
            # reversal of a degree-k polynomial: z^k Phi(1/z)
            star = phi.reflect(0, 1).shift(k)
            self._phi.append(z * phi - source(k) * star)

    def phi(self, n):
        if not 0 <= n <= self.n_max:
            raise IndexError(f"Phi_{n} not cached (n_max={self.n_max})")
        return self._phi[n]

    def psi(self, n):
        """CMV Laurent polynomial: psi_{2m} = z^m Phi_{2m}(1/z), psi_{2m+1} = z^{-m} Phi_{2m+1}."""
        phi = self.phi(n)
        m = n // 2
        if n % 2 == 0:
            return phi.reflect(0, 1).shift(m)
        return phi.shift(-m)

    def psi_vector(self, count):
        return [self.psi(n) for n in range(count)]


def szego_sequence(a, n_max):
    return OpucFamily(a, n_max)


def _place_blocks(size, entries):
    """Assemble a size x size matrix from 2x2 blocks [[a,1],[1-a^2,-a]] at the given rows."""
    M = np.zeros((size, size))
    for top, a in entries:
        if top + 1 < size:
            M[top, top] = a
            M[top, top + 1] = 1.0
            M[top + 1, top] = 1.0 - a * a
            M[top + 1, top + 1] = -a
        elif top < size:
            # truncated trailing block: only the diagonal entry survives
            M[top, top] = a
    return M


class CmvTruncation:
    """Finite sections of the matrices M1, M2 and the pentadiagonal C = M1 M2.

    Identities that rely on the semi-infinite structure are only valid on the
    rows unaffected by the truncation; `valid_rows` records that window.
    """

    def __init__(self, a, size):
        if size < 4 or size % 2 != 0:
            raise ValueError("CMV truncation size must be even and >= 4")
        self.size = size
        self.source = a
        m1_entries = [(2 * k + 1, a(2 * k + 1)) for k in range((size - 1) // 2 + 1) if 2 * k + 1 < size]
        self.M1 = _place_blocks(size, m1_entries)
        self.M1[0, 0] = 1.0
        m2_entries = [(2 * k, a(2 * k)) for k in range(size // 2)]
        self.M2 = _place_blocks(size, m2_entries)
        self.C = self.M1 @ self.M2

    @property
    def valid_rows(self):
        return self.size - 2


def cmv_matrices(a, size):
    return CmvTruncation(a, size)
