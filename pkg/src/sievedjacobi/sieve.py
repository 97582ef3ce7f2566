"""Jacobi and sieved-Jacobi Verblunsky parameters, the sieving map for
Phi and psi, the parity-case table relating sieved and plain psi, and the
weight functions on the circle and the interval.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ValidityError
from .opuc import OpucFamily, VerblunskySequence


@dataclass(frozen=True)
class JacobiParams:
    alpha: float
    beta: float

    def validate(self, n_max):
        """Check |a_n| < 1 up to n_max; the admissible (alpha, beta) region is
        probed numerically rather than characterized analytically."""
        for n in range(n_max + 1):
            jacobi_verblunsky(self, n)
        return self


def jacobi_verblunsky(p, n):
    """a_n = -(alpha + 1/2 + (-1)^{n+1} (beta + 1/2)) / (n + alpha + beta + 2)."""
    denom = n + p.alpha + p.beta + 2.0
    if denom == 0:
        raise ValidityError(f"degenerate denominator at n={n} for {p}")
    a = -(p.alpha + 0.5 + (-1.0) ** (n + 1) * (p.beta + 0.5)) / denom
    if abs(a) >= 1.0:
        raise ValidityError(f"|a_{n}| = {abs(a)} >= 1 for alpha={p.alpha}, beta={p.beta}")
    return a


def sieved_verblunsky(p, N, n):
    """a_n(N) = a_{k-1} when n = Nk - 1, and 0 otherwise."""
    if N < 1:
        raise ValueError("sieving order N must be >= 1")
    if (n + 1) % N == 0:
        return jacobi_verblunsky(p, (n + 1) // N - 1)
    return 0.0


def jacobi_sequence(p):
    return VerblunskySequence(
        lambda n: jacobi_verblunsky(p, n),
        description=f"jacobi(alpha={p.alpha}, beta={p.beta})",
    )


def sieved_sequence(p, N):
    return VerblunskySequence(
        lambda n: sieved_verblunsky(p, N, n),
        description=f"sieved_jacobi(alpha={p.alpha}, beta={p.beta}, N={N})",
    )


class SievedFamily:
    """Sieved OPUC built via the product form Phi_n(z;N) = z^j Phi_k(z^N).

    The plain Jacobi family Phi_k is cached once; the recurrence route on the
    sieved Verblunsky parameters is available as an independent cross-check.
    """

    def __init__(self, p, N, n_max):
        self.params = p
        self.N = N
        self.n_max = n_max
        self.base = OpucFamily(jacobi_sequence(p), n_max // N + 1)

    def phi(self, n):
        k, j = divmod(n, self.N)
        return self.base.phi(k).power_substitute(self.N).shift(j)

    def psi(self, n):
        """psi_{2m}(z;N) = z^m Phi_{2m}(1/z;N); psi_{2m+1}(z;N) = z^{-m} Phi_{2m+1}(z;N)."""
        m = n // 2
        if n % 2 == 0:
            return self.phi(n).reflect(0, 1).shift(m)
        return self.phi(n).shift(-m)


def sieved_phi(p, N, n):
    return SievedFamily(p, N, n).phi(n)


def sieved_psi(p, N, n):
    return SievedFamily(p, N, n).psi(n)


CASE_KEVEN_J_EVEN = "k_even/j_even"
CASE_KEVEN_J_ODD = "k_even/j_odd"
CASE_KODD_NEVEN_J_EVEN = "k_odd/N_even/j_even"
CASE_KODD_NEVEN_J_ODD = "k_odd/N_even/j_odd"
CASE_KODD_NODD_J_EVEN = "k_odd/N_odd/j_even"
CASE_KODD_NODD_J_ODD = "k_odd/N_odd/j_odd"


@dataclass(frozen=True)
class PsiCaseDescriptor:
    """One row of the parity table:  psi_n(z;N) = z^nu psi_k(z^{power_sign * N})."""

    n: int
    N: int
    k: int
    j: int
    nu: int
    power_sign: int
    case_id: str


# The branch selector is the parity of k = n // N (established by exhaustive
# numerical matching against the definitional construction); the k-odd block
# additionally splits on the parity of N.
def psi_case(n, N):
    """Classify (n, N) into one of the six parity branches."""
    if N < 1 or n < 0:
        raise ValueError("need N >= 1 and n >= 0")
    k, j = divmod(n, N)
    if k % 2 == 0:
        if j % 2 == 0:
            nu, sign, case = -j // 2, +1, CASE_KEVEN_J_EVEN
        else:
            nu, sign, case = (j + 1) // 2, -1, CASE_KEVEN_J_ODD
    elif N % 2 == 0:
        if j % 2 == 0:
            nu, sign, case = (N - j) // 2, -1, CASE_KODD_NEVEN_J_EVEN
        else:
            nu, sign, case = (-N + j + 1) // 2, +1, CASE_KODD_NEVEN_J_ODD
    else:
        if j % 2 == 0:
            nu, sign, case = (-N + j + 1) // 2, +1, CASE_KODD_NODD_J_EVEN
        else:
            nu, sign, case = (N - j) // 2, -1, CASE_KODD_NODD_J_ODD
    return PsiCaseDescriptor(n=n, N=N, k=k, j=j, nu=nu, power_sign=sign, case_id=case)


def psi_from_case(p, N, n):
    """Reconstruct psi_n(z;N) as z^nu psi_k(z^{+-N}) from the parity table."""
    case = psi_case(n, N)
    base = OpucFamily(jacobi_sequence(p), case.k)
    return base.psi(case.k).power_substitute(case.power_sign * N).shift(case.nu)


def rotation_phase(p, N, n, j, z=0.83 * math.e ** 0.25j):
    """Measured phase omega with psi_n(q^{-j} z; N) = omega psi_n(z; N).

    The closed form is not pinned down by a formula; the value is obtained as
    a ratio at one point (and verified constant elsewhere by the test suite).
    """
    psi = sieved_psi(p, N, n)
    shifted = psi.rotate(-j, N)
    denom = psi.eval(z)
    if denom == 0:
        raise DomainError("degenerate probe point for phase measurement")
    return shifted.eval(z) / denom


class PhaseTable:
    """Cache of measured unit-modulus phases omega_j(N) per polynomial index."""

    def __init__(self, p, N):
        self.params = p
        self.N = N
        self._cache = {}

    def omega(self, n, j):
        key = (n, j)
        if key not in self._cache:
            self._cache[key] = rotation_phase(self.params, self.N, n, j)
        return self._cache[key]


def weight_rho(p, theta):
    """rho(theta) = (1 - cos theta)^{alpha+1/2} (1 + cos theta)^{beta+1/2}."""
    return weight_rho_N(p, 1, theta)


def weight_rho_N(p, N, theta):
    """rho(theta; N) = (1 - cos N theta)^{alpha+1/2} (1 + cos N theta)^{beta+1/2}."""
    ea, eb = p.alpha + 0.5, p.beta + 0.5
    c = math.cos(N * theta)
    um, up = max(1.0 - c, 0.0), max(1.0 + c, 0.0)
    if (um == 0.0 and ea < 0) or (up == 0.0 and eb < 0):
        raise DomainError("weight singular at this node")
    return um ** ea * up ** eb


def weight_w(p, x):
    """Interval weight w(x) = rho(theta)/sqrt(4 - x^2) with x = 2 cos theta, |x| < 2."""
    if not -2.0 < x < 2.0:
        raise DomainError("interval weight defined for |x| < 2 only")
    theta = math.acos(x / 2.0)
    return weight_rho(p, theta) / math.sqrt(4.0 - x * x)


def weights(which, p, N, point):
    """Dispatch: 'rho' and 'w' take the plain weight, 'rho_N' the sieved one."""
    if which == "rho":
        return weight_rho(p, point)
    if which == "rho_N":
        return weight_rho_N(p, N, point)
    if which == "w":
        return weight_w(p, point)
    raise ValueError(f"unknown weight kind {which!r}")
