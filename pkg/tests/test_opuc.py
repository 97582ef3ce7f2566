import numpy as np
import pytest

from sievedjacobi.errors import ValidityError
from sievedjacobi.laurent import make_plan
from sievedjacobi.opuc import CmvTruncation, OpucFamily, VerblunskySequence, h_norm
from sievedjacobi.sieve import JacobiParams, jacobi_sequence


def test_sequence_validates_magnitude():
    bad = VerblunskySequence.from_list([0.5, 1.2])
    assert bad(0) == 0.5
    with pytest.raises(ValidityError):
        bad(1)


def test_h_norm():
    a = VerblunskySequence.from_list([0.0, -1.0 / 3.0, 0.0])
    assert h_norm(a, 0) == 1.0
    assert abs(h_norm(a, 2) - 8.0 / 9.0) < 1e-15


def test_szego_recurrence_first_polys():
    a = VerblunskySequence.from_list([0.5, -0.25])
    fam = OpucFamily(a, 2)
    # Phi_1 = z - a_0, Phi_2 = z Phi_1 - a_1 (1 - a_0 z)
    assert fam.phi(1).coeff(1) == 1.0
    assert fam.phi(1).coeff(0) == -0.5
    phi2 = fam.phi(2)
    assert abs(phi2.coeff(0) - 0.25) < 1e-15
    assert abs(phi2.coeff(1) - (-0.5 - 0.25 * 0.5)) < 1e-15


def test_psi_definition():
    p = JacobiParams(0.0, 0.0)
    fam = OpucFamily(jacobi_sequence(p), 6)
    import cmath

    z = 0.9 * cmath.exp(0.4j)
    for n in range(6):
        m = n // 2
        if n % 2 == 0:
            expected = z**m * fam.phi(n).eval(1.0 / z)
        else:
            expected = z**-m * fam.phi(n).eval(z)
        assert abs(fam.psi(n).eval(z) - expected) < 1e-12


def test_cmv_involutions_and_recurrence():
    p = JacobiParams(0.5, 1.5)
    a = jacobi_sequence(p)
    cmv = CmvTruncation(a, 12)
    rows = cmv.valid_rows
    ident = np.eye(12)
    assert np.abs((cmv.M1 @ cmv.M1 - ident)[:rows]).max() < 1e-13
    assert np.abs((cmv.M2 @ cmv.M2 - ident)[:rows]).max() < 1e-13

    fam = OpucFamily(a, 12)
    plan = make_plan(10, 1)
    for z in plan.points(1):
        v = np.array([fam.psi(n).eval(z) for n in range(12)])
        vr = np.array([fam.psi(n).eval(1.0 / z) for n in range(12)])
        scale = max(1.0, np.abs(v[:rows]).max())
        assert np.abs((cmv.C @ v - z * v)[:rows]).max() / scale < 1e-11
        assert np.abs((cmv.M1 @ v - vr)[:rows]).max() / scale < 1e-11
        assert np.abs((cmv.M2 @ v - z * vr)[:rows]).max() / scale < 1e-11


def test_cmv_size_must_be_even():
    a = VerblunskySequence.from_list([0.0] * 10)
    with pytest.raises(ValueError):
        CmvTruncation(a, 7)
