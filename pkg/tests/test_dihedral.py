import cmath
import itertools

from sievedjacobi.dihedral import (
    DihedralWord,
    GroupElement,
    full_group,
    relation_suite,
    root_of_unity,
)
from sievedjacobi.laurent import LaurentPoly
from sievedjacobi.sieve import JacobiParams


def test_group_table_examples():
    N = 5
    r0 = GroupElement.reflection(0, N)
    r1 = GroupElement.reflection(1, N)
    assert r1 * r0 == GroupElement.rotation(-1, N)
    t2 = GroupElement.rotation(2, N)
    t3 = GroupElement.rotation(3, N)
    assert t2 * t3 == GroupElement.identity(N)
    assert t2 * r1 == GroupElement.reflection(-1, N)
    assert r1 * t2 == GroupElement.reflection(3, N)
    assert r1 * r1 == GroupElement.identity(N)


def test_associativity_exhaustive():
    for N in range(1, 7):
        elements = full_group(N)
        for a, b, c in itertools.product(elements, repeat=3):
            assert (a * b) * c == a * (b * c)


def test_r0_r1_generate_2n_elements():
    for N in range(1, 9):
        gens = [GroupElement.reflection(0, N), GroupElement.reflection(1, N)]
        seen = {GroupElement.identity(N)}
        frontier = [GroupElement.identity(N)]
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = s * g
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        assert len(seen) == 2 * N


def test_action_matches_map_point():
    N = 4
    f = LaurentPoly({3: 1.0, -2: 2.0})
    z = 0.85 * cmath.exp(0.37j)
    for g in full_group(N):
        assert abs(g.act(f).eval(z) - f.eval(g.map_point(z))) < 1e-12


def test_word_reduction_m_operators():
    N = 5
    mj = DihedralWord.m_operator(2, N)
    mk = DihedralWord.m_operator(4, N)
    prod = mj * mk
    assert prod.power == 0
    assert prod.element == GroupElement.rotation(2, N)
    assert abs(prod.scalar - root_of_unity(N, 2)) < 1e-14

    rk = DihedralWord.from_element(GroupElement.reflection(1, N))
    back = rk * mj
    # scalar q^k with k the reflection index, verified by direct action
    f = LaurentPoly({3: 1.0, -2: 0.5})
    z = 0.77 * cmath.exp(0.41j)
    assert abs(rk.act(mj.act(f)).eval(z) - back.act(f).eval(z)) < 1e-12
    assert abs(back.scalar - root_of_unity(N, 1)) < 1e-14


def test_relation_suite_passes():
    p = JacobiParams(0.3, 1.7)
    for N in (1, 2, 3):
        report = relation_suite(p, N)
        assert report.passed, report.summary_line()
