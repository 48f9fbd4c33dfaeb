import pytest

from ominus_duality.algebra import find_isomorphism, validate_ominus_algebra
from ominus_duality.complex import (complex_algebra, double_dual_isomorphism, dual_algebra,
                                    f_plus_mask, f_star_mask, verify_complex_properties)
from ominus_duality.constructions import boolean_difference
from ominus_duality.errors import SpaceInvalid
from ominus_duality.order import downsets
from ominus_duality.space import extended_dual
from spaces import broken_chain, point, rdop_failure


def test_l3_complex_examples(l3):
    S = extended_dual(l3)
    assert f_plus_mask(S, 0b11, 0b01) == 0b01
    assert f_star_mask(S, 0b01, 0b01) == 0 == f_plus_mask(S, 0b01, 0b01)
    for v in downsets(S.X):
        assert f_plus_mask(S, 0, v) == 0


def test_star_empty_second_argument(nm):
    S = extended_dual(nm)
    for u in downsets(S.X):
        assert f_star_mask(S, u, 0) == S.X.full


def test_complex_algebra_tables(l3):
    ca = complex_algebra(extended_dual(l3))
    assert ca.C.masks == (0, 1, 3)
    assert ca.f_plus == ((0, 0, 0), (1, 0, 0), (2, 1, 0))
    assert all(ca.clopen(k) for k in range(ca.C.size))


def test_complex_algebra_rejects_invalid():
    with pytest.raises(SpaceInvalid):
        complex_algebra(broken_chain())


def test_dual_algebras(l3, nm):
    B = dual_algebra(extended_dual(l3))
    assert validate_ominus_algebra(B.lattice, B.table).ok
    assert find_isomorphism(l3, B) is not None
    P = dual_algebra(point())
    assert P.size == 2 and P.table == ((0, 0), (1, 0))
    assert find_isomorphism(nm, dual_algebra(extended_dual(nm))) is not None


def test_complex_properties_pass(l3):
    assert verify_complex_properties(extended_dual(l3)).ok
    S = extended_dual(boolean_difference(2))
    assert verify_complex_properties(S).ok
    assert complex_algebra(S).C.size == 4


def test_contraction_needs_rdop():
    r = verify_complex_properties(rdop_failure())
    assert not r["contraction"].ok
    u, v1, v2 = r["contraction"].witness
    assert u == 0b0111 and {v1, v2} == {0b0011, 0b0101}


def test_double_dual(l3, chain2, nm):
    d = double_dual_isomorphism(l3)
    assert d.ok and d.mapping == (0, 1, 2)
    C = d.dual.lattice
    assert C.masks[d.mapping[l3.minus(1, 1)]] == 0
    assert double_dual_isomorphism(chain2).ok
    d = double_dual_isomorphism(nm)
    assert d.ok
    top, c, b = nm.element("top"), nm.element("c"), nm.element("b")
    assert d.dual.minus(d.mapping[top], d.mapping[c]) == d.mapping[b]


def test_double_dual_trivial():
    assert double_dual_isomorphism(boolean_difference(0)).ok
