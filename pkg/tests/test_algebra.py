import pytest

from ominus_duality.algebra import (OminusAlgebra, check_mv_equations, check_supervariety,
                                    find_isomorphism, is_mv_algebra, negation, oplus,
                                    validate_ominus_algebra)
from ominus_duality.errors import InvalidStructure
from ominus_duality.order import DistLattice


def test_valid_examples(l3, bool2):
    assert validate_ominus_algebra(l3.lattice, l3.table).ok
    assert validate_ominus_algebra(bool2.lattice, bool2.table).ok


def test_projection_fails_one_right():
    L = DistLattice.chain(3)
    r = validate_ominus_algebra(L, [[a] * 3 for a in range(3)])
    assert r["normal.one_right"].witness == 1
    with pytest.raises(InvalidStructure):
        OminusAlgebra(L, [[a] * 3 for a in range(3)])


def test_non_lattice_reported():
    L = DistLattice.from_pairs(2, [(0, 0), (1, 1)])
    r = validate_ominus_algebra(L, [[0, 0], [0, 0]])
    assert not r.ok and r.names() == ["lattice"]


def test_negation(l3, nm, bool2):
    assert negation(l3, 1) == 1
    for A in (l3, nm, bool2):
        assert negation(A, A.lattice.bottom) == A.lattice.top
        assert negation(A, A.lattice.top) == A.lattice.bottom


def test_negation_reverses_order(nm, l3, bool2):
    for A in (nm, l3, bool2):
        L = A.lattice
        for a in range(A.size):
            for b in range(A.size):
                assert A.neg(L.join(a, b)) == L.meet(A.neg(a), A.neg(b))
                assert A.neg(L.meet(a, b)) == L.join(A.neg(a), A.neg(b))


def test_oplus(l3, nm):
    assert oplus(l3, 1, 1) == 2
    assert all(oplus(l3, 2, b) == 2 for b in range(3))
    c = nm.element("c")
    assert oplus(nm, c, c) == c


def test_mv_equations(l3, bool2, nm):
    assert check_mv_equations(l3).ok
    assert check_mv_equations(bool2).ok
    r = check_mv_equations(nm)
    assert r["i"].ok and r["ii"].ok
    assert r["iii"].witness == (nm.element("b"), nm.element("c"))


def test_supervariety(l3, nm, weird3):
    assert check_supervariety(l3).ok
    assert check_supervariety(nm).ok
    r = check_supervariety(weird3)
    assert not r["iv"].ok
    x, y, z = r["iv"].witness
    L = weird3.lattice
    assert L.leq(x, weird3.oplus(y, z)) != L.leq(weird3.minus(x, z), y)
    # at (1, h, h): 1 - h = h <= h, yet h + h = h so 1 is not below h + h
    assert weird3.minus(2, 1) == 1 and weird3.oplus(1, 1) == 1
    assert L.leq(weird3.minus(2, 1), 1) and not L.leq(2, weird3.oplus(1, 1))


def test_is_mv(l3, bool2, nm):
    assert is_mv_algebra(l3) == (True, None)
    assert is_mv_algebra(bool2)[0]
    ok, cert = is_mv_algebra(nm)
    assert not ok and cert.name == "iii"


def test_find_isomorphism(bool2):
    L = DistLattice.boolean(2)
    swapped = [[0] * 4 for _ in range(4)]
    perm = [0, 2, 1, 3]
    for a in range(4):
        for b in range(4):
            swapped[perm[a]][perm[b]] = perm[bool2.table[a][b]]
    B = OminusAlgebra(L, swapped)
    assert find_isomorphism(bool2, B) is not None
    assert find_isomorphism(bool2, OminusAlgebra(DistLattice.chain(4), [[max(a - b, 0) for b in range(4)]
                                                                         for a in range(4)])) is None
