import pytest

from ominus_duality.algebra import (check_mv_equations, check_supervariety, is_mv_algebra,
                                    validate_ominus_algebra)
from ominus_duality.constructions import (RotationElement, boolean_difference, count_ominus,
                                          disconnected_rotation, enumerate_ominus, goedel_implies,
                                          mv_chain, nm4, rotation_elements, rotation_implies,
                                          rotation_leq, rotation_times)
from ominus_duality.errors import SizeCap
from ominus_duality.order import DistLattice
import oracles


def test_boolean_difference():
    assert boolean_difference(0).size == 1
    B1 = boolean_difference(1)
    assert B1.minus(1, 1) == 0 and B1.minus(1, 0) == 1
    B2 = boolean_difference(2)
    p, q = B2.element("p"), B2.element("q")
    assert B2.minus(p, q) == p
    for n in range(4):
        assert is_mv_algebra(boolean_difference(n))[0]
    with pytest.raises(SizeCap):
        boolean_difference(6)


def test_mv_chain():
    assert mv_chain(2).table == boolean_difference(1).table
    L3 = mv_chain(3)
    assert L3.minus(2, 1) == 1 and L3.minus(1, 1) == 0
    L4 = mv_chain(4)
    assert L4.minus(2, 1) == 1 and L4.minus(1, 2) == 0 and L4.minus(3, 1) == 2
    for n in range(2, 12):
        assert is_mv_algebra(mv_chain(n))[0]
    with pytest.raises(ValueError):
        mv_chain(1)


def test_nm4_rows():
    A = nm4()
    bot, c, b, top = (A.element(s) for s in ("bot", "c", "b", "top"))
    assert [A.minus(top, x) for x in (bot, c, b, top)] == [top, b, c, bot]
    assert A.minus(b, c) == b and A.minus(b, b) == bot and A.minus(c, c) == bot


def test_rotation_negation():
    bot = RotationElement(0, 0)
    for k in range(1, 6):
        for e in rotation_elements(k):
            assert rotation_implies(e, bot) == RotationElement(1 - e.sign, e.depth)


def test_literal_implication_is_not_a_residual():
    els = rotation_elements(2)

    def residual_ok(imp):
        return all(rotation_leq(rotation_times(x, y), z) == rotation_leq(x, imp(y, z))
                   for x in els for y in els for z in els)

    assert residual_ok(rotation_implies)
    assert not residual_ok(lambda y, z: rotation_implies(y, z, literal=True))


def test_rotation_order_and_labels():
    els = rotation_elements(3)
    assert [str(e) for e in els] == ["(0,0)", "(0,-1)", "(0,-2)", "(1,-2)", "(1,-1)", "(1,0)"]
    assert all(rotation_leq(a, b) for a, b in zip(els, els[1:]))
    assert goedel_implies(-1, 0) == 0 and goedel_implies(0, -1) == -1


@pytest.mark.parametrize("k", range(1, 7))
def test_rotation_supervariety(k):
    A = disconnected_rotation(k)
    assert A.size == 2 * k
    assert validate_ominus_algebra(A.lattice, A.table).ok
    assert check_supervariety(A).ok
    assert check_mv_equations(A)["iii"].ok == (k == 1)


def test_enumeration_counts():
    assert count_ominus(DistLattice.chain(2)) == 1
    assert count_ominus(DistLattice.chain(3)) == 5
    assert count_ominus(DistLattice.chain(3), mv_only=True) == 1


@pytest.mark.parametrize("L", [DistLattice.chain(2), DistLattice.chain(3), DistLattice.chain(4),
                               DistLattice.boolean(2)], ids=["c2", "c3", "c4", "b2"])
def test_enumeration_matches_brute_force(L):
    leq = L.poset.matrix()
    got = [[list(r) for r in A.table] for A in enumerate_ominus(L)]
    assert got == oracles.all_tables(leq)
    for A in enumerate_ominus(L):
        assert validate_ominus_algebra(L, A.table).ok


def test_enumeration_cap():
    with pytest.raises(SizeCap):
        next(enumerate_ominus(DistLattice.chain(9)))
