import pytest

from ominus_duality.algebra import OminusAlgebra
from ominus_duality.complex import dual_algebra
from ominus_duality.morphisms import (AlgebraHom, SpaceMorphism, check_morphism_duality,
                                      check_subspace_inclusion, compose, compose_homs, dual_hom,
                                      induced_subspace, order_preserving_maps,
                                      validate_algebra_hom, validate_space_morphism)
from ominus_duality.order import Poset
from ominus_duality.space import extended_dual


def test_identity(l3, nm):
    for A in (l3, nm):
        S = extended_dual(A)
        m = SpaceMorphism(S, S, range(S.size))
        assert validate_space_morphism(m).ok
        assert dual_hom(m).h == tuple(range(dual_algebra(S).size))
        assert check_morphism_duality(m).agree


def test_collapse_to_point(l3, chain2):
    S, T = extended_dual(l3), extended_dual(chain2)
    m = SpaceMorphism(S, T, (0, 0))
    h = dual_hom(m)
    assert h.h == (0, 2)
    v = check_morphism_duality(m)
    assert v.agree and v.is_morphism


def test_constant_map_not_equivariant(nm):
    S = extended_dual(nm)
    r = validate_space_morphism(SpaceMorphism(S, S, (0, 0, 0)))
    assert not r["i_equivariant"].ok


def test_self_maps_of_l3(l3):
    S = extended_dual(l3)
    maps = list(order_preserving_maps(S.X, S.X))
    assert maps == [(0, 0), (0, 1), (1, 1)]
    verdicts = [check_morphism_duality(SpaceMorphism(S, S, f)).is_morphism for f in maps]
    assert verdicts == [False, True, False]


def test_order_preserving_maps_count():
    P = Poset.chain(3)
    assert len(list(order_preserving_maps(P, P))) == 10
    assert len(list(order_preserving_maps(Poset.antichain(2), P))) == 9


def test_algebra_hom_examples(l3, chain2):
    assert validate_algebra_hom(AlgebraHom(l3, l3, (0, 1, 2))).ok
    r = validate_algebra_hom(AlgebraHom(l3, chain2, (0, 0, 1)))
    assert not r["ominus"].ok
    # h(1 - h) = h(h) = 1 but h(1) - h(h) = 1 - 1 = 0
    r = validate_algebra_hom(AlgebraHom(l3, chain2, (0, 1, 1)))
    assert r["ominus"].witness == (2, 1)


def test_no_hom_from_l3_onto_chain2(l3, chain2):
    # the dual side: neither point of the L3 dual is fixed by i
    S, T = extended_dual(l3), extended_dual(chain2)
    for f in order_preserving_maps(T.X, S.X):
        v = check_morphism_duality(SpaceMorphism(T, S, f))
        assert not v.is_morphism and v.agree


def test_subspace_helper(l3):
    S = extended_dual(l3)
    assert induced_subspace(S, [0]) is None
    full = induced_subspace(S, [0, 1])
    assert check_subspace_inclusion(full, S, [0, 1]).ok


def test_subspace_helper_detects_changed_plus(nm):
    S = extended_dual(nm)
    sub = induced_subspace(S, [1])
    assert check_subspace_inclusion(sub, S, [1]).ok
    sub.plus[(0, 0)] = 0
    assert check_subspace_inclusion(sub, S, [1]).ok
    bad = extended_dual(nm)
    bad.plus[(1, 1)] = 2
    assert not check_subspace_inclusion(bad, S, [0, 1, 2])["same_plus"].ok


def test_fixed_point_inclusion_matches_duality(nm, chain2):
    S = extended_dual(nm)
    sub = induced_subspace(S, [1])
    m = SpaceMorphism(sub, S, (1,))
    assert check_subspace_inclusion(sub, S, [1]).ok == check_morphism_duality(m).is_morphism
    h = dual_hom(m)
    C = dual_algebra(S).lattice
    assert [h.h[k] for k in range(C.size)] == [0, 0, 1, 1]


def test_composition_and_functoriality(nm):
    S = extended_dual(nm)
    morphisms = [SpaceMorphism(S, S, f) for f in order_preserving_maps(S.X, S.X)
                 if validate_space_morphism(SpaceMorphism(S, S, f)).ok]
    B = dual_algebra(S)
    for f in morphisms:
        for g in morphisms:
            gf = compose(g, f)
            assert validate_space_morphism(gf).ok
            lhs = dual_hom(gf, B, B)
            rhs = compose_homs(dual_hom(f, B, B), dual_hom(g, B, B))
            assert lhs.h == rhs.h


def test_bad_shapes(l3):
    S = extended_dual(l3)
    with pytest.raises(ValueError):
        SpaceMorphism(S, S, (0,))
    with pytest.raises(ValueError):
        AlgebraHom(l3, l3, (0, 1, 7))
