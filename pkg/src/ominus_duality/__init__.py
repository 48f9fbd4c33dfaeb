"""Finite extended Priestley duality for (-)-algebras.

A (-)-algebra is a bounded distributive lattice with a binary operation
that behaves like truncated difference.  Its dual is a poset of prime
filters with an order-reversing map ``i`` and two partial operations ``+``
and ``*``.  The package builds both sides, checks their axioms, moves
between them, and decides membership in the MV variety on either side.
"""

from .algebra import (OminusAlgebra, check_mv_equations, check_supervariety, find_isomorphism,
                      is_mv_algebra, validate_ominus_algebra)
from .complex import (ComplexAlgebra, complex_algebra, double_dual_isomorphism, dual_algebra,
                      verify_complex_properties)
from .constructions import (boolean_difference, corpus, disconnected_rotation, enumerate_ominus,
                            mv_chain, nm4)
from .errors import DualityError
from .morphisms import (AlgebraHom, SpaceMorphism, check_morphism_duality, dual_hom,
                        validate_algebra_hom, validate_space_morphism)
from .order import DistLattice, Poset, downset_lattice
from .report import Check, Report
from .space import (OminusSpace, check_dual_supervariety, check_expansion_and_unit, check_mv6_dual,
                    check_rdop, extended_dual, is_mv_space, validate_ominus_space)

__all__ = [
    "AlgebraHom", "Check", "ComplexAlgebra", "DistLattice", "DualityError", "OminusAlgebra",
    "OminusSpace", "Poset", "Report", "SpaceMorphism", "boolean_difference",
    "check_dual_supervariety", "check_expansion_and_unit", "check_morphism_duality",
    "check_mv6_dual", "check_mv_equations", "check_rdop", "check_supervariety",
    "complex_algebra", "corpus", "disconnected_rotation", "double_dual_isomorphism",
    "downset_lattice", "dual_algebra", "dual_hom", "enumerate_ominus", "extended_dual",
    "find_isomorphism", "is_mv_algebra", "is_mv_space", "mv_chain", "nm4",
    "validate_algebra_hom", "validate_ominus_algebra", "validate_ominus_space",
    "validate_space_morphism", "verify_complex_properties",
]
