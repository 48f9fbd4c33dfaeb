"""Maps between dual spaces and the homomorphisms they induce."""

from ominus_duality import (SpaceMorphism, dual_hom, extended_dual, mv_chain, nm4, validate_algebra_hom,
                            validate_space_morphism)
from ominus_duality.morphisms import order_preserving_maps

spaces = {"NM4": extended_dual(nm4()), "L3": extended_dual(mv_chain(3))}

for src, tgt in [("NM4", "L3"), ("L3", "NM4"), ("L3", "L3")]:
    S, T = spaces[src], spaces[tgt]
    print(f"order-preserving maps dual({src}) -> dual({tgt}):")
    for f in order_preserving_maps(S.X, T.X):
        m = SpaceMorphism(S, T, f)
        space_side = validate_space_morphism(m)
        algebra_side = validate_algebra_hom(dual_hom(m))
        reason = "" if space_side.ok else f"  fails {space_side.failures()[0].name}"
        print(f"  {f}: morphism {space_side.ok}, dual is a homomorphism {algebra_side.ok}{reason}")
