"""Walk through the three-element MV chain and its dual space."""

from ominus_duality import (double_dual_isomorphism, extended_dual, is_mv_algebra, is_mv_space,
                            mv_chain, validate_ominus_space)

A = mv_chain(3)
print(f"{A.name}: elements {list(A.labels)}")
for a in range(A.size):
    print("  ", "  ".join(f"{A.labels[a]}-{A.labels[b]}={A.labels[A.minus(a, b)]}" for b in range(A.size)))

# the dual lives on the meet-irreducibles
S = extended_dual(A)
print(f"\ndual has {S.X.size} points")
print("  i    :", {x: S.i[x] for x in range(S.X.size)})
print("  plus :", dict(sorted(S.plus.items())))
print("  star :", dict(sorted(S.star.items())))
print("\naxioms:", "ok" if validate_ominus_space(S).ok else "broken")

print("MV on the algebra side:", is_mv_algebra(A)[0])
print("MV on the space side:  ", is_mv_space(S)[0])

# the complex algebra of the dual gives A back
print("double dual isomorphic:", double_dual_isomorphism(A).ok)
