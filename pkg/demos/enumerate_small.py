"""Count the (-)-operations on small lattices and how many of them are MV."""

from ominus_duality import DistLattice, enumerate_ominus, extended_dual, is_mv_algebra, is_mv_space

lattices = {f"chain{n}": DistLattice.chain(n) for n in range(1, 5)}
lattices["boolean2"] = DistLattice.boolean(2)

for name, L in lattices.items():
    found = list(enumerate_ominus(L))
    mv = [A for A in found if is_mv_algebra(A)[0]]
    agree = all(is_mv_algebra(A)[0] == is_mv_space(extended_dual(A))[0] for A in found)
    print(f"{name:9} {len(found):3} operations, {len(mv)} MV, sides agree: {agree}")
