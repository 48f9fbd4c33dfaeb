"""Morphisms of (-)-spaces, (-)-homomorphisms, and the duality between them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .algebra import OminusAlgebra
from .complex import dual_algebra
from .errors import InternalInvariantBroken
from .order import Poset, mask_of
from .report import Check, Report
from .space import OminusSpace


@dataclass(frozen=True, eq=False)
class SpaceMorphism:
    source: OminusSpace
    target: OminusSpace
    f: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "f", tuple(self.f))
        if len(self.f) != self.source.size or not all(0 <= y < self.target.size for y in self.f):
            raise ValueError("point map has the wrong shape")

    def __call__(self, x: int) -> int:
        return self.f[x]

    def preimage(self, mask: int) -> int:
        return mask_of(x for x, y in enumerate(self.f) if mask >> y & 1)


@dataclass(frozen=True, eq=False)
class AlgebraHom:
    source: OminusAlgebra
    target: OminusAlgebra
    h: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(self.h))
        if len(self.h) != self.source.size or not all(0 <= b < self.target.size for b in self.h):
            raise ValueError("element map has the wrong shape")

    def __call__(self, a: int) -> int:
        return self.h[a]


def order_preserving_witness(P: Poset, Q: Poset, f: Sequence[int]):
    return next(((a, b) for a, b in P.pairs() if not Q.leq(f[a], f[b])), None)


def order_preserving_maps(P: Poset, Q: Poset) -> Iterator[tuple[int, ...]]:
    """All order-preserving maps ``P -> Q`` in lexicographic order."""
    f: list[int] = []

    def go(k: int):
        if k == P.size:
            yield tuple(f)
            return
        for y in range(Q.size):
            if all(Q.leq(f[a], y) for a in range(k) if P.leq(a, k)) and \
               all(Q.leq(y, f[a]) for a in range(k) if P.leq(k, a)):
                f.append(y)
                yield from go(k + 1)
                f.pop()

    yield from go(0)


def validate_space_morphism(m: SpaceMorphism) -> Report:
    """The three morphism conditions, each with its first counterexample.

    Condition 2 counts an undefined ``f(x) +2 f(y)`` as a failure.
    """
    S1, S2, f = m.source, m.target, m.f
    X1, X2 = S1.X, S2.X
    mono = order_preserving_witness(X1, X2, f)
    equivariant = next((x for x in range(S1.size) if f[S1.i[x]] != S2.i[f[x]]), None)
    lax = None
    for (x, y), z in sorted(S1.plus.items()):
        key = (f[x], f[y])
        if key not in S2.plus or not X2.leq(S2.plus[key], f[z]):
            lax = (x, y)
            break
    back = None
    for x in range(S1.size):
        for (fx, z), value in sorted(S2.plus.items()):
            if fx != f[x]:
                continue
            if not any(X2.leq(z, f[w]) and f[S1.plus[(x, w)]] == value
                       for (a, w) in S1.plus if a == x):
                back = (x, z)
                break
        if back is not None:
            break
    return Report("space_morphism", (
        Check("order_preserving", mono is None, mono),
        Check("i_equivariant", equivariant is None, equivariant, "f(i1 x) = i2 f(x)"),
        Check("plus_lax", lax is None, lax, "f(x) +2 f(y) <= f(x +1 y)"),
        Check("plus_back", back is None, back, "some w' with z <= f(w') and f(x +1 w') = f(x) +2 z"),
    ))


def dual_hom(m: SpaceMorphism, source: OminusAlgebra | None = None,
             target: OminusAlgebra | None = None) -> AlgebraHom:
    """Inverse image as a map from the dual algebra of the target to that of the source."""
    B2 = source or dual_algebra(m.target)
    B1 = target or dual_algebra(m.source)
    C1, C2 = B1.lattice, B2.lattice
    h = tuple(C1.index_of(m.preimage(C2.masks[k])) for k in range(C2.size))
    return AlgebraHom(B2, B1, h)


def validate_algebra_hom(hom: AlgebraHom) -> Report:
    A, B, h = hom.source, hom.target, hom.h
    LA, LB = A.lattice, B.lattice
    n = A.size
    pairs = list(product(range(n), repeat=2))
    join = next(((a, b) for a, b in pairs if h[LA.join(a, b)] != LB.join(h[a], h[b])), None)
    meet = next(((a, b) for a, b in pairs if h[LA.meet(a, b)] != LB.meet(h[a], h[b])), None)
    minus = next(((a, b) for a, b in pairs if h[A.minus(a, b)] != B.minus(h[a], h[b])), None)
    return Report("algebra_hom", (
        Check("bottom", h[LA.bottom] == LB.bottom),
        Check("top", h[LA.top] == LB.top),
        Check("joins", join is None, join),
        Check("meets", meet is None, meet),
        Check("ominus", minus is None, minus, "h(a - b) = h(a) - h(b)"),
    ))


@dataclass(frozen=True)
class DualityVerdict:
    space_side: Report
    algebra_side: Report

    @property
    def agree(self) -> bool:
        return self.space_side.ok == self.algebra_side.ok

    @property
    def is_morphism(self) -> bool:
        return self.space_side.ok


def check_morphism_duality(m: SpaceMorphism, strict: bool = True) -> DualityVerdict:
    """Decide the morphism conditions and the homomorphism conditions separately.

    With ``strict`` a disagreement raises :class:`InternalInvariantBroken`.
    """
    verdict = DualityVerdict(validate_space_morphism(m), validate_algebra_hom(dual_hom(m)))
    if strict and not verdict.agree:
        raise InternalInvariantBroken(
            f"space side says {verdict.space_side.ok}, algebra side says {verdict.algebra_side.ok}",
            witness=m.f)
    return verdict


def compose(g: SpaceMorphism, f: SpaceMorphism) -> SpaceMorphism:
    """``g after f``."""
    return SpaceMorphism(f.source, g.target, tuple(g.f[y] for y in f.f))


def compose_homs(k: AlgebraHom, h: AlgebraHom) -> AlgebraHom:
    """``k after h``."""
    return AlgebraHom(h.source, k.target, tuple(k.h[b] for b in h.h))


def induced_subspace(S: OminusSpace, points: Sequence[int], name: str = "") -> OminusSpace | None:
    """Restrict ``i``, ``+`` and ``*`` to ``points``; ``None`` if ``i`` leaves the subset."""
    points = list(points)
    pos = {x: k for k, x in enumerate(points)}
    if any(S.i[x] not in pos for x in points):
        return None
    X = S.X.induced(points)
    i = [pos[S.i[x]] for x in points]
    plus = {(pos[x], pos[y]): pos[z] for (x, y), z in S.plus.items() if x in pos and y in pos and z in pos}
    star = {(pos[x], pos[y]): pos[z] for (x, y), z in S.star.items() if x in pos and y in pos and z in pos}
    return OminusSpace(X, i, plus, star, name)


def check_subspace_inclusion(sub: OminusSpace, S: OminusSpace, embedding: Sequence[int]) -> Report:
    """Inclusion conditions for a subset of points: ``i`` and ``+`` are inherited.

    ``embedding`` must be an order embedding; the second condition asks that
    ``x +1 y = x +2 y`` on the domain of ``+1``.
    """
    e = tuple(embedding)
    embed = next(((a, b) for a in range(sub.size) for b in range(sub.size)
                  if sub.X.leq(a, b) != S.X.leq(e[a], e[b])), None)
    same_i = next((x for x in range(sub.size) if e[sub.i[x]] != S.i[e[x]]), None)
    same_plus = next(((x, y) for (x, y), z in sorted(sub.plus.items())
                      if S.plus.get((e[x], e[y])) != e[z]), None)
    return Report("subspace", (
        Check("order_embedding", embed is None, embed),
        Check("same_i", same_i is None, same_i, "i1(x) = i2(x)"),
        Check("same_plus", same_plus is None, same_plus, "x +1 y = x +2 y"),
    ))

