"""Complex algebras of (-)-spaces and the double-dual isomorphism."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .algebra import OminusAlgebra
from .errors import SpaceInvalid
from .order import DownsetLattice, bits, downset_lattice, downsets, hat, kappa_inv
from .report import Check, Report
from .space import OminusSpace, extended_dual, validate_ominus_space


def f_plus_mask(S: OminusSpace, u: int, v: int) -> int:
    """Points ``x`` with some ``w`` outside ``v``, ``(x, w)`` in dom(+) and ``x + w`` in ``u``."""
    out = 0
    for (x, w), z in S.plus.items():
        if not v >> w & 1 and u >> z & 1:
            out |= 1 << x
    return out


def f_star_mask(S: OminusSpace, u: int, v: int) -> int:
    """Points ``x`` with ``(x, y)`` in dom(*) and ``x * y`` in ``u`` for every ``y`` in ``v``."""
    out = 0
    for x in range(S.size):
        if all((x, y) in S.star and u >> S.star[(x, y)] & 1 for y in bits(v)):
            out |= 1 << x
    return out


@dataclass(frozen=True, eq=False)
class ComplexAlgebra:
    C: DownsetLattice
    f_plus: tuple[tuple[int, ...], ...]
    f_star: tuple[tuple[int, ...], ...]
    source: OminusSpace

    def clopen(self, k: int) -> bool:
        """Every down-set of a finite space is clopen."""
        return True


def complex_algebra(S: OminusSpace, check: bool = True) -> ComplexAlgebra:
    if check:
        vr = validate_ominus_space(S)
        if not vr.ok:
            raise SpaceInvalid(f"not a (-)-space: {vr.first_failure()}", vr)
    C = downset_lattice(S.X)
    n = C.size
    plus_rows, star_rows = [], []
    for a in range(n):
        pr, sr = [], []
        for b in range(n):
            u, v = C.masks[a], C.masks[b]
            p, s = f_plus_mask(S, u, v), f_star_mask(S, u, v)
            if not (S.X.is_downset(p) and S.X.is_downset(s)):
                raise SpaceInvalid(f"complex operation at ({a},{b}) is not a down-set")
            pr.append(C.index_of(p))
            sr.append(C.index_of(s))
        plus_rows.append(tuple(pr))
        star_rows.append(tuple(sr))
    return ComplexAlgebra(C, tuple(plus_rows), tuple(star_rows), S)


def dual_algebra(S: OminusSpace, name: str = "") -> OminusAlgebra:
    """The (-)-algebra of down-sets with ``a (-) b = f_plus(a, b)``."""
    ca = complex_algebra(S)
    return OminusAlgebra(ca.C, ca.f_plus, name or (f"dual({S.name})" if S.name else ""))


def verify_complex_properties(S: OminusSpace) -> Report:
    """Exhaustively check the structural properties of ``f_plus`` and ``f_star``.

    Works on any candidate space, valid or not, so that broken spaces can be
    diagnosed.
    """
    X = S.X
    full = X.full
    D = downsets(X)
    fp = {(u, v): f_plus_mask(S, u, v) for u in D for v in D}
    fs = {(u, v): f_star_mask(S, u, v) for u in D for v in D}

    def first(pred):
        return next((w for w in pred), None)

    pairs = list(product(D, repeat=2))
    triples = list(product(D, repeat=3))
    bad_p = first((u, v) for u, v in pairs if not X.is_downset(fp[(u, v)]))
    bad_s = first((u, v) for u, v in pairs if not X.is_downset(fs[(u, v)]))
    p_first = first((u1, u2, v) for u1, u2, v in triples if fp[(u1 | u2, v)] != fp[(u1, v)] | fp[(u2, v)]) \
        or first(("empty", v) for v in D if fp[(0, v)] != 0)
    p_second = first((u, v1, v2) for u, v1, v2 in triples if fp[(u, v1 & v2)] != fp[(u, v1)] | fp[(u, v2)]) \
        or first(("empty", u) for u in D if fp[(u, full)] != 0)
    # binary meets only: f*(X, v) = X fails whenever dom(*) is partial, as 1 (-) b = ~b != 1
    s_first = first((u1, u2, v) for u1, u2, v in triples if fs[(u1 & u2, v)] != fs[(u1, v)] & fs[(u2, v)])
    s_second = first((u, v1, v2) for u, v1, v2 in triples if fs[(u, v1 | v2)] != fs[(u, v1)] & fs[(u, v2)]) \
        or first(("empty", u) for u in D if fs[(u, 0)] != full)
    below = first((u, v) for u, v in pairs if fp[(u, v)] & ~fs[(u, v)])
    contraction = first((u, v1, v2) for u, v1, v2 in triples
                        if fp[(u, v1)] & fp[(u, v2)] != fp[(u, v1 | v2)])
    unit = first(u for u in D if fp[(u, 0)] != u)
    agree = first((u, v) for u, v in pairs if v != 0 and fp[(u, v)] != fs[(u, v)])
    return Report("complex_properties", (
        Check("plus_well_defined", bad_p is None, bad_p),
        Check("plus_joins_first", p_first is None, p_first),
        Check("plus_meets_to_joins_second", p_second is None, p_second),
        Check("star_well_defined", bad_s is None, bad_s),
        Check("star_meets_first", s_first is None, s_first),
        Check("star_joins_to_meets_second", s_second is None, s_second),
        Check("plus_below_star", below is None, below),
        Check("contraction", contraction is None, contraction, "f+(u,v1) ^ f+(u,v2) = f+(u, v1 v v2)"),
        Check("right_unit", unit is None, unit, "f+(u, 0) = u"),
        Check("plus_star_agree", agree is None, agree, "b != 0 => f+(a,b) = f*(a,b)"),
    ))


@dataclass(frozen=True)
class DoubleDual:
    mapping: tuple[int, ...]
    report: Report
    dual: OminusAlgebra

    @property
    def ok(self) -> bool:
        return self.report.ok


def double_dual_isomorphism(A: OminusAlgebra) -> DoubleDual:
    """Check that ``a -> hat(a)`` is an isomorphism from ``A`` onto its double dual."""
    L = A.lattice
    S = extended_dual(A)
    ca = complex_algebra(S)
    C = ca.C
    B = OminusAlgebra(C, ca.f_plus, f"dual(dual({A.name}))" if A.name else "", check=False)
    n = L.size
    h = tuple(C.index_of(hat(L, a)) for a in range(n))
    bij = len(set(h)) == n == C.size
    bounds = h[L.bottom] == C.bottom and h[L.top] == C.top
    joins = next(((a, b) for a in range(n) for b in range(n) if h[L.join(a, b)] != C.join(h[a], h[b])), None)
    meets = next(((a, b) for a in range(n) for b in range(n) if h[L.meet(a, b)] != C.meet(h[a], h[b])), None)
    hom = next(((a, b) for a in range(n) for b in range(n) if h[A.minus(a, b)] != ca.f_plus[h[a]][h[b]]), None)
    M = L.irreducibles[1]
    X = S.X
    gen = None
    for x, y in product(range(X.size), repeat=2):
        down_x = X.down[x]
        not_up_y = X.full & ~X.up[y]
        lhs = C.masks[ca.f_plus[C.index_of(down_x)][C.index_of(not_up_y)]]
        rhs = hat(L, A.minus(kappa_inv(L, M[x]), M[y]))
        if lhs != rhs:
            gen = (x, y)
            break
    report = Report("double_dual", (
        Check("bijection", bij, None if bij else h),
        Check("bounds", bounds),
        Check("joins", joins is None, joins),
        Check("meets", meets is None, meets),
        Check("ominus", hom is None, hom, "hat(a - b) = f+(hat a, hat b)"),
        Check("generators", gen is None, gen, "f+(down x, not-up y) = hat(nu(x) - mu(y))"),
    ))
    return DoubleDual(h, report, B)
