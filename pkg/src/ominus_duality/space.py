"""Extended dual spaces ``(X, i, +, *)`` and their first-order axioms.

A point of the dual of a finite ``(-)``-algebra is a meet-irreducible
element ``m``; its prime ideal is ``down(m)`` and its prime filter is the
complement.  ``+`` and ``*`` are partial operations stored as dictionaries
keyed by pairs of points, so their domains are explicit data.
"""

from __future__ import annotations

from itertools import product
from typing import Mapping

from .algebra import OminusAlgebra
from .errors import InternalInvariantBroken, NoWitness, SpaceInvalid
from .order import Poset, bits, dual_poset, hat, kappa_inv, mask_of, validate_poset
from .report import Check, Report
from .residuation import pi_flat, sigma_sharp

Pair = tuple[int, int]


class OminusSpace:
    """A candidate ``(-)``-space.  Nothing is checked on construction."""

    def __init__(self, X: Poset, i, plus: Mapping[Pair, int], star: Mapping[Pair, int], name: str = ""):
        self.X = X
        self.i = tuple(i)
        self.plus = dict(plus)
        self.star = dict(star)
        self.name = name

    @property
    def size(self) -> int:
        return self.X.size

    @property
    def labels(self) -> tuple[str, ...]:
        return self.X.labels

    def plus_domain(self) -> set[Pair]:
        """The domain ``{(x, y) : y <= i(x)}`` determined by ``i``."""
        X = self.X
        return {(x, y) for x in range(X.size) for y in bits(X.down[self.i[x]])}

    def star_domain(self) -> set[Pair]:
        """The domain ``{(x, y) : i(x) not <= y}`` determined by ``i``."""
        X = self.X
        return {(x, y) for x in range(X.size) for y in range(X.size) if not X.leq(self.i[x], y)}

    @classmethod
    def from_plus(cls, X: Poset, plus: Mapping[Pair, int], i=None, name: str = "") -> "OminusSpace":
        """Build a space from ``+`` alone.

        ``i(x)`` defaults to the largest ``y`` with ``(x, y)`` in the domain of
        ``+``; ``*`` is computed from ``+`` by the infimum law where the
        infimum exists.
        """
        if i is None:
            i = []
            for x in range(X.size):
                col = mask_of(y for (a, y) in plus if a == x)
                top = greatest(X, col)
                if top is None:
                    raise NoWitness(f"no largest partner for point {x}", witness=x)
                i.append(top)
        space = cls(X, i, plus, {}, name)
        star = {}
        for x, y in sorted(space.star_domain()):
            value = inf(X, _star_candidates(space, x, y))
            if value is not None:
                star[(x, y)] = value
        space.star = star
        return space

    def __repr__(self) -> str:
        return f"OminusSpace({self.name or 'unnamed'}, points={self.size})"


# -- order helpers -------------------------------------------------------------

def greatest(X: Poset, mask: int):
    for a in bits(mask):
        if mask & ~X.down[a] == 0:
            return a
    return None


def least(X: Poset, mask: int):
    for a in bits(mask):
        if mask & ~X.up[a] == 0:
            return a
    return None


def inf(X: Poset, mask: int):
    """Greatest lower bound of a set of points, or ``None`` if it has none."""
    lower = X.full
    for a in bits(mask):
        lower &= X.down[a]
    return greatest(X, lower)


def sup(X: Poset, mask: int):
    upper = X.full
    for a in bits(mask):
        upper &= X.up[a]
    return least(X, upper)


def _star_candidates(S: OminusSpace, x: int, y: int) -> int:
    X = S.X
    return mask_of(z for (a, w), z in S.plus.items() if a == x and not X.leq(w, y))


# -- the extended dual ---------------------------------------------------------

def extended_dual(A: OminusAlgebra) -> OminusSpace:
    """Dual space of ``A``, with ``+`` and ``*`` read off prime filters.

    ``F(x+y) = {a : a (-) b in F(x) for every b in I(y)}`` and
    ``F(x*y) = {a : a (-) b in F(x) for some b in F(y)}``.
    """
    L = A.lattice
    M = L.irreducibles[1]
    X = dual_poset(L)
    n, full = L.size, L.poset.full
    t, ng = A.table, A.neg_table
    ideal = [L.poset.down[m] for m in M]
    filt = [full & ~I for I in ideal]
    point_of = {I: k for k, I in enumerate(ideal)}

    def locate(prime_ideal: int, what: str) -> int:
        try:
            return point_of[prime_ideal]
        except KeyError:
            raise InternalInvariantBroken(
                f"{what} is not a prime filter; is the input a valid (-)-algebra?") from None

    i = [locate(mask_of(a for a in range(n) if not ideal[x] >> ng[a] & 1), f"F_i({x})")
         for x in range(X.size)]
    plus, star = {}, {}
    for x, y in product(range(X.size), repeat=2):
        if X.leq(y, i[x]):
            F = mask_of(a for a in range(n)
                        if all(filt[x] >> t[a][b] & 1 for b in bits(ideal[y])))
            plus[(x, y)] = locate(full & ~F, f"F_({x}+{y})")
        if not X.leq(i[x], y):
            F = mask_of(a for a in range(n)
                        if any(filt[x] >> t[a][b] & 1 for b in bits(filt[y])))
            star[(x, y)] = locate(full & ~F, f"F_({x}*{y})")
    return OminusSpace(X, i, plus, star, name=f"dual({A.name})" if A.name else "")


def residual_plus(A: OminusAlgebra, x: int, y: int) -> int:
    """``x + y`` as ``mu^-1(mu(x) (-)^sigma# mu(y))``, via the residuation oracle."""
    M = A.lattice.irreducibles[1]
    m = sigma_sharp(A.ominus, M[x], M[y])
    if m not in M:
        raise InternalInvariantBroken(f"residual at ({x},{y}) is not meet-irreducible", witness=(x, y))
    return M.index(m)


def residual_star(A: OminusAlgebra, x: int, y: int) -> int:
    """``x * y`` as ``nu^-1(nu(x) (-)^pi-flat nu(y))``, via the residuation oracle."""
    L = A.lattice
    M = L.irreducibles[1]
    nus = [kappa_inv(L, m) for m in M]
    j = pi_flat(A.ominus, nus[x], nus[y])
    if j not in nus:
        raise InternalInvariantBroken(f"co-residual at ({x},{y}) is not join-irreducible", witness=(x, y))
    return nus.index(j)


def domain_characterizations(A: OminusAlgebra, S: OminusSpace | None = None) -> dict[str, set[Pair]]:
    """Each of the equivalent descriptions of dom(+) and dom(*), as pair sets."""
    S = S if S is not None else extended_dual(A)
    L = A.lattice
    M = L.irreducibles[1]
    k = len(M)
    nus = [kappa_inv(L, m) for m in M]
    hats = [hat(L, a) for a in range(L.size)]
    neg = A.neg_table
    pts = list(product(range(k), repeat=2))
    return {
        "plus_by_order": S.plus_domain(),
        "plus_by_hats": {(x, y) for x, y in pts
                         if all(hats[neg[a]] >> x & 1 or hats[a] >> y & 1 for a in range(L.size))},
        "plus_by_residual": {(x, y) for x, y in pts if sigma_sharp(A.ominus, M[x], M[y]) != L.top},
        "star_by_order": S.star_domain(),
        "star_by_hats": {(x, y) for x, y in pts
                         if any(hats[neg[a]] >> x & 1 and hats[a] >> y & 1 for a in range(L.size))},
        "star_by_negation": {(x, y) for x, y in pts if L.leq(nus[x], A.neg(nus[y]))},
    }


# -- axioms --------------------------------------------------------------------

def _structure(S: OminusSpace) -> Check:
    n = S.size
    if len(S.i) != n:
        return Check("structure", False, ("i", len(S.i)), "i must have one entry per point")
    for name, table in (("plus", S.plus), ("star", S.star)):
        for (x, y), z in table.items():
            if not (0 <= x < n and 0 <= y < n and 0 <= z < n):
                return Check("structure", False, (name, x, y, z), "point index out of range")
    bad = next((x for x, v in enumerate(S.i) if not 0 <= v < n), None)
    if bad is not None:
        return Check("structure", False, ("i", bad), "point index out of range")
    return Check("structure", True)


def _domain_check(name: str, declared: set, required: set) -> Check:
    if declared == required:
        return Check(name, True)
    missing = sorted(required - declared)
    extra = sorted(declared - required)
    witness = ("missing", missing[0]) if missing else ("extra", extra[0])
    return Check(name, False, witness, f"{len(missing)} missing, {len(extra)} extra")


def _down_closed(X: Poset, pairs: set) -> tuple | None:
    for x, y in sorted(pairs):
        for x2 in bits(X.down[x]):
            for y2 in bits(X.down[y]):
                if (x2, y2) not in pairs:
                    return ((x, y), (x2, y2))
    return None


def _monotone(X: Poset, table: Mapping[Pair, int]) -> tuple | None:
    items = sorted(table.items())
    for (x, y), z in items:
        for (x2, y2), z2 in items:
            if X.leq(x2, x) and X.leq(y2, y) and not X.leq(z2, z):
                return ((x2, y2), (x, y))
    return None


def validate_ominus_space(S: OminusSpace) -> Report:
    """Check the finite content of the seven (-)-space axioms."""
    X = S.X
    checks = [Check("poset", validate_poset(X).ok)]
    st = _structure(S)
    checks.append(st)
    if not (checks[0].ok and st.ok):
        return Report("ominus_space", tuple(checks))
    n, i = S.size, S.i
    rev = next(((x, y) for x in range(n) for y in bits(X.up[x]) if not X.leq(i[y], i[x])), None)
    checks.append(Check("i_order_reversing", rev is None, rev))
    dplus, dstar = set(S.plus), set(S.star)
    checks.append(_domain_check("plus_domain", dplus, S.plus_domain()))
    checks.append(_domain_check("star_domain", dstar, S.star_domain()))
    closed = _down_closed(X, dplus) or _down_closed(X, dstar)
    checks.append(Check("domains_down_closed", closed is None, closed))
    mp = _monotone(X, S.plus)
    checks.append(Check("plus_monotone", mp is None, mp))
    ms = _monotone(X, S.star)
    checks.append(Check("star_monotone", ms is None, ms))

    law = None
    for (x, y), z in sorted(S.star.items()):
        cand = _star_candidates(S, x, y)
        m = inf(X, cand)
        if m is None:
            law = ((x, y), tuple(bits(cand)), "no infimum")
            break
        if m != z:
            law = ((x, y), z, m)
            break
    checks.append(Check("star_plus_law", law is None, law, "x*y = inf{x+w : w <= i(x), w not <= y}"))

    chain = codomain = adjoint = None
    for x in range(n):
        below = [w for w in bits(X.down[i[x]]) if (x, w) in S.plus]
        image = sorted({S.plus[(x, w)] for w in below})
        if chain is None:
            chain = next(((x, a, b) for a in image for b in image
                          if not (X.leq(a, b) or X.leq(b, a))), None)
        if codomain is None:
            codomain = next(((x, w) for w in below if not X.leq(x, S.plus[(x, w)])), None)
        if adjoint is None:
            for z in bits(X.up[x]):
                ok = any(all(X.leq(S.plus[(x, y)], z) == X.leq(y, k) for y in below) for k in below)
                if not ok:
                    adjoint = (x, z)
                    break
    checks.append(Check("translation_chain", chain is None, chain))
    checks.append(Check("translation_codomain", codomain is None, codomain, "x <= x+w"))
    checks.append(Check("translation_adjoint", adjoint is None, adjoint))
    return Report("ominus_space", tuple(checks))


def check_expansion_and_unit(S: OminusSpace) -> Report:
    X = S.X
    expand = next(((x, y) for (x, y), z in sorted(S.plus.items()) if not X.leq(x, z)), None)
    units: dict[int, int] = {}
    missing = None
    for x in range(S.size):
        y = next((y for y in range(S.size) if S.plus.get((x, y)) == x), None)
        if y is None and missing is None:
            missing = x
        elif y is not None:
            units[x] = y
    return Report("expansion_and_unit", (
        Check("expanding", expand is None, expand, "x <= x+y"),
        Check("unit", missing is None, missing, "x + y_x = x for some y_x"),
    ), extras={"unit_witnesses": units})


def check_rdop(S: OminusSpace) -> Report:
    X, n = S.X, S.size
    bad = None
    for x in range(n):
        part = [w for w in range(n) if (x, w) in S.plus]
        for w1 in part:
            for w2 in part:
                ok = any(X.leq(w1, w0) and X.leq(w2, w0)
                         and S.plus[(x, w0)] in (S.plus[(x, w1)], S.plus[(x, w2)]) for w0 in part)
                if not ok:
                    bad = (x, w1, w2)
                    break
            if bad:
                break
        if bad:
            break
    return Report("rdop", (Check("rdop", bad is None, bad),))


def lx_upper_adjoint(S: OminusSpace, x: int, z: int) -> int:
    """``k(x, z)``: supremum of ``{y <= i(x) : x + y <= z}``."""
    X = S.X
    if not X.leq(x, z):
        raise ValueError(f"need x <= z, got x={x}, z={z}")
    cand = mask_of(y for y in bits(X.down[S.i[x]]) if (x, y) in S.plus and X.leq(S.plus[(x, y)], z))
    if not cand:
        raise NoWitness(f"no y below i({x}) with {x}+y <= {z}", witness=(x, z))
    k = sup(X, cand)
    if k is None:
        raise NoWitness(f"set {list(bits(cand))} has no supremum", witness=(x, z))
    return k


def check_dual_supervariety(S: OminusSpace, associativity: str = "subterms") -> Report:
    """Dual conditions (i)-(iv).

    For associativity the default antecedent asks that every subterm of
    ``x + (y + z) = (x + y) + z`` is defined.  ``associativity="literal"``
    instead uses the printed antecedent ``(x, y+x), (y, z), (x+y, z), (x, y)``
    (plus ``(y, x)`` so that ``y+x`` exists); a conclusion with an undefined
    side then counts as a failure.
    """
    if associativity not in ("subterms", "literal"):
        raise ValueError("associativity must be 'subterms' or 'literal'")
    X, n, i, p = S.X, S.size, S.i, S.plus
    invol = next((x for x in range(n) if i[i[x]] != x), None)
    comm = next(((x, y) for (x, y) in sorted(p) if (y, x) in p and p[(x, y)] != p[(y, x)]), None)
    assoc = None
    for x, y, z in product(range(n), repeat=3):
        if (x, y) not in p or (y, z) not in p or (p[(x, y)], z) not in p:
            continue
        if associativity == "literal":
            if (y, x) not in p or (x, p[(y, x)]) not in p:
                continue
            if (x, p[(y, z)]) not in p:
                assoc = (x, y, z)
                break
        elif (x, p[(y, z)]) not in p:
            continue
        if p[(x, p[(y, z)])] != p[(p[(x, y)], z)]:
            assoc = (x, y, z)
            break
    cores = None
    for x, y, z in product(range(n), repeat=3):
        if (i[x], y) in p and (z, y) in p:
            if X.leq(p[(i[x], y)], i[z]) != X.leq(p[(z, y)], x):
                cores = (x, y, z)
                break
    return Report("dual_supervariety", (
        Check("i", invol is None, invol, "i(i(x)) = x"),
        Check("ii", comm is None, comm, "x+y = y+x"),
        Check("iii", assoc is None, assoc, "x+(y+z) = (x+y)+z"),
        Check("iv", cores is None, cores, "i(x)+y <= i(z) iff z+y <= x"),
    ))


def check_mv6_dual(S: OminusSpace) -> Report:
    """Condition (v): ``z + w <= x * y`` with ``w`` not below ``y`` forces ``z <= x``.

    The witness is ``(x, x', y, w)`` with ``x'`` the point called ``z`` above.
    """
    X, n, p = S.X, S.size, S.plus
    bad = None
    for x, z in product(range(n), repeat=2):
        if X.leq(z, x):
            continue
        for y in range(n):
            if (x, y) not in S.star:
                continue
            s = S.star[(x, y)]
            w = next((w for w in range(n)
                      if not X.leq(w, y) and (z, w) in p and X.leq(p[(z, w)], s)), None)
            if w is not None:
                bad = (x, z, y, w)
                break
        if bad:
            break
    return Report("mv6_dual", (Check("v", bad is None, bad, "z+w <= x*y, w not<= y => z <= x"),))


def is_mv_space(S: OminusSpace, associativity: str = "subterms") -> tuple[bool, Check | None]:
    vr = validate_ominus_space(S)
    if not vr.ok:
        raise SpaceInvalid(f"not a (-)-space: {vr.first_failure()}", vr)
    sv = check_dual_supervariety(S, associativity)
    if not sv.ok:
        return False, sv.first_failure()
    mv = check_mv6_dual(S)
    if not mv.ok:
        return False, mv.first_failure()
    return True, None


def find_space_isomorphism(S1: OminusSpace, S2: OminusSpace) -> tuple[int, ...] | None:
    """A point bijection preserving order, ``i``, ``+`` and ``*``, if one exists."""
    n = S1.size
    if n != S2.size or len(S1.plus) != len(S2.plus) or len(S1.star) != len(S2.star):
        return None
    X1, X2 = S1.X, S2.X

    def sig(S, x):
        X = S.X
        return (bin(X.down[x]).count("1"), bin(X.up[x]).count("1"), S.i[x] == x)

    sig2 = [sig(S2, y) for y in range(n)]
    phi: list[int] = []
    used = [False] * n

    def consistent(x: int) -> bool:
        fx = phi[x]
        for a in range(x + 1):
            fa = phi[a]
            if X1.leq(a, x) != X2.leq(fa, fx) or X1.leq(x, a) != X2.leq(fx, fa):
                return False
        return True

    def finish() -> bool:
        if any(phi[S1.i[x]] != S2.i[phi[x]] for x in range(n)):
            return False
        for table1, table2 in ((S1.plus, S2.plus), (S1.star, S2.star)):
            for (x, y), z in table1.items():
                if table2.get((phi[x], phi[y])) != phi[z]:
                    return False
        return True

    def search(x: int) -> bool:
        if x == n:
            return finish()
        for y in range(n):
            if used[y] or sig2[y] != sig(S1, x):
                continue
            phi.append(y)
            used[y] = True
            if consistent(x) and search(x + 1):
                return True
            phi.pop()
            used[y] = False
        return False

    return tuple(phi) if search(0) else None
