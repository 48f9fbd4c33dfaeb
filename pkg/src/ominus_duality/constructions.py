"""Builders for standard (-)-algebras and an exhaustive enumerator."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .algebra import OminusAlgebra, validate_ominus_algebra
from .order import DistLattice, Poset, cap_check


def boolean_difference(n: int) -> OminusAlgebra:
    """Powerset of ``n`` atoms with set difference."""
    if n < 0:
        raise ValueError("atom count must be non-negative")
    cap_check(1 << n, 32, "Boolean algebra")
    L = DistLattice.boolean(n)
    size = 1 << n
    return OminusAlgebra(L, [[a & ~b for b in range(size)] for a in range(size)], f"boolean{n}")


def mv_chain(n: int) -> OminusAlgebra:
    """The ``n``-element Lukasiewicz chain ``0 < 1/(n-1) < ... < 1`` with truncated difference."""
    if n < 2:
        raise ValueError("an MV chain needs at least 2 elements")
    cap_check(n, 64, "MV chain")
    if n == 3:
        labels = ["0", "h", "1"]
    else:
        labels = ["0"] + [f"h{k}" for k in range(1, n - 1)] + ["1"]
    L = DistLattice.chain(n, labels)
    return OminusAlgebra(L, [[max(a - b, 0) for b in range(n)] for a in range(n)], f"L{n}")


# -- disconnected rotation of a finite Goedel chain ---------------------------

@dataclass(frozen=True, order=True)
class RotationElement:
    """``(sign, payload)`` with the payload stored as a depth: 0 is the top of the chain."""

    sign: int
    depth: int

    @property
    def payload(self) -> int:
        return -self.depth

    def __str__(self) -> str:
        return f"({self.sign},{self.payload})"


def goedel_implies(a: int, b: int) -> int:
    """Brouwerian implication on the non-positive integers."""
    return 0 if a <= b else b


def rotation_leq(x: RotationElement, y: RotationElement) -> bool:
    if x.sign != y.sign:
        return x.sign < y.sign
    if x.sign == 1:
        return x.payload <= y.payload
    return y.payload <= x.payload


def rotation_times(x: RotationElement, y: RotationElement) -> RotationElement:
    (j, a), (k, b) = (x.sign, x.payload), (y.sign, y.payload)
    if j == k == 1:
        return RotationElement(1, -min(a, b))
    if j == k == 0:
        return RotationElement(0, 0)
    if k < j:
        return RotationElement(0, -goedel_implies(a, b))
    return RotationElement(0, -goedel_implies(b, a))


def rotation_implies(x: RotationElement, y: RotationElement, literal: bool = False) -> RotationElement:
    """Residual of :func:`rotation_times`.

    The case ``j = k = 0`` is ``(1, b => a)``; ``literal=True`` gives the
    sign-0 variant, which is not a residual (see the tests).
    """
    (j, a), (k, b) = (x.sign, x.payload), (y.sign, y.payload)
    if j == k == 1:
        return RotationElement(1, -goedel_implies(a, b))
    if j == k == 0:
        return RotationElement(0 if literal else 1, -goedel_implies(b, a))
    if k < j:
        return RotationElement(0, -min(a, b))
    return RotationElement(1, 0)


def rotation_elements(k: int) -> list[RotationElement]:
    """The ``2k`` elements in ascending order."""
    return [RotationElement(0, d) for d in range(k)] + [RotationElement(1, d) for d in reversed(range(k))]


def disconnected_rotation(k: int, labels=None) -> OminusAlgebra:
    """The ``2k``-element nilpotent minimum chain with ``a (-) b = a . (b -> (0,0))``."""
    if k < 1:
        raise ValueError("the Goedel chain needs at least one element")
    cap_check(2 * k, 64, "disconnected rotation")
    els = rotation_elements(k)
    pos = {e: n for n, e in enumerate(els)}
    bottom = RotationElement(0, 0)
    L = DistLattice(Poset.from_leq(len(els), lambda p, q: rotation_leq(els[p], els[q]),
                                   labels or [str(e) for e in els]))
    table = [[pos[rotation_times(x, rotation_implies(y, bottom))] for y in els] for x in els]
    return OminusAlgebra(L, table, f"NM{2 * k}")


def nm4() -> OminusAlgebra:
    """The 4-element nilpotent minimum chain ``bot < c < b < top``."""
    return disconnected_rotation(2, ["bot", "c", "b", "top"])


# -- enumeration ----------------------------------------------------------------

def enumerate_ominus(L: DistLattice) -> Iterator[OminusAlgebra]:
    """Every (-)-structure on ``L``, in lexicographic order of the flattened table.

    Values are chosen on join-irreducible by meet-irreducible pairs subject
    to ``j - m <= j``, monotone in ``j`` and antitone in ``m``; each choice
    is extended by ``a - b = join{j - m : j <= a, b <= m}`` and kept only if
    it passes full validation.
    """
    cap_check(L.size, 8, "lattice for enumeration")
    J, M = L.irreducibles
    cells = [(j, m) for j in J for m in M]
    seed: dict[tuple[int, int], int] = {}
    found = []

    def admissible(j: int, m: int, v: int) -> bool:
        if not L.leq(v, j):
            return False
        for (j2, m2), w in seed.items():
            if L.leq(j2, j) and L.leq(m, m2) and not L.leq(w, v):
                return False
            if L.leq(j, j2) and L.leq(m2, m) and not L.leq(v, w):
                return False
        return True

    def emit():
        n = L.size
        table = [[L.join_all(seed[(j, m)] for j in J for m in M if L.leq(j, a) and L.leq(b, m))
                  for b in range(n)] for a in range(n)]
        if validate_ominus_algebra(L, table).ok:
            found.append(table)

    def go(k: int):
        if k == len(cells):
            emit()
            return
        j, m = cells[k]
        for v in range(L.size):
            if admissible(j, m, v):
                seed[(j, m)] = v
                go(k + 1)
                del seed[(j, m)]

    go(0)
    found.sort(key=lambda t: [v for row in t for v in row])
    for n, table in enumerate(found):
        yield OminusAlgebra(L, table, f"enum{n}", check=False)


def count_ominus(L: DistLattice, mv_only: bool = False) -> int:
    from .algebra import is_mv_algebra
    return sum(1 for A in enumerate_ominus(L) if not mv_only or is_mv_algebra(A)[0])


def corpus() -> list[OminusAlgebra]:
    """Boolean algebras with 0-3 atoms, MV chains of length 2-8, rotations of chains 1-5."""
    return ([boolean_difference(n) for n in range(4)] + [mv_chain(n) for n in range(2, 9)]
            + [disconnected_rotation(k) for k in range(1, 6)])
