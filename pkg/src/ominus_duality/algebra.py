"""Distributive lattices with a normal (1, op) double quasioperator ``(-)``.

Derived operations: negation ``~a = 1 (-) a`` and ``a (+) b = ~(~a (-) b)``.
The MV test works on the ``(-)``-reduct alone.
"""

from __future__ import annotations

from functools import cached_property
from typing import Sequence

from .errors import InternalInvariantBroken, InvalidStructure
from .order import DistLattice, validate_dist_lattice
from .report import Check, Report
from .residuation import BinaryOp, validate_dqo_1op


def validate_ominus_algebra(L: DistLattice, op: BinaryOp | Sequence[Sequence[int]]) -> Report:
    lr = validate_dist_lattice(L)
    if not lr.ok:
        f = lr.first_failure()
        return Report("ominus_algebra", (Check("lattice", False, (f.name, f.witness)),))
    if not isinstance(op, BinaryOp):
        op = BinaryOp(L, op)
    t, n = op.table, L.size
    dqo = validate_dqo_1op(op)
    checks = [Check("lattice", True)]
    checks += [Check(f"dqo.{c.name}", c.ok, c.witness, c.detail) for c in dqo]
    zero_left = next((a for a in range(n) if t[L.bottom][a] != L.bottom), None)
    one_right = next((a for a in range(n) if t[a][L.top] != L.bottom), None)
    unit = next((a for a in range(n) if t[a][L.bottom] != a), None)
    checks.append(Check("normal.zero_left", zero_left is None, zero_left, "0 (-) a = 0"))
    checks.append(Check("normal.one_right", one_right is None, one_right, "a (-) 1 = 0"))
    checks.append(Check("right_unit", unit is None, unit, "a (-) 0 = a"))
    return Report("ominus_algebra", tuple(checks))


class OminusAlgebra:
    """A validated ``(-)``-algebra.  Construction raises :class:`InvalidStructure`."""

    def __init__(self, lattice: DistLattice, table: Sequence[Sequence[int]], name: str = "",
                 *, check: bool = True):
        self.lattice = lattice
        self.ominus = BinaryOp(lattice, table)
        self.name = name
        if check:
            report = validate_ominus_algebra(lattice, self.ominus)
            if not report.ok:
                raise InvalidStructure(f"not a (-)-algebra: {report.first_failure()}", report)

    @property
    def table(self) -> tuple[tuple[int, ...], ...]:
        return self.ominus.table

    @property
    def size(self) -> int:
        return self.lattice.size

    @property
    def labels(self) -> tuple[str, ...]:
        return self.lattice.labels

    def minus(self, a: int, b: int) -> int:
        return self.ominus.table[a][b]

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        top = self.lattice.top
        return tuple(self.ominus.table[top][a] for a in range(self.size))

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    @cached_property
    def oplus_table(self) -> tuple[tuple[int, ...], ...]:
        t, ng = self.ominus.table, self.neg_table
        return tuple(tuple(ng[t[ng[a]][b]] for b in range(self.size)) for a in range(self.size))

    def oplus(self, a: int, b: int) -> int:
        return self.oplus_table[a][b]

    def element(self, label: str) -> int:
        return self.lattice.index(label)

    def __repr__(self) -> str:
        return f"OminusAlgebra({self.name or 'unnamed'}, size={self.size})"


def negation(A: OminusAlgebra, a: int) -> int:
    return A.neg(a)


def oplus(A: OminusAlgebra, a: int, b: int) -> int:
    return A.oplus(a, b)


def check_mv_equations(A: OminusAlgebra) -> Report:
    """The three identities that cut MV-algebras out of (-)-algebras."""
    L, t, ng = A.lattice, A.table, A.neg_table
    n = A.size
    assoc = next(((a, b, c) for a in range(n) for b in range(n) for c in range(n)
                  if t[t[a][b]][c] != t[a][ng[t[ng[b]][c]]]), None)
    comm = next(((a, b) for a in range(n) for b in range(n) if t[ng[a]][b] != t[ng[b]][a]), None)
    mv6 = next(((a, b) for a in range(n) for b in range(n) if L.meet(a, b) != t[a][t[a][b]]), None)
    return Report("mv_equations", (
        Check("i", assoc is None, assoc, "(a-b)-c = a-~(~b-c)"),
        Check("ii", comm is None, comm, "~a-b = ~b-a"),
        Check("iii", mv6 is None, mv6, "a^b = a-(a-b)"),
    ))


def check_supervariety(A: OminusAlgebra) -> Report:
    """Involution, commutativity and associativity of (+), and co-residuation.

    Co-residuation is tested as the raw biconditional
    ``x <= y (+) z  iff  x (-) z <= y`` over all triples.
    """
    L, t, ng, op = A.lattice, A.table, A.neg_table, A.oplus_table
    n = A.size
    invol = next((a for a in range(n) if ng[ng[a]] != a), None)
    comm = next(((a, b) for a in range(n) for b in range(n) if op[a][b] != op[b][a]), None)
    assoc = next(((a, b, c) for a in range(n) for b in range(n) for c in range(n)
                  if op[op[a][b]][c] != op[a][op[b][c]]), None)
    cores = next(((x, y, z) for x in range(n) for y in range(n) for z in range(n)
                  if L.leq(x, op[y][z]) != L.leq(t[x][z], y)), None)
    return Report("supervariety", (
        Check("i", invol is None, invol, "~~a = a"),
        Check("ii", comm is None, comm, "a+b = b+a"),
        Check("iii", assoc is None, assoc, "(a+b)+c = a+(b+c)"),
        Check("iv", cores is None, cores, "x <= y+z iff x-z <= y"),
    ))


def is_mv_algebra(A: OminusAlgebra) -> tuple[bool, Check | None]:
    """MV membership via the three identities; the certificate is the first failure."""
    eq = check_mv_equations(A)
    if eq.ok:
        sv = check_supervariety(A)
        if not sv.ok:
            raise InternalInvariantBroken(f"MV identities hold but {sv.first_failure()} fails")
        return True, None
    return False, eq.first_failure()


def find_isomorphism(A: OminusAlgebra, B: OminusAlgebra) -> tuple[int, ...] | None:
    """An element bijection ``A -> B`` preserving order and ``(-)``, or ``None``.

    Lattice isomorphisms are determined by their restriction to
    join-irreducibles, so the search backtracks over order-isomorphisms of
    the join-irreducible posets (candidates pruned by up/down degree) and
    extends each one by joins.
    """
    from .order import cap_check

    LA, LB = A.lattice, B.lattice
    cap_check(max(LA.size, LB.size), 64, "isomorphism search")
    JA, JB = LA.irreducibles[0], LB.irreducibles[0]
    if LA.size != LB.size or len(JA) != len(JB):
        return None

    def profile(L, J, j):
        return (sum(L.leq(k, j) for k in J), sum(L.leq(j, k) for k in J))

    prof_b = [profile(LB, JB, j) for j in JB]
    phi: list[int] = []

    def extend() -> tuple[int, ...] | None:
        image = tuple(LB.join_all(JB[phi[k]] for k, j in enumerate(JA) if LA.leq(j, a))
                      for a in range(LA.size))
        if len(set(image)) != LA.size:
            return None
        ta, tb = A.table, B.table
        n = LA.size
        if any(image[ta[a][b]] != tb[image[a]][image[b]] for a in range(n) for b in range(n)):
            return None
        return image

    def search(k: int):
        if k == len(JA):
            return extend()
        want = profile(LA, JA, JA[k])
        for c in range(len(JB)):
            if c in phi or prof_b[c] != want:
                continue
            if all(LA.leq(JA[p], JA[k]) == LB.leq(JB[phi[p]], JB[c])
                   and LA.leq(JA[k], JA[p]) == LB.leq(JB[c], JB[phi[p]]) for p in range(k)):
                phi.append(c)
                found = search(k + 1)
                if found is not None:
                    return found
                phi.pop()
        return None

    return search(0)
