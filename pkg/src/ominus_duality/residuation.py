"""Adjoints, residuals and guarded co-residuals on finite lattices.

Everything here is computed by exhaustive scan over the lattice, without
precomputed tables, so it can serve as an independent oracle for the
dual-space constructions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import DomainViolation, NotJoinPreserving, NotMeetPreserving, PreconditionViolated
from .order import DistLattice
from .report import Check, Report

UnaryMap = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class BinaryOp:
    lattice: DistLattice
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.lattice.size
        table = tuple(tuple(int(v) for v in row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table):
            raise ValueError(f"operation table must be {n}x{n}")
        bad = next(((a, b) for a in range(n) for b in range(n) if not 0 <= table[a][b] < n), None)
        if bad is not None:
            raise ValueError(f"table entry at {bad} is not an element index")
        object.__setattr__(self, "table", table)

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def residuable(self) -> bool:
        """dqo laws plus 0 (-) a = 0: every right translation preserves all joins."""
        L = self.lattice
        return validate_dqo_1op(self).ok and all(self.table[L.bottom][a] == L.bottom for a in L.elements())


def _join_witness(L1: DistLattice, L2: DistLattice, f: Sequence[int]):
    if f[L1.bottom] != L2.bottom:
        return ("empty join", L1.bottom)
    for a in range(L1.size):
        for b in range(a + 1, L1.size):
            if f[L1.join(a, b)] != L2.join(f[a], f[b]):
                return (a, b)
    return None


def _meet_witness(L1: DistLattice, L2: DistLattice, f: Sequence[int]):
    if f[L1.top] != L2.top:
        return ("empty meet", L1.top)
    for a in range(L1.size):
        for b in range(a + 1, L1.size):
            if f[L1.meet(a, b)] != L2.meet(f[a], f[b]):
                return (a, b)
    return None


def upper_adjoint(L1: DistLattice, L2: DistLattice, f: Sequence[int]) -> UnaryMap:
    """g(y) = join of {x : f(x) <= y}; requires ``f`` to preserve finite joins."""
    w = _join_witness(L1, L2, f)
    if w is not None:
        raise NotJoinPreserving(f"map does not preserve joins at {w}", witness=w)
    return tuple(L1.join_all(x for x in range(L1.size) if L2.leq(f[x], y)) for y in range(L2.size))


def lower_adjoint(L1: DistLattice, L2: DistLattice, f: Sequence[int]) -> UnaryMap:
    """g(x) = meet of {y : x <= f(y)}; requires ``f`` to preserve finite meets."""
    w = _meet_witness(L1, L2, f)
    if w is not None:
        raise NotMeetPreserving(f"map does not preserve meets at {w}", witness=w)
    return tuple(L1.meet_all(y for y in range(L1.size) if L2.leq(x, f[y])) for x in range(L2.size))


_DQO_LAWS = (
    ("meet_first", "(a^b)-c = (a-c)^(b-c)"),
    ("join_first", "(avb)-c = (a-c)v(b-c)"),
    ("meet_second", "a-(b^c) = (a-b)v(a-c)"),
    ("join_second", "a-(bvc) = (a-b)^(a-c)"),
)


def validate_dqo_1op(op: BinaryOp) -> Report:
    """Check the four distribution laws of a (1, op) double quasioperator."""
    L, t = op.lattice, op.table
    J, M = L.join_table, L.meet_table
    n = L.size
    found: dict[str, tuple] = {}
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if "meet_first" not in found and t[M[a][b]][c] != M[t[a][c]][t[b][c]]:
                    found["meet_first"] = (a, b, c)
                if "join_first" not in found and t[J[a][b]][c] != J[t[a][c]][t[b][c]]:
                    found["join_first"] = (a, b, c)
                if "meet_second" not in found and t[a][M[b][c]] != J[t[a][b]][t[a][c]]:
                    found["meet_second"] = (a, b, c)
                if "join_second" not in found and t[a][J[b][c]] != M[t[a][b]][t[a][c]]:
                    found["join_second"] = (a, b, c)
    return Report("dqo", tuple(Check(name, name not in found, found.get(name), law)
                               for name, law in _DQO_LAWS))


def sigma_sharp(op: BinaryOp, v: int, w: int) -> int:
    """Right residual: the largest ``u`` with ``u (-) w <= v``."""
    if not op.residuable:
        raise PreconditionViolated("operation is not a normal (1, op) double quasioperator")
    L = op.lattice
    return L.join_all(u for u in range(L.size) if L.leq(op.table[u][w], v))


def pi_flat(op: BinaryOp, u: int, w: int) -> int:
    """Guarded right co-residual: the least ``v`` with ``u <= v (-) w``.

    Only defined for ``u <= top (-) w``; raises :class:`DomainViolation`
    outside that interval.
    """
    if not op.residuable:
        raise PreconditionViolated("operation is not a normal (1, op) double quasioperator")
    L = op.lattice
    neg_w = op.table[L.top][w]
    if not L.leq(u, neg_w):
        raise DomainViolation(f"{L.labels[u]} is not below the negation of {L.labels[w]}", witness=(u, w))
    return L.meet_all(v for v in range(L.size) if L.leq(u, op.table[v][w]))


def translations(op: BinaryOp) -> tuple[list[UnaryMap], list[UnaryMap]]:
    """Left translations ``x -> a (-) x`` and right translations ``x -> x (-) b``."""
    n = op.lattice.size
    left = [tuple(op.table[a][x] for x in range(n)) for a in range(n)]
    right = [tuple(op.table[x][b] for x in range(n)) for b in range(n)]
    return left, right
