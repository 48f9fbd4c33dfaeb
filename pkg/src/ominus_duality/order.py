"""Finite posets, bounded distributive lattices and Birkhoff duality.

Elements are dense indices ``0..n-1``.  A relation is stored twice as bit
rows: ``up[a]`` has bit ``b`` set iff ``a <= b`` and ``down[b]`` has bit
``a`` set iff ``a <= b``.  Subsets of a poset (down-sets in particular) are
plain ``int`` bit masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import NotIrreducible, SizeCap, size_cap
from .report import Check, Report

DOWNSET_SOURCE_LIMIT = 20


def bits(mask: int) -> Iterable[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class Poset:
    """Finite relation candidate; :func:`validate_poset` decides if it is an order."""

    __slots__ = ("size", "up", "down", "labels", "__dict__")

    def __init__(self, size: int, up: Sequence[int], labels: Sequence[str] | None = None):
        if len(up) != size:
            raise ValueError("need one bit row per element")
        self.size = size
        self.up = tuple(up)
        down = [0] * size
        for a in range(size):
            for b in bits(self.up[a]):
                down[b] |= 1 << a
        self.down = tuple(down)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(size))

    # -- constructors -------------------------------------------------------
    @classmethod
    def from_pairs(cls, size: int, pairs: Iterable[tuple[int, int]], labels=None) -> "Poset":
        up = [0] * size
        for a, b in pairs:
            up[a] |= 1 << b
        return cls(size, up, labels)

    @classmethod
    def from_matrix(cls, matrix: Sequence[Sequence[bool]], labels=None) -> "Poset":
        n = len(matrix)
        up = [mask_of(j for j in range(n) if matrix[i][j]) for i in range(n)]
        return cls(n, up, labels)

    @classmethod
    def from_leq(cls, size: int, leq, labels=None) -> "Poset":
        up = [mask_of(j for j in range(size) if leq(i, j)) for i in range(size)]
        return cls(size, up, labels)

    @classmethod
    def chain(cls, n: int, labels=None) -> "Poset":
        return cls.from_leq(n, lambda a, b: a <= b, labels)

    @classmethod
    def antichain(cls, n: int, labels=None) -> "Poset":
        return cls.from_leq(n, lambda a, b: a == b, labels)

    # -- queries ------------------------------------------------------------
    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.size) for b in bits(self.up[a])]

    def matrix(self) -> list[list[bool]]:
        return [[self.leq(a, b) for b in range(self.size)] for a in range(self.size)]

    def is_downset(self, mask: int) -> bool:
        return all(self.down[a] & ~mask == 0 for a in bits(mask))

    def downset_closure(self, mask: int) -> int:
        out = 0
        for a in bits(mask):
            out |= self.down[a]
        return out

    def upset_closure(self, mask: int) -> int:
        out = 0
        for a in bits(mask):
            out |= self.up[a]
        return out

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Covering pairs ``(a, b)`` with ``a < b`` and nothing strictly between."""
        out = []
        for a in range(self.size):
            strict_up = self.up[a] & ~(1 << a)
            for b in bits(strict_up):
                between = strict_up & self.down[b] & ~(1 << b)
                if not between:
                    out.append((a, b))
        return tuple(out)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        lc: list[list[int]] = [[] for _ in range(self.size)]
        for a, b in self.covers:
            lc[b].append(a)
        return tuple(tuple(x) for x in lc)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        uc: list[list[int]] = [[] for _ in range(self.size)]
        for a, b in self.covers:
            uc[a].append(b)
        return tuple(tuple(x) for x in uc)

    def linear_extension(self) -> list[int]:
        """Elements sorted so that ``a < b`` implies ``a`` comes first."""
        return sorted(range(self.size), key=lambda a: (bin(self.down[a]).count("1"), a))

    def induced(self, elements: Sequence[int], labels=None) -> "Poset":
        elements = list(elements)
        if labels is None:
            labels = [self.labels[e] for e in elements]
        return Poset.from_leq(len(elements), lambda i, j: self.leq(elements[i], elements[j]), labels)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poset) and self.size == other.size and self.up == other.up

    def __hash__(self) -> int:
        return hash((self.size, self.up))

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, covers={list(self.covers)})"


def validate_poset(p: Poset) -> Report:
    n = p.size
    refl = next(((a,) for a in range(n) if not p.leq(a, a)), None)
    anti = next(((a, b) for a in range(n) for b in range(a + 1, n)
                 if p.leq(a, b) and p.leq(b, a)), None)
    trans = None
    for a in range(n):
        for b in bits(p.up[a]):
            missing = p.up[b] & ~p.up[a]
            if missing:
                trans = (a, b, next(iter(bits(missing))))
                break
        if trans:
            break
    labels_ok = len(p.labels) == n and len(set(p.labels)) == n
    return Report("poset", (
        Check("reflexivity", refl is None, refl),
        Check("antisymmetry", anti is None, anti),
        Check("transitivity", trans is None, trans),
        Check("labels", labels_ok, None if labels_ok else tuple(p.labels)),
    ))


class DistLattice:
    """Bounded lattice candidate over a poset with cached join/meet tables.

    Missing joins or meets are stored as ``None``; :func:`validate_dist_lattice`
    reports them.  Operations elsewhere in the package assume a valid lattice.
    """

    def __init__(self, poset: Poset):
        self.poset = poset
        n = poset.size
        self.size = n
        self.join_table = tuple(tuple(self._lub(a, b) for b in range(n)) for a in range(n))
        self.meet_table = tuple(tuple(self._glb(a, b) for b in range(n)) for a in range(n))
        full = poset.full
        self.bottom = next((a for a in range(n) if poset.up[a] == full), None)
        self.top = next((a for a in range(n) if poset.down[a] == full), None)

    def _lub(self, a: int, b: int):
        ub = self.poset.up[a] & self.poset.up[b]
        for u in bits(ub):
            if ub & ~self.poset.up[u] == 0:
                return u
        return None

    def _glb(self, a: int, b: int):
        lb = self.poset.down[a] & self.poset.down[b]
        for u in bits(lb):
            if lb & ~self.poset.down[u] == 0:
                return u
        return None

    # -- constructors -------------------------------------------------------
    @classmethod
    def chain(cls, n: int, labels=None) -> "DistLattice":
        return cls(Poset.chain(n, labels))

    @classmethod
    def boolean(cls, atoms: int) -> "DistLattice":
        """Powerset of ``atoms`` points; element index equals the subset mask."""
        n = 1 << atoms
        names = "pqrstuvw"
        def label(m):
            if m == 0:
                return "0"
            if m == n - 1 and atoms > 1:
                return "1"
            return "".join(names[i] if atoms <= len(names) else f"a{i}" for i in bits(m))
        if atoms == 1:
            labels = ["0", "1"]
        else:
            labels = [label(m) for m in range(n)]
        return cls(Poset.from_leq(n, lambda a, b: a & ~b == 0, labels))

    @classmethod
    def from_pairs(cls, size: int, pairs, labels=None) -> "DistLattice":
        return cls(Poset.from_pairs(size, pairs, labels))

    # -- operations ---------------------------------------------------------
    @property
    def labels(self) -> tuple[str, ...]:
        return self.poset.labels

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join_all(self, elements: Iterable[int]) -> int:
        out = self.bottom
        for e in elements:
            out = self.join_table[out][e]
        return out

    def meet_all(self, elements: Iterable[int]) -> int:
        out = self.top
        for e in elements:
            out = self.meet_table[out][e]
        return out

    def elements(self) -> range:
        return range(self.size)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @cached_property
    def irreducibles(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        p = self.poset
        J = tuple(a for a in range(self.size) if a != self.bottom and len(p.lower_covers[a]) == 1)
        M = tuple(a for a in range(self.size) if a != self.top and len(p.upper_covers[a]) == 1)
        return J, M

    def __repr__(self) -> str:
        return f"DistLattice(size={self.size}, labels={list(self.labels)})"


def validate_dist_lattice(L: DistLattice) -> Report:
    pr = validate_poset(L.poset)
    n = L.size
    checks = [Check("partial_order", pr.ok, None if pr.ok else pr.first_failure().name + str(pr.first_failure().witness))]
    if not pr.ok:
        return Report("dist_lattice", tuple(checks))
    no_join = next(((a, b) for a in range(n) for b in range(n) if L.join_table[a][b] is None), None)
    no_meet = next(((a, b) for a in range(n) for b in range(n) if L.meet_table[a][b] is None), None)
    checks.append(Check("joins", no_join is None, no_join))
    checks.append(Check("meets", no_meet is None, no_meet))
    bounds_ok = n > 0 and L.bottom is not None and L.top is not None
    checks.append(Check("bounds", bounds_ok))
    dist = None
    if no_join is None and no_meet is None:
        J, Mt = L.join_table, L.meet_table
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if Mt[a][J[b][c]] != J[Mt[a][b]][Mt[a][c]]:
                        dist = (a, b, c)
                        break
                if dist:
                    break
            if dist:
                break
        checks.append(Check("distributivity", dist is None, dist))
    else:
        checks.append(Check("distributivity", False, None, "undefined without total join/meet"))
    return Report("dist_lattice", tuple(checks))


def irreducibles(L: DistLattice) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Join-irreducible and meet-irreducible element indices (ascending)."""
    return L.irreducibles


def kappa(L: DistLattice, j: int) -> int:
    """kappa(j) = join of all a with j not <= a."""
    J, _ = L.irreducibles
    if j not in J:
        raise NotIrreducible(f"{L.labels[j]!r} is not join-irreducible", witness=j)
    return L.join_all(a for a in range(L.size) if not L.leq(j, a))


def kappa_inv(L: DistLattice, m: int) -> int:
    """Inverse of :func:`kappa`: meet of all b with b not <= m."""
    _, M = L.irreducibles
    if m not in M:
        raise NotIrreducible(f"{L.labels[m]!r} is not meet-irreducible", witness=m)
    return L.meet_all(b for b in range(L.size) if not L.leq(b, m))


class DownsetLattice(DistLattice):
    """Lattice of down-sets of a source poset; element ``k`` is ``masks[k]``."""

    def __init__(self, source: Poset, masks: Sequence[int]):
        self.source = source
        self.masks = tuple(masks)
        self._index = {m: k for k, m in enumerate(self.masks)}
        n = len(self.masks)
        labels = [self._label(m) for m in self.masks]
        poset = Poset.from_leq(n, lambda a, b: self.masks[a] & ~self.masks[b] == 0, labels)
        # skip the generic LUB search: union and intersection are the operations
        self.poset = poset
        self.size = n
        self.join_table = tuple(tuple(self._index[self.masks[a] | self.masks[b]] for b in range(n)) for a in range(n))
        self.meet_table = tuple(tuple(self._index[self.masks[a] & self.masks[b]] for b in range(n)) for a in range(n))
        self.bottom = self._index[0]
        self.top = self._index[source.full]

    def _label(self, m: int) -> str:
        return "{" + ",".join(self.source.labels[i] for i in bits(m)) + "}"

    def index_of(self, mask: int) -> int:
        return self._index[mask]

    def mask(self, k: int) -> int:
        return self.masks[k]


def downsets(p: Poset) -> list[int]:
    """All down-sets of ``p`` as masks, ascending by integer value."""
    found = [0]
    for e in p.linear_extension():
        below = p.down[e] & ~(1 << e)
        found += [d | 1 << e for d in found if below & ~d == 0]
    return sorted(found)


def downset_lattice(p: Poset) -> DownsetLattice:
    limit = DOWNSET_SOURCE_LIMIT
    if p.size > limit:
        raise SizeCap(f"down-set lattice of a {p.size}-point poset exceeds the {limit}-point limit")
    return DownsetLattice(p, downsets(p))


@dataclass(frozen=True)
class DualPoint:
    """A point of the finite dual, identified with a meet-irreducible.

    The four standard presentations of the same point are exposed as
    accessors: the meet-irreducible ``mu``, the join-irreducible ``nu``, the
    prime ideal ``ideal`` and the prime filter ``filter`` (both masks over
    lattice elements).
    """

    lattice: DistLattice
    index: int

    @property
    def mu(self) -> int:
        return self.lattice.irreducibles[1][self.index]

    @property
    def nu(self) -> int:
        return kappa_inv(self.lattice, self.mu)

    @property
    def ideal(self) -> int:
        return self.lattice.poset.down[self.mu]

    @property
    def filter(self) -> int:
        return self.lattice.poset.full & ~self.ideal


def dual_points(L: DistLattice) -> list[DualPoint]:
    return [DualPoint(L, k) for k in range(len(L.irreducibles[1]))]


def dual_poset(L: DistLattice) -> Poset:
    """Meet-irreducibles of ``L`` with the induced order, named ``m0, m1, ...``."""
    M = L.irreducibles[1]
    return L.poset.induced(M, labels=[f"m{k}" for k in range(len(M))])


def hat(L: DistLattice, a: int) -> int:
    """Mask over dual points ``x`` (indices into M) with ``a`` not below ``mu(x)``."""
    M = L.irreducibles[1]
    return mask_of(k for k, m in enumerate(M) if not L.leq(a, m))


def birkhoff_map(L: DistLattice, a: int) -> int:
    """Mask over positions in J of the join-irreducibles below ``a``."""
    J = L.irreducibles[0]
    return mask_of(k for k, j in enumerate(J) if L.leq(j, a))


def cap_check(n: int, default: int, what: str) -> None:
    cap = size_cap(default)
    if n > cap:
        raise SizeCap(f"{what} of size {n} exceeds the cap {cap}")
