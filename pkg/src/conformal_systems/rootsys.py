"""Simply-laced root systems over the simple-root basis.

Roots are integer tuples of coefficients over the simple roots (Bourbaki
numbering).  The inner product is read off the Cartan matrix, normalized so
that every root has squared length 2.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import UnsupportedAlgebra

Root = tuple[int, ...]
Weight = tuple[Fraction, ...]

_MIN_RANK = {"A": 2, "D": 4, "E": 6}
_POSITIVE_COUNT = {
    "A": lambda n: n * (n + 1) // 2,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
}


@dataclass(frozen=True)
class AlgebraType:
    series: str
    rank: int

    def __post_init__(self):
        if self.series not in _MIN_RANK:
            raise UnsupportedAlgebra(
                f"type {self.series}{self.rank} is not simply laced (only A, D, E)"
            )
        if self.rank < _MIN_RANK[self.series]:
            raise UnsupportedAlgebra(
                f"{self.series}{self.rank}: rank must be >= {_MIN_RANK[self.series]}"
            )
        if self.series == "E" and self.rank > 8:
            raise UnsupportedAlgebra(f"E{self.rank} is not a finite type")

    @classmethod
    def parse(cls, label: str) -> "AlgebraType":
        m = re.fullmatch(r"\s*([A-Za-z])_?(\d+)\s*", label)
        if not m:
            raise UnsupportedAlgebra(f"cannot parse algebra label {label!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    @property
    def label(self) -> str:
        return f"{self.series}{self.rank}"

    def __str__(self):
        return self.label


def dynkin_edges(t: AlgebraType) -> list[tuple[int, int]]:
    """Edges of the Dynkin diagram, 0-based node indices in Bourbaki order."""
    n = t.rank
    if t.series == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.series == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    # E_n: 1-3-4-5-...-n with 2 attached to 4
    return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]


def cartan_matrix(t: AlgebraType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in dynkin_edges(t):
        c[i][j] = c[j][i] = -1
    return tuple(tuple(row) for row in c)


def height(root: Sequence[int]) -> int:
    return sum(root)


def root_key(root: Root):
    """Module-wide deterministic order.

    Positive roots by height, then lexicographically with alpha_1 first;
    negative roots after all positives, ordered like their negatives.
    """
    if height(root) > 0:
        return (0, height(root), tuple(-c for c in root))
    return (1, -height(root), tuple(root))


def add(a: Sequence, b: Sequence) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def neg(a: Sequence) -> tuple:
    return tuple(-x for x in a)


def scale(c, a: Sequence) -> tuple:
    return tuple(c * x for x in a)


@dataclass(frozen=True)
class RootSystem:
    type: AlgebraType
    cartan: tuple[tuple[int, ...], ...]
    simples: tuple[Root, ...]
    positives: tuple[Root, ...]
    gamma: Root
    rho: Weight
    _root_set: frozenset = field(repr=False, compare=False, default=frozenset())

    @property
    def rank(self) -> int:
        return self.type.rank

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        """All roots in module-wide order: positives, then negatives."""
        return self.positives + tuple(neg(r) for r in self.positives)

    def is_root(self, v: Sequence[int]) -> bool:
        return tuple(v) in self._root_set

    def inner(self, v: Sequence, w: Sequence):
        return inner(self, v, w)


def inner(rs: RootSystem, v: Sequence, w: Sequence):
    """Bilinear form (v, w) from the Cartan matrix, exact."""
    if len(v) != rs.rank or len(w) != rs.rank:
        raise ValueError(f"dimension mismatch: expected vectors of length {rs.rank}")
    c = rs.cartan
    total = 0
    for i, vi in enumerate(v):
        if vi:
            row = c[i]
            total += vi * sum(row[j] * wj for j, wj in enumerate(w) if wj)
    return total


def _close_positive_roots(cartan) -> list[Root]:
    # simply laced: for roots a != -b, a + b is a root iff (a, b) = -1
    n = len(cartan)
    simples = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    found = set(simples)
    layer = list(simples)
    while layer:
        nxt = []
        for r in layer:
            for j in range(n):
                ip = sum(r[i] * cartan[i][j] for i in range(n))
                if ip == -1:
                    cand = tuple(r[i] + (1 if i == j else 0) for i in range(n))
                    if cand not in found:
                        found.add(cand)
                        nxt.append(cand)
        layer = nxt
    return sorted(found, key=root_key)


def build_root_system(t: AlgebraType | str) -> RootSystem:
    if isinstance(t, str):
        t = AlgebraType.parse(t)
    cartan = cartan_matrix(t)
    positives = tuple(_close_positive_roots(cartan))
    expected = _POSITIVE_COUNT[t.series](t.rank)
    if len(positives) != expected:
        raise AssertionError(f"{t}: found {len(positives)} positive roots, expected {expected}")
    n = t.rank
    simples = positives[:n]
    gamma = max(positives, key=height)
    half = Fraction(1, 2)
    rho = tuple(half * sum(r[i] for r in positives) for i in range(n))
    root_set = frozenset(positives) | frozenset(neg(r) for r in positives)
    return RootSystem(t, cartan, simples, positives, gamma, rho, root_set)


def highest_root(rs: RootSystem) -> Root:
    return rs.gamma
