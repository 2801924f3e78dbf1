"""Chevalley basis, bracket and normalized invariant form.

The bracket table is produced from a bimultiplicative sign function on the
root lattice (which satisfies the Jacobi identity by construction), then the
basis vectors X_{+-delta} are re-signed in height order so that every
extraspecial pair carries the requested sign.  The default seed gives +1 on
all extraspecial pairs.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator, Mapping

from .errors import CacheCorrupted, StructureTableError
from .rootsys import Root, RootSystem, add, height, inner, neg, root_key

_ZERO = Fraction(0)


class LieElement:
    """Sparse exact-rational combination of X_alpha and simple coroots H_i."""

    __slots__ = ("roots", "cartan")

    def __init__(self, roots: Mapping[Root, object] | None = None, cartan: Iterable = (), rank: int | None = None):
        self.roots: dict[Root, Fraction] = {}
        for r, c in (roots or {}).items():
            c = Fraction(c)
            if c:
                self.roots[tuple(r)] = self.roots.get(tuple(r), _ZERO) + c
        self.roots = {r: c for r, c in self.roots.items() if c}
        cartan = tuple(Fraction(c) for c in cartan)
        if not cartan:
            if rank is None:
                rank = len(next(iter(self.roots))) if self.roots else 0
            cartan = (_ZERO,) * rank
        self.cartan: tuple[Fraction, ...] = cartan

    @classmethod
    def X(cls, root: Root) -> "LieElement":
        return cls({tuple(root): 1}, rank=len(root))

    @classmethod
    def H(cls, coords) -> "LieElement":
        """H_alpha for alpha = sum coords_i alpha_i (coroot = root when simply laced)."""
        return cls({}, cartan=coords)

    @classmethod
    def H_simple(cls, i: int, rank: int) -> "LieElement":
        return cls.H(tuple(1 if j == i else 0 for j in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    def is_zero(self) -> bool:
        return not self.roots and not any(self.cartan)

    def _pad(self, other: "LieElement"):
        a, b = self.cartan, other.cartan
        n = max(len(a), len(b))
        return a + (_ZERO,) * (n - len(a)), b + (_ZERO,) * (n - len(b))

    def __add__(self, other: "LieElement") -> "LieElement":
        roots = dict(self.roots)
        for r, c in other.roots.items():
            roots[r] = roots.get(r, _ZERO) + c
        a, b = self._pad(other)
        return LieElement(roots, tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> "LieElement":
        return LieElement({r: -c for r, c in self.roots.items()}, tuple(-c for c in self.cartan))

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, k) -> "LieElement":
        k = Fraction(k)
        return LieElement({r: k * c for r, c in self.roots.items()}, tuple(k * c for c in self.cartan))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        a, b = self._pad(other)
        return self.roots == other.roots and a == b

    def __hash__(self):
        return hash((frozenset(self.roots.items()), self.cartan))

    def __repr__(self):
        parts = [f"{c}*X{list(r)}" for r, c in sorted(self.roots.items(), key=lambda kv: root_key(kv[0]))]
        parts += [f"{c}*H{i + 1}" for i, c in enumerate(self.cartan) if c]
        return "LieElement(" + (" + ".join(parts) or "0") + ")"


def _epsilon(rs: RootSystem, a: Root, b: Root, orientation: int) -> int:
    # bimultiplicative sign with eps(a, a) = (-1)^{(a,a)/2}
    n = rs.rank
    e = 0
    for i in range(n):
        if not a[i]:
            continue
        for j in range(n):
            if not b[j]:
                continue
            if i == j:
                e += a[i] * b[j]
            elif rs.cartan[i][j] == -1 and (i < j if orientation > 0 else i > j):
                e += a[i] * b[j]
    return -1 if e % 2 else 1


def extraspecial_pair(rs: RootSystem, delta: Root) -> tuple[Root, Root]:
    """The pair (alpha, delta - alpha) with alpha minimal in the root order."""
    for a in rs.positives:
        b = tuple(x - y for x, y in zip(delta, a))
        if b in rs._root_set and height(b) > 0:
            return a, b
    raise ValueError(f"{delta} is simple; it has no extraspecial pair")


@dataclass(frozen=True)
class StructureTable:
    rs: RootSystem
    N: dict[tuple[Root, Root], int]
    seed: int | None = None
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def rank(self) -> int:
        return self.rs.rank

    def n(self, a: Root, b: Root) -> int:
        return self.N.get((a, b), 0)

    def basis(self) -> list[LieElement]:
        """Roots in module order, then simple coroots."""
        return [LieElement.X(r) for r in self.rs.roots] + [
            LieElement.H_simple(i, self.rank) for i in range(self.rank)
        ]

    def root_bracket(self, a: Root, b: Root) -> LieElement:
        s = add(a, b)
        if not any(s):
            return LieElement.H(a)
        if (a, b) in self.N:
            return LieElement({s: self.N[(a, b)]}, rank=self.rank)
        return LieElement({}, rank=self.rank)

    def weight(self, root: Root, h) -> Fraction:
        """root(H) for H = sum h_i H_{alpha_i}."""
        rs = self.rs
        return sum((Fraction(hi) * inner(rs, root, rs.simples[i]) for i, hi in enumerate(h) if hi), _ZERO)


def build_chevalley(rs: RootSystem, seed: int | None = None, orientation: int = 1) -> StructureTable:
    """Structure constants satisfying (C1)-(C5).

    ``seed=None`` sets N = +1 on every extraspecial pair; an integer seed
    draws the extraspecial signs from a seeded generator instead.
    """
    rng = random.Random(seed) if seed is not None else None
    roots = rs.roots
    sigma = {r: (1 if height(r) > 0 else -1) for r in roots}

    def n0(a, b):
        s = add(a, b)
        return sigma[a] * sigma[b] * sigma[s] * _epsilon(rs, a, b, orientation)

    flip = {r: 1 for r in roots}
    for delta in rs.positives:
        if height(delta) == 1:
            continue
        a, b = extraspecial_pair(rs, delta)
        want = 1 if rng is None else rng.choice((1, -1))
        if flip[a] * flip[b] * n0(a, b) != want:
            flip[delta] = flip[neg(delta)] = -1
    table: dict[tuple[Root, Root], int] = {}
    for a in roots:
        for b in roots:
            s = add(a, b)
            if s in rs._root_set:
                table[(a, b)] = flip[a] * flip[b] * flip[s] * n0(a, b)
    tab = StructureTable(rs, table, seed)
    check_table_invariants(tab)
    return tab


def check_table_invariants(tab: StructureTable) -> None:
    for (a, b), v in tab.N.items():
        if abs(v) != 1:
            raise StructureTableError(f"|N{a},{b}| = {abs(v)} != 1")
        if tab.N.get((b, a)) != -v:
            raise StructureTableError(f"N not antisymmetric at {a},{b}")
        if tab.N.get((neg(a), neg(b))) != -v:
            raise StructureTableError(f"N_(-a,-b) != -N_(a,b) at {a},{b}")


def bracket(tab: StructureTable, x: LieElement, y: LieElement) -> LieElement:
    rank = tab.rank
    out_roots: dict[Root, Fraction] = {}
    out_h = [_ZERO] * rank

    def put(r, c):
        out_roots[r] = out_roots.get(r, _ZERO) + c

    for a, ca in x.roots.items():
        for b, cb in y.roots.items():
            c = ca * cb
            s = add(a, b)
            if not any(s):
                for i in range(rank):
                    out_h[i] += c * a[i]
            elif (a, b) in tab.N:
                put(s, c * tab.N[(a, b)])
    if any(x.cartan):
        for b, cb in y.roots.items():
            put(b, cb * tab.weight(b, x.cartan))
    if any(y.cartan):
        for a, ca in x.roots.items():
            put(a, -ca * tab.weight(a, y.cartan))
    return LieElement(out_roots, tuple(out_h))


def killing_form(tab: StructureTable, x: LieElement, y: LieElement) -> Fraction:
    """Invariant form normalized by B(X_a, X_-a) = 1, B(H_a, H_b) = (a, b)."""
    total = _ZERO
    for a, ca in x.roots.items():
        cb = y.roots.get(neg(a))
        if cb:
            total += ca * cb
    if any(x.cartan) and any(y.cartan):
        total += Fraction(inner(tab.rs, x.cartan, y.cartan))
    return total


def jacobi_residuals(tab: StructureTable, elements: list[LieElement] | None = None) -> Iterator[tuple[int, int, int, LieElement]]:
    """Yield (i, j, k, residual) for every nonzero Jacobi residual."""
    basis = elements if elements is not None else tab.basis()
    br = {}
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            br[i, j] = bracket(tab, x, y)
    for i, x in enumerate(basis):
        for j, y in enumerate(basis):
            for k, z in enumerate(basis):
                r = bracket(tab, br[i, j], z) + bracket(tab, br[j, k], x) + bracket(tab, br[k, i], y)
                if not r.is_zero():
                    yield i, j, k, r


# --- structure-constant cache -------------------------------------------------

def write_cache(tab: StructureTable, path: str | Path) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"# {tab.rs.type.label} seed={tab.seed}"]
    for (a, b) in sorted(tab.N, key=lambda ab: (root_key(ab[0]), root_key(ab[1]))):
        lines.append(" ".join(str(v) for v in (*a, *b, tab.N[(a, b)])))
    path.write_text("\n".join(lines) + "\n")


def read_cache(rs: RootSystem, path: str | Path, spot_checks: int = 400) -> StructureTable:
    """Load and re-validate a cache file; any inconsistency is a hard error."""
    path = Path(path)
    n = rs.rank
    table: dict[tuple[Root, Root], int] = {}
    seed = None
    try:
        text = path.read_text()
    except OSError as exc:
        raise CacheCorrupted(f"cannot read {path}: {exc}") from exc
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith("#"):
            head = line[1:].split()
            if not head or head[0] != rs.type.label:
                raise CacheCorrupted(f"{path}: cache is for {head[:1]}, not {rs.type.label}")
            for tok in head[1:]:
                if tok.startswith("seed=") and tok[5:] != "None":
                    seed = int(tok[5:])
            continue
        try:
            vals = [int(v) for v in line.split()]
        except ValueError as exc:
            raise CacheCorrupted(f"{path}:{lineno}: non-integer field") from exc
        if len(vals) != 2 * n + 1:
            raise CacheCorrupted(f"{path}:{lineno}: expected {2 * n + 1} fields, got {len(vals)}")
        a, b, v = tuple(vals[:n]), tuple(vals[n:2 * n]), vals[-1]
        if not (rs.is_root(a) and rs.is_root(b) and rs.is_root(add(a, b))):
            raise CacheCorrupted(f"{path}:{lineno}: {a}, {b} is not a root pair")
        table[(a, b)] = v
    expected = sum(1 for a in rs.roots for b in rs.roots if rs.is_root(add(a, b)))
    if len(table) != expected:
        raise CacheCorrupted(f"{path}: {len(table)} entries, expected {expected}")
    tab = StructureTable(rs, table, seed)
    try:
        check_table_invariants(tab)
    except StructureTableError as exc:
        raise CacheCorrupted(f"{path}: {exc}") from exc
    basis = tab.basis()
    rng = random.Random(0)
    for _ in range(spot_checks):
        x, y, z = (rng.choice(basis) for _ in range(3))
        r = bracket(tab, bracket(tab, x, y), z) + bracket(tab, bracket(tab, y, z), x) + bracket(tab, bracket(tab, z, x), y)
        if not r.is_zero():
            raise CacheCorrupted(f"{path}: Jacobi identity fails on {x}, {y}, {z}")
    return tab
