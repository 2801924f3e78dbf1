"""The generalized Verma module U(nbar) (x) C_{s dchi} with coefficients in Q[s, t].

Generators of nbar are the root vectors X_{-a} for -a in Delta(V-) (module
order) followed by X_{-gamma}, which is central in nbar.  A PBW monomial is a
tuple of exponents indexed by generator.  The only nonzero brackets inside
nbar are [X_{-a}, X_{-b}] = N_{-a,-b} X_{-gamma} for a + b = gamma, so moving a
letter past a power costs at most one correction term.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .chevalley import LieElement, StructureTable, bracket
from .errors import LetterNotInNbar, MalformedElement
from .parabolic import Grading
from .polys import PolySC, format_rational
from .rootsys import Root, add, inner

Monomial = tuple[int, ...]


class VermaElement:
    """Sparse map from PBW monomials to PolySC coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self.terms: dict[Monomial, PolySC] = {}
        for m, c in (terms or {}).items():
            c = c if isinstance(c, PolySC) else PolySC.const(c)
            if c:
                self.terms[m] = c

    @classmethod
    def _raw(cls, terms: dict) -> "VermaElement":
        v = cls()
        v.terms = terms
        return v

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "VermaElement") -> "VermaElement":
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return VermaElement._raw(out)

    def __neg__(self) -> "VermaElement":
        return VermaElement._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "VermaElement") -> "VermaElement":
        return self + (-other)

    def __mul__(self, k) -> "VermaElement":
        out = {}
        for m, c in self.terms.items():
            v = c * k
            if v:
                out[m] = v
        return VermaElement._raw(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, VermaElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficients(self) -> list[PolySC]:
        return list(self.terms.values())

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def __repr__(self):
        return f"VermaElement({len(self.terms)} terms)"


def _accumulate(out: dict, terms: Mapping, k=None) -> None:
    for m, c in terms.items():
        if k is not None:
            c = c * k
        if m in out:
            v = out[m] + c
            if v:
                out[m] = v
            else:
                del out[m]
        elif c:
            out[m] = c


def specialize(v: VermaElement, s0, t0) -> VermaElement:
    """Substitute numbers for s and t; vanished terms are dropped."""
    out = {}
    for m, c in v.terms.items():
        x = c.evaluate(s0, t0)
        if x:
            out[m] = PolySC.const(x)
    return VermaElement._raw(out)


class VermaModule:
    """PBW arithmetic in U(nbar) and the U(g)-action on U(nbar) (x) C_{s dchi}.

    ``order`` permutes the generators of V- for the PBW ordering; X_{-gamma}
    always comes last.  Only the canonical order supports ``act``.
    """

    def __init__(self, tab: StructureTable, grad: Grading, order: Sequence[Root] | None = None):
        self.tab = tab
        self.grad = grad
        self.rs = tab.rs
        self.gens: tuple[Root, ...] = tuple(grad.vminus) + grad.z_nbar
        self.index = {r: i for i, r in enumerate(self.gens)}
        self.z = len(self.gens) - 1
        self.ngens = len(self.gens)
        if order is None:
            order = grad.vminus
        order = [tuple(r) for r in order]
        if sorted(order) != sorted(grad.vminus):
            raise ValueError("order must be a permutation of Delta(V-)")
        self.pos = [0] * self.ngens
        for p, r in enumerate(order):
            self.pos[self.index[r]] = p
        self.pos[self.z] = self.ngens - 1
        self.canonical = list(order) == list(grad.vminus)
        self.comm: dict[tuple[int, int], int] = {}
        zroot = grad.z_nbar[0]
        for i, a in enumerate(grad.vminus):
            for j, b in enumerate(grad.vminus):
                if add(a, b) == zroot:
                    self.comm[i, j] = tab.N[(a, b)]
        self._gamma_pair = [inner(self.rs, grad.gamma, a) for a in self.rs.simples]
        self._lmul_memo: dict = {}
        self._act_memo: dict = {}

    # --- PBW arithmetic --------------------------------------------------------

    def unit_monomial(self) -> Monomial:
        return (0,) * self.ngens

    def unit(self) -> VermaElement:
        return VermaElement({self.unit_monomial(): 1})

    def letter_index(self, root: Root) -> int:
        try:
            return self.index[tuple(root)]
        except KeyError:
            raise LetterNotInNbar(f"{root} is not a root of nbar") from None

    def generator(self, root: Root) -> VermaElement:
        i = self.letter_index(root)
        m = [0] * self.ngens
        m[i] = 1
        return VermaElement({tuple(m): 1})

    def word(self, m: Monomial) -> list[int]:
        """Letters of a normal-ordered monomial, left to right."""
        out = []
        for i in sorted(range(self.ngens), key=self.pos.__getitem__):
            out.extend([i] * m[i])
        return out

    def lmul_letter(self, a: int, m: Monomial) -> dict[Monomial, Fraction]:
        """Normal form of X_a * m for a normal-ordered monomial m."""
        key = (a, m)
        hit = self._lmul_memo.get(key)
        if hit is not None:
            return hit
        pa = self.pos[a]
        b = None
        if a != self.z:
            for i in range(self.ngens):
                if i != self.z and m[i] and self.pos[i] < pa and (b is None or self.pos[i] < self.pos[b]):
                    b = i
        if b is None:
            out_m = list(m)
            out_m[a] += 1
            result = {tuple(out_m): Fraction(1)}
        else:
            e = m[b]
            rest = list(m)
            rest[b] = 0
            result: dict[Monomial, Fraction] = {}
            for mm, c in self.lmul_letter(a, tuple(rest)).items():
                mm = list(mm)
                mm[b] = e
                result[tuple(mm)] = result.get(tuple(mm), Fraction(0)) + c
            c_ab = self.comm.get((a, b), 0)
            if c_ab:
                mm = list(m)
                mm[b] -= 1
                mm[self.z] += 1
                mm = tuple(mm)
                v = result.get(mm, Fraction(0)) + e * c_ab
                if v:
                    result[mm] = v
                else:
                    result.pop(mm, None)
        self._lmul_memo[key] = result
        return result

    def normal_order(self, word: Iterable[Root]) -> VermaElement:
        letters = [self.letter_index(r) for r in word]
        cur: dict[Monomial, Fraction] = {self.unit_monomial(): Fraction(1)}
        for a in reversed(letters):
            nxt: dict[Monomial, Fraction] = {}
            for m, c in cur.items():
                for mm, d in self.lmul_letter(a, m).items():
                    nxt[mm] = nxt.get(mm, Fraction(0)) + c * d
            cur = {m: c for m, c in nxt.items() if c}
        return VermaElement(cur)

    def _lmul_letter_elem(self, a: int, terms: Mapping[Monomial, PolySC]) -> dict:
        out: dict = {}
        for m, c in terms.items():
            for mm, d in self.lmul_letter(a, m).items():
                _accumulate(out, {mm: c * d})
        return out

    def mul(self, u: VermaElement, v: VermaElement) -> VermaElement:
        """Product u * v in U(nbar), coefficients multiplied in Q[s, t]."""
        out: dict = {}
        for mu, cu in u.terms.items():
            cur = dict(v.terms)
            for a in reversed(self.word(mu)):
                cur = self._lmul_letter_elem(a, cur)
            _accumulate(out, cur, cu)
        return VermaElement._raw(out)

    def nbar_element(self, Y: LieElement) -> VermaElement:
        """Embed an element of nbar as a degree-1 element."""
        if any(Y.cartan):
            raise LetterNotInNbar("Cartan component is not in nbar")
        out = {}
        for r, c in Y.roots.items():
            i = self.letter_index(r)
            m = [0] * self.ngens
            m[i] = 1
            out[tuple(m)] = c
        return VermaElement(out)

    def sym(self, a: Root, b: Root) -> VermaElement:
        """(xy + yx)/2 for x = X_a, y = X_b, normal ordered."""
        return (self.normal_order([a, b]) + self.normal_order([b, a])) * Fraction(1, 2)

    def reorder(self, v: VermaElement, order: Sequence[Root]) -> tuple["VermaModule", VermaElement]:
        """Re-express v (canonical PBW basis) in the PBW basis for another order."""
        other = VermaModule(self.tab, self.grad, order)
        out: dict = {}
        for m, c in v.terms.items():
            letters = [self.gens[i] for i in self.word(m)]
            for mm, d in other.normal_order(letters).terms.items():
                _accumulate(out, {mm: c * d})
        return other, VermaElement._raw(out)

    # --- g-action ------------------------------------------------------------

    def _act_key(self, key, m: Monomial) -> dict[Monomial, PolySC]:
        memo_key = (key, m)
        hit = self._act_memo.get(memo_key)
        if hit is not None:
            return hit
        kind, val = key
        if not any(m):
            if kind == "H":
                c = self._gamma_pair[val]
                result = {m: PolySC({(1, 0): c})} if c else {}
            elif val in self.index:
                mm = [0] * self.ngens
                mm[self.index[val]] = 1
                result = {tuple(mm): PolySC.const(1)}
            else:
                # l root vectors: dchi vanishes; n kills the vacuum
                result = {}
        else:
            a = min((i for i in range(self.ngens) if m[i]), key=self.pos.__getitem__)
            rest = list(m)
            rest[a] -= 1
            rest = tuple(rest)
            result = self._lmul_letter_elem(a, self._act_key(key, rest))
            Y = LieElement.X(val) if kind == "X" else LieElement.H_simple(val, self.rs.rank)
            comm = bracket(self.tab, Y, LieElement.X(self.gens[a]))
            _accumulate(result, self._act_lie(comm, rest))
        self._act_memo[memo_key] = result
        return result

    def _act_lie(self, Y: LieElement, m: Monomial) -> dict:
        out: dict = {}
        for r, c in Y.roots.items():
            _accumulate(out, self._act_key(("X", r), m), c)
        for i, c in enumerate(Y.cartan):
            if c:
                _accumulate(out, self._act_key(("H", i), m), c)
        return out

    def act(self, Y: LieElement, v: VermaElement) -> VermaElement:
        """Left action of Y in g on v."""
        if not self.canonical:
            raise ValueError("act is only available in the canonical PBW order")
        out: dict = {}
        for m, c in v.terms.items():
            if len(m) != self.ngens:
                raise MalformedElement(f"monomial {m} has wrong length")
            _accumulate(out, self._act_lie(Y, m), c)
        return VermaElement._raw(out)

    def weight_eigenvalue(self, h, m: Monomial) -> PolySC:
        """s*gamma(H) + weight of m evaluated on H = sum h_i H_i (diagonal action oracle)."""
        rs = self.rs
        const = Fraction(0)
        for i, e in enumerate(m):
            if e:
                const += e * sum(Fraction(hj) * inner(rs, self.gens[i], rs.simples[j]) for j, hj in enumerate(h) if hj)
        sc = sum((Fraction(hj) * self._gamma_pair[j] for j, hj in enumerate(h) if hj), Fraction(0))
        return PolySC({(1, 0): sc, (0, 0): const})

    # --- rendering -------------------------------------------------------------

    def gen_name(self, i: int) -> str:
        return "X[" + ",".join(str(c) for c in self.gens[i]) + "]"

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for i in sorted(range(self.ngens), key=self.pos.__getitem__):
            if m[i]:
                parts.append(self.gen_name(i) + (f"^{m[i]}" if m[i] > 1 else ""))
        return "*".join(parts) or "1"

    def sort_key(self, m: Monomial):
        ordered = tuple(m[i] for i in sorted(range(self.ngens), key=self.pos.__getitem__))
        return (-sum(m), tuple(-e for e in ordered))

    def render(self, v: VermaElement) -> str:
        """Canonical text: monomials by degree then PBW exponents, exact coefficients."""
        if not v.terms:
            return "0"
        chunks = []
        for m in sorted(v.terms, key=self.sort_key):
            c = v.terms[m]
            mono = self.monomial_str(m)
            if len(c.terms) == 1 and (0, 0) in c.terms:
                k = c.terms[(0, 0)]
                sign = "-" if k < 0 else "+"
                mag = abs(k)
                body = mono if mag == 1 and mono != "1" else (format_rational(mag) if mono == "1" else f"{format_rational(mag)}*{mono}")
            else:
                sign = "+"
                body = f"({c})" if mono == "1" else f"({c})*{mono}"
            chunks.append((sign, body))
        text = ("-" if chunks[0][0] == "-" else "") + chunks[0][1]
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text


def random_element(mod: VermaModule, rng: random.Random, max_degree: int = 3, nterms: int = 3) -> VermaElement:
    """Seeded random element with small rational coefficients, possibly involving s and t."""
    out: dict = {}
    for _ in range(nterms):
        deg = rng.randint(0, max_degree)
        m = [0] * mod.ngens
        for _ in range(deg):
            m[rng.randrange(mod.ngens)] += 1
        c = PolySC({(0, 0): Fraction(rng.randint(-5, 5), rng.randint(1, 4)),
                    (rng.randint(0, 1), rng.randint(0, 1)): rng.randint(-2, 2)})
        _accumulate(out, {tuple(m): c})
    return VermaElement._raw(out)
