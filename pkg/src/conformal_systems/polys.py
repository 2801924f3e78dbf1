"""Exact polynomials: the coefficient ring Q[s, t] and univariate helpers.

Univariate polynomials are plain lists of Fractions, lowest degree first,
with no trailing zeros (the zero polynomial is ``[]``).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable

_ZERO = Fraction(0)


class PolySC:
    """Polynomial in the formal parameters s and t with rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[int, int], Fraction] = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = Fraction(c)

    @classmethod
    def const(cls, c) -> "PolySC":
        return cls({(0, 0): c})

    @classmethod
    def s(cls) -> "PolySC":
        return cls({(1, 0): 1})

    @classmethod
    def t(cls) -> "PolySC":
        return cls({(0, 1): 1})

    @staticmethod
    def _coerce(x) -> "PolySC":
        return x if isinstance(x, PolySC) else PolySC.const(x)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other) -> "PolySC":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, _ZERO) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        r = PolySC()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self) -> "PolySC":
        r = PolySC()
        r.terms = {k: -c for k, c in self.terms.items()}
        return r

    def __sub__(self, other) -> "PolySC":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PolySC":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PolySC":
        if not isinstance(other, PolySC):
            k = Fraction(other)
            r = PolySC()
            if k:
                r.terms = {e: k * c for e, c in self.terms.items()}
            return r
        out: dict[tuple[int, int], Fraction] = {}
        for (a, b), c in self.terms.items():
            for (p, q), d in other.terms.items():
                key = (a + p, b + q)
                out[key] = out.get(key, _ZERO) + c * d
        return PolySC(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PolySC":
        out = PolySC.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolySC.const(other)
        if not isinstance(other, PolySC):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> int:
        return max((a + b for a, b in self.terms), default=-1)

    def evaluate(self, s, t) -> Fraction:
        s, t = Fraction(s), Fraction(t)
        return sum((c * s**a * t**b for (a, b), c in self.terms.items()), _ZERO)

    def substitute_s(self, s) -> list[Fraction]:
        """Univariate polynomial in t obtained by fixing s."""
        s = Fraction(s)
        coeffs: dict[int, Fraction] = {}
        for (a, b), c in self.terms.items():
            coeffs[b] = coeffs.get(b, _ZERO) + c * s**a
        return _trim([coeffs.get(i, _ZERO) for i in range(max(coeffs, default=-1) + 1)])

    def substitute_t(self, t) -> list[Fraction]:
        """Univariate polynomial in s obtained by fixing t."""
        t = Fraction(t)
        coeffs: dict[int, Fraction] = {}
        for (a, b), c in self.terms.items():
            coeffs[a] = coeffs.get(a, _ZERO) + c * t**b
        return _trim([coeffs.get(i, _ZERO) for i in range(max(coeffs, default=-1) + 1)])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b) in sorted(self.terms, key=lambda k: (-(k[0] + k[1]), -k[0])):
            c = self.terms[(a, b)]
            mono = "*".join(
                x for x in (_power("s", a), _power("t", b)) if x
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{_frac(mag)}*{mono}"
            else:
                body = _frac(mag)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"PolySC({self})"


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_rational(c) -> str:
    c = Fraction(c)
    return _frac(abs(c)) if c >= 0 else "-" + _frac(-c)


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


# --- univariate ---------------------------------------------------------------

def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def upoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(a), _trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [_ZERO] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    lead = b[-1]
    while len(r) >= len(b):
        k = r[-1] / lead
        shift = len(r) - len(b)
        q[shift] = k
        for i, c in enumerate(b):
            r[shift + i] -= k * c
        r = _trim(r)
    return _trim(q), r


def upoly_monic(p: list[Fraction]) -> list[Fraction]:
    p = _trim(p)
    return [c / p[-1] for c in p] if p else p


def upoly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = _trim(a), _trim(b)
    while b:
        a, b = b, upoly_divmod(a, b)[1]
    return upoly_monic(a)


def upoly_gcd_all(polys: Iterable[list[Fraction]]) -> list[Fraction]:
    g: list[Fraction] = []
    for p in polys:
        g = upoly_gcd(g, p)
        if len(g) == 1:
            break
    return g


def upoly_eval(p: list[Fraction], x) -> Fraction:
    x = Fraction(x)
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def rational_roots(p: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Distinct rational roots of p and the cofactor left after removing them.

    The cofactor has positive degree exactly when p has non-rational roots.
    """
    p = _trim(p)
    if not p:
        raise ValueError("the zero polynomial has every number as a root")
    roots: list[Fraction] = []
    while len(p) > 1 and not p[0]:
        if _ZERO not in roots:
            roots.append(_ZERO)
        p = p[1:]
    found = True
    while found and len(p) > 1:
        found = False
        den = lcm(*(c.denominator for c in p))
        ints = [int(c * den) for c in p]
        g = gcd(*ints)
        ints = [v // g for v in ints]
        for q in _divisors(ints[-1]):
            for num in _divisors(ints[0]):
                for cand in (Fraction(num, q), Fraction(-num, q)):
                    if upoly_eval(p, cand) == 0:
                        if cand not in roots:
                            roots.append(cand)
                        p = upoly_divmod(p, [-cand, Fraction(1)])[0]
                        found = True
                        break
                if found:
                    break
            if found:
                break
    return sorted(roots), upoly_monic(p)
