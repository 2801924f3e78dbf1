"""Exact special-value solver for the third-order systems.

Pipeline for an irreducible l-submodule E of V-:

1. pin s by the infinitesimal-character equation
   ||w + (s - 1) gamma + rho||^2 = ||s gamma + rho||^2 with w the highest weight of E;
2. collect every PBW coefficient of X_a . omega3^t(X_b) for a in Delta(n), b in Delta(E);
3. substitute s, take the gcd in Q[t] and its rational roots;
4. re-verify each candidate by full specialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chevalley import LieElement, bracket
from .errors import DegenerateCharacterEquation, NotInvariant
from .linalg import solve_in_span
from .omega import Context, omega2, omega3
from .parabolic import Submodule, dchi, deleted_components, vminus_components
from .polys import PolySC, rational_roots, upoly_gcd_all
from .rootsys import AlgebraType, RootSystem, add, inner
from .verma import VermaElement, specialize

EXISTS = "Exists"
NOT_EXISTS = "NotExists"
ZERO_OPERATOR = "ZeroOperator"


@dataclass
class SpecialValueReport:
    algebra: AlgebraType
    submodule: Submodule | None
    s_character: Fraction | None
    solutions: list[tuple[Fraction, Fraction | None]]
    equation_count: int
    status: str
    component: tuple[int, ...] | None = None
    notes: list[str] = field(default_factory=list)


# --- infinitesimal character ------------------------------------------------------

def character_equation(rs: RootSystem, varpi: Sequence) -> tuple[Fraction, Fraction, Fraction]:
    """Coefficients (a, b, c) of a s^2 + b s + c = LHS - RHS.

    Assembled by evaluating both squared norms at s = 0, 1, 2 and
    interpolating, so the s^2 coefficient is computed rather than assumed.
    """
    varpi = tuple(Fraction(x) for x in varpi)
    g, rho = rs.gamma, rs.rho

    def f(s):
        lhs = add(add(varpi, tuple((s - 1) * x for x in g)), rho)
        rhs = add(tuple(s * x for x in g), rho)
        return Fraction(inner(rs, lhs, lhs) - inner(rs, rhs, rhs))

    f0, f1, f2 = f(0), f(1), f(2)
    a = (f2 - 2 * f1 + f0) / 2
    b = f1 - f0 - a
    return a, b, f0


def infinitesimal_s(rs: RootSystem, varpi: Sequence) -> Fraction:
    a, b, c = character_equation(rs, varpi)
    if a:
        raise AssertionError("quadratic term of the character equation must cancel")
    if not b:
        kind = "identically true" if not c else "inconsistent"
        raise DegenerateCharacterEquation(f"character equation is {kind} for weight {tuple(varpi)}")
    return -c / b


# --- annihilation equations --------------------------------------------------------

def _operators(ctx: Context, E: Submodule) -> list[VermaElement]:
    return [omega3(ctx, LieElement.X(b)) for b in E.roots]


def annihilation_system(ctx: Context, E: Submodule, vectors: list[VermaElement] | None = None) -> list[PolySC]:
    """All PBW coefficients of X_a . v for a in Delta(V+) + {gamma} and v = omega3^t(X_b), b in E.

    Ordered by (b, a, monomial).  Empty when the operator vanishes identically.
    """
    mod = ctx.module
    vectors = vectors if vectors is not None else _operators(ctx, E)
    if all(v.is_zero() for v in vectors):
        return []
    out = []
    for v in vectors:
        for a in ctx.grad.nilradical():
            w = mod.act(LieElement.X(a), v)
            out.extend(w.terms[m] for m in sorted(w.terms, key=mod.sort_key))
    return out


def _nonzero_after(vectors, s0, t0) -> bool:
    return any(not specialize(v, s0, t0).is_zero() for v in vectors)


def verify_annihilation(ctx: Context, E: Submodule, s0, t0, vectors=None) -> bool:
    """Exhaustive check X_a . omega3^{t0}(X_b) = 0 at s = s0 for all a in Delta(n), b in E."""
    mod = ctx.module
    vectors = vectors if vectors is not None else _operators(ctx, E)
    for v in vectors:
        for a in ctx.grad.nilradical():
            if not specialize(mod.act(LieElement.X(a), v), s0, t0).is_zero():
                return False
    return True


def _solve_univariate(polys: list[list[Fraction]], notes: list[str]) -> list[Fraction] | None:
    """Common rational roots of univariate polynomials; None means every value works."""
    nonzero = [p for p in polys if p]
    if not nonzero:
        return None
    g = upoly_gcd_all(nonzero)
    if len(g) <= 1:
        return []
    roots, rest = rational_roots(g)
    if len(rest) > 1:
        notes.append("non-rational root detected")
    return roots


def solve_special_values(ctx: Context, E: Submodule, audit: bool = False) -> SpecialValueReport:
    vectors = _operators(ctx, E)
    s0 = infinitesimal_s(ctx.rs, E.highest_weight)
    report = SpecialValueReport(ctx.rs.type, E, s0, [], 0, NOT_EXISTS)
    if all(v.is_zero() for v in vectors):
        report.status = ZERO_OPERATOR
        return report
    system = annihilation_system(ctx, E, vectors)
    report.equation_count = len(system)
    roots = _solve_univariate([p.substitute_s(s0) for p in system], report.notes)
    if roots is None:
        report.notes.append("annihilation equations hold for every t")
        # nonvanishing is all that remains; 0 is a convenient witness
        candidates = [Fraction(0)]
    else:
        candidates = roots
    for t0 in candidates:
        if _nonzero_after(vectors, s0, t0) and verify_annihilation(ctx, E, s0, t0, vectors):
            report.solutions.append((s0, t0))
    report.status = EXISTS if report.solutions else NOT_EXISTS
    if audit:
        report.notes.extend(resultant_audit(system, s0))
    return report


def resultant_audit(system: list[PolySC], s0: Fraction) -> list[str]:
    """Eliminate t pairwise and report the common rational s-roots of the resultants."""
    import sympy

    s, t = sympy.symbols("s t")

    def to_sym(p: PolySC):
        return sum(sympy.Rational(c.numerator, c.denominator) * s**a * t**b for (a, b), c in p.terms.items())

    exprs = []
    seen = set()
    for p in system:
        if p not in seen:
            seen.add(p)
            exprs.append(sympy.Poly(to_sym(p), s, t))
    g = None
    with_t = [e for e in exprs if e.degree(t) > 0]
    free = [sympy.Poly(e.as_expr(), s) for e in exprs if e.degree(t) == 0]
    pieces = list(free)
    for i in range(len(with_t)):
        for j in range(i + 1, len(with_t)):
            r = sympy.resultant(with_t[i].as_expr(), with_t[j].as_expr(), t)
            r = sympy.Poly(sympy.expand(r), s)
            if not r.is_zero:
                pieces.append(r)
    for p in pieces:
        g = p if g is None else sympy.gcd(g, p)
    if g is None:
        return ["audit: no t-free constraint on s"]
    roots = sorted(sympy.Rational(r) for r in sympy.roots(g, filter="Q"))
    ok = sympy.Rational(s0.numerator, s0.denominator) in roots or g.is_zero
    return [f"audit: common rational s-roots of resultants {[str(r) for r in roots]}; s from the character equation is {'consistent' if ok else 'NOT consistent'} with them"]


# --- l-action and reducibility -----------------------------------------------------

def l_action_matrix(ctx: Context, E: Submodule, Z: LieElement, s0, t0) -> list[list[Fraction]]:
    """Matrix a(Z) with Z . f_i = sum_r a[r][i] f_r on f_i = omega3^{t0}(X_{b_i}), b_i in E."""
    basis = [specialize(v, s0, t0) for v in _operators(ctx, E)]
    images = [specialize(ctx.module.act(Z, v), s0, t0) for v in basis]
    monos = sorted({m for v in basis + images for m in v.terms})

    def col(v):
        return [v.terms[m].evaluate(0, 0) if m in v.terms else Fraction(0) for m in monos]

    cols = [col(v) for v in basis]
    k = len(basis)
    a = [[Fraction(0)] * k for _ in range(k)]
    for i, img in enumerate(images):
        x = solve_in_span(cols, col(img))
        if x is None:
            raise NotInvariant(f"Z . omega3(X_{E.roots[i]}) leaves F_t(E)")
        for r in range(k):
            a[r][i] = x[r]
    return a


def ad_matrix_oracle(ctx: Context, E: Submodule, Z: LieElement, s0) -> list[list[Fraction]]:
    """ad(Z) restricted to E, shifted by -(1 - s0) dchi(Z)."""
    shift = (1 - Fraction(s0)) * dchi(ctx.grad, Z)
    k = len(E.roots)
    a = [[Fraction(0)] * k for _ in range(k)]
    for i, b in enumerate(E.roots):
        img = bracket(ctx.tab, Z, LieElement.X(b))
        for r, b2 in enumerate(E.roots):
            a[r][i] = img.roots.get(b2, Fraction(0))
        a[i][i] -= shift
    return a


def reducibility_witness(ctx: Context, E: Submodule, s0, t0) -> dict:
    """H_gamma eigenvalues on F_{t0}(E) and on the vacuum; distinct values witness reducibility."""
    Hg = LieElement.H(ctx.grad.gamma)
    mat = l_action_matrix(ctx, E, Hg, s0, t0)
    diag = {mat[i][i] for i in range(len(mat))}
    off = any(mat[r][i] for r in range(len(mat)) for i in range(len(mat)) if r != i)
    if len(diag) != 1 or off:
        raise NotInvariant("H_gamma does not act by a scalar on F_t(E)")
    on_f = diag.pop()
    vac = 2 * Fraction(s0)
    return {"h_gamma_on_F": on_f, "h_gamma_on_vacuum": vac, "reducible": on_f != vac}


# --- second-order systems ----------------------------------------------------------

def levi_ideal_basis(ctx: Context, component: Sequence[int]) -> list[LieElement]:
    """Basis of the simple ideal l(C) of [l, l] for a deleted-diagram component C."""
    comp = set(component)
    out = [LieElement.X(r) for r in ctx.grad.levi_roots if all(c == 0 or i in comp for i, c in enumerate(r))]
    out += [LieElement.H_simple(i, ctx.rs.rank) for i in sorted(comp)]
    return out


def omega2_invariance(ctx: Context, component: Sequence[int]) -> SpecialValueReport:
    """Special values of s at which span{omega2(Z) : Z in l(C)} is annihilated by n."""
    mod = ctx.module
    vectors = [omega2(ctx, Z) for Z in levi_ideal_basis(ctx, component)]
    report = SpecialValueReport(ctx.rs.type, None, None, [], 0, NOT_EXISTS, component=tuple(component))
    if all(v.is_zero() for v in vectors):
        report.status = ZERO_OPERATOR
        return report
    system = []
    for v in vectors:
        for a in ctx.grad.nilradical():
            w = mod.act(LieElement.X(a), v)
            system.extend(w.terms[m] for m in sorted(w.terms, key=mod.sort_key))
    report.equation_count = len(system)
    roots = _solve_univariate([p.substitute_t(0) for p in system], report.notes)
    if roots is None:
        report.notes.append("annihilation equations hold for every s")
        roots = []
    for s0 in roots:
        if not _nonzero_after(vectors, s0, 0):
            continue
        if all(specialize(mod.act(LieElement.X(a), v), s0, 0).is_zero() for v in vectors for a in ctx.grad.nilradical()):
            report.solutions.append((s0, None))
    report.status = EXISTS if report.solutions else NOT_EXISTS
    return report


def singleton_components(ctx: Context) -> list[tuple[int, ...]]:
    return [c for c in deleted_components(ctx.rs).components if len(c) == 1]


def all_special_values(ctx: Context, audit: bool = False) -> list[SpecialValueReport]:
    return [solve_special_values(ctx, E, audit=audit) for E in vminus_components(ctx.grad)]
