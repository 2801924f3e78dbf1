"""Property batteries run by ``selftest`` and by the test-suite."""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .chevalley import LieElement, bracket, jacobi_residuals, killing_form
from .omega import Context, c3, omega2, omega3, omega3_tilde, omega3_tilde_in_basis
from .polys import PolySC
from .rootsys import neg
from .verma import VermaElement, random_element, specialize

DEFAULT_SEED = 20240607
DEFAULT_SAMPLES = 200


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, what) -> None:
        self.checked += 1
        if not ok and len(self.failures) < 20:
            self.failures.append(str(what))


def suite_jacobi(ctx: Context) -> SuiteResult:
    res = SuiteResult("jacobi")
    n = len(ctx.tab.basis())
    bad = list(jacobi_residuals(ctx.tab))
    res.checked = n**3
    res.failures = [f"triple {i},{j},{k}" for i, j, k, _ in bad[:20]]
    return res


def suite_sl2(ctx: Context) -> SuiteResult:
    res = SuiteResult("sl2-triples")
    tab = ctx.tab
    for a in ctx.rs.positives:
        H, Xp, Xm = LieElement.H(a), LieElement.X(a), LieElement.X(neg(a))
        res.check(bracket(tab, Xp, Xm) == H, f"[X_a, X_-a] != H_a at {a}")
        res.check(bracket(tab, H, Xp) == Xp * 2, f"[H_a, X_a] != 2X_a at {a}")
        res.check(bracket(tab, H, Xm) == Xm * -2, f"[H_a, X_-a] != -2X_-a at {a}")
    return res


def suite_invariant_form(ctx: Context) -> SuiteResult:
    res = SuiteResult("form-invariance")
    tab = ctx.tab
    basis = tab.basis()
    for x, y, z in product(basis, repeat=3):
        lhs = killing_form(tab, bracket(tab, x, y), z) + killing_form(tab, y, bracket(tab, x, z))
        res.check(lhs == 0, (x, y, z))
    for a in ctx.rs.roots:
        res.check(killing_form(tab, LieElement.X(a), LieElement.X(neg(a))) == 1, a)
    return res


def _monomials_up_to(ngens: int, degree: int):
    def rec(i, left):
        if i == ngens:
            yield ()
            return
        for e in range(left + 1):
            for tail in rec(i + 1, left - e):
                yield (e,) + tail

    return list(rec(0, degree))


def suite_representation(ctx: Context, samples: int | None, seed: int) -> SuiteResult:
    """act([X,Y], v) = X(Yv) - Y(Xv) for every basis pair.

    ``samples=None`` runs over every PBW monomial of degree <= 3.
    """
    res = SuiteResult("representation")
    mod, tab = ctx.module, ctx.tab
    basis = tab.basis()
    if samples is None:
        vectors = [VermaElement({m: 1}) for m in _monomials_up_to(mod.ngens, 3)]
    else:
        rng = random.Random(seed)
        vectors = [random_element(mod, rng, 3, 3) for _ in range(samples)]
    for v in vectors:
        acted = [mod.act(x, v) for x in basis]
        for i, x in enumerate(basis):
            for j in range(i + 1, len(basis)):
                y = basis[j]
                lhs = mod.act(bracket(tab, x, y), v)
                rhs = mod.act(x, acted[j]) - mod.act(y, acted[i])
                res.check(lhs == rhs, f"{x}, {y}")
    return res


def suite_weight_grading(ctx: Context) -> SuiteResult:
    res = SuiteResult("weight-grading")
    mod = ctx.module
    n = ctx.rs.rank
    for m in _monomials_up_to(mod.ngens, 2):
        for i in range(n):
            h = tuple(1 if j == i else 0 for j in range(n))
            got = mod.act(LieElement.H(h), VermaElement({m: 1}))
            want = VermaElement({m: mod.weight_eigenvalue(h, m)})
            res.check(got == want, (m, i))
    return res


def suite_normal_order(ctx: Context, seed: int, trials: int = 100) -> SuiteResult:
    res = SuiteResult("normal-order-multiplicative")
    mod = ctx.module
    rng = random.Random(seed)
    for _ in range(trials):
        w1 = [rng.choice(mod.gens) for _ in range(rng.randint(0, 3))]
        w2 = [rng.choice(mod.gens) for _ in range(rng.randint(0, 3))]
        res.check(mod.normal_order(w1 + w2) == mod.mul(mod.normal_order(w1), mod.normal_order(w2)), (w1, w2))
    return res


def suite_basis_independence(ctx: Context, seed: int, trials: int = 5) -> SuiteResult:
    res = SuiteResult("basis-independence")
    rng = random.Random(seed)
    m = len(ctx.grad.vplus)
    from .linalg import inverse

    for _ in range(trials):
        while True:
            change = [[Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(m)] for _ in range(m)]
            try:
                inverse(change)
                break
            except ZeroDivisionError:
                continue
        for b in ctx.grad.vminus:
            Y = LieElement.X(b)
            res.check(omega3_tilde_in_basis(ctx, Y, change) == omega3_tilde(ctx, Y), b)
    return res


def suite_omega2_equivariance(ctx: Context) -> SuiteResult:
    """omega2([Z,W]) = Z omega2(W) + 2 dchi(Z) omega2(W) at s = -1."""
    from .parabolic import dchi

    res = SuiteResult("omega2-equivariance")
    mod, tab = ctx.module, ctx.tab
    levi = ctx.grad.levi_basis()
    for Z in levi:
        dz = dchi(ctx.grad, Z)
        for W in levi:
            w = omega2(ctx, W)
            lhs = omega2(ctx, bracket(tab, Z, W))
            rhs = specialize(mod.act(Z, w) + w * (2 * dz), -1, 0)
            res.check(lhs == rhs, (Z, W))
    return res


def suite_omega3_equivariance(ctx: Context) -> SuiteResult:
    """omega3^t([Z,Y]) = Z omega3^t(Y) + (1 - s) dchi(Z) omega3^t(Y), s and t symbolic."""
    from .parabolic import dchi

    res = SuiteResult("omega3-equivariance")
    mod, tab = ctx.module, ctx.tab
    one_minus_s = PolySC.const(1) - PolySC.s()
    for Z in ctx.grad.levi_basis():
        dz = dchi(ctx.grad, Z)
        for b in ctx.grad.vminus:
            Y = LieElement.X(b)
            w = omega3(ctx, Y)
            lhs = omega3(ctx, bracket(tab, Z, Y))
            rhs = mod.act(Z, w) + w * (one_minus_s * dz)
            res.check(lhs == rhs, (Z, b))
    return res


def suite_omega2_hgamma(ctx: Context) -> SuiteResult:
    res = SuiteResult("omega2-hgamma-zero")
    res.check(omega2(ctx, LieElement.H(ctx.grad.gamma)).is_zero(), "omega2(H_gamma) != 0")
    return res


def suite_hgamma_eigenvalue(ctx: Context) -> SuiteResult:
    res = SuiteResult("hgamma-eigenvalue")
    mod = ctx.module
    Hg = LieElement.H(ctx.grad.gamma)
    ev = PolySC.s() * 2 - 3
    for b in ctx.grad.vminus:
        w = omega3(ctx, LieElement.X(b))
        res.check(mod.act(Hg, w) == w * ev, b)
        res.check(not w.is_zero(), f"omega3(X_{b}) vanishes")
    return res


def suite_nested_bracket_identity(ctx: Context) -> SuiteResult:
    """sum_e omega2([[X, X_-e], [X_e, Y]]) = 2 omega2([X, Y]) for X in V+, Y in V-."""
    res = SuiteResult("nested-bracket-identity")
    tab, grad = ctx.tab, ctx.grad
    for a in grad.vplus:
        X = LieElement.X(a)
        for b in grad.vminus:
            Y = LieElement.X(b)
            lhs = VermaElement()
            for e in grad.vplus:
                inner_l = bracket(tab, bracket(tab, X, LieElement.X(neg(e))), bracket(tab, LieElement.X(e), Y))
                lhs = lhs + omega2(ctx, inner_l)
            res.check(lhs == omega2(ctx, bracket(tab, X, Y)) * 2, (a, b))
    return res


def suite_c3(ctx: Context) -> SuiteResult:
    res = SuiteResult("c3-definition")
    mod = ctx.module
    z = ctx.grad.z_nbar[0]
    for b in ctx.grad.vminus:
        res.check(c3(ctx, LieElement.X(b)) == mod.normal_order([b, z]), b)
    return res


def run_selftest(ctx: Context, seed: int = DEFAULT_SEED, samples: int = DEFAULT_SAMPLES) -> list[SuiteResult]:
    exhaustive = len(ctx.module.gens) <= 4
    suites = [
        ("jacobi", lambda: suite_jacobi(ctx)),
        ("sl2", lambda: suite_sl2(ctx)),
        ("form", lambda: suite_invariant_form(ctx)),
        ("repr", lambda: suite_representation(ctx, None if exhaustive else samples, seed)),
        ("weights", lambda: suite_weight_grading(ctx)),
        ("pbw", lambda: suite_normal_order(ctx, seed)),
        ("basis", lambda: suite_basis_independence(ctx, seed)),
        ("omega2-equiv", lambda: suite_omega2_equivariance(ctx)),
        ("omega3-equiv", lambda: suite_omega3_equivariance(ctx)),
        ("hgamma0", lambda: suite_omega2_hgamma(ctx)),
        ("eigen", lambda: suite_hgamma_eigenvalue(ctx)),
        ("c3", lambda: suite_c3(ctx)),
    ]
    if ctx.label == "D4":
        suites.append(("nested", lambda: suite_nested_bracket_identity(ctx)))
    out = []
    for _, fn in suites:
        t0 = time.perf_counter()
        r = fn()
        r.seconds = time.perf_counter() - t0
        out.append(r)
    return out
