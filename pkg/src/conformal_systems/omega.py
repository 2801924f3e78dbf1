"""Verma-module elements attached to the second- and third-order operators.

omega2(Z) for Z in l is the symmetrized quadratic

    1/2 * sum_{a, b in V+} N_{b, b'} M_{a, b'}(Z) * sym(X_{-a}, X_{-b}),   b' = gamma - b,

and omega3^t(Y) = sum_e X_{-e} omega2([X_e, Y]) + t * Y X_{-gamma} for Y in V-.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chevalley import LieElement, StructureTable, bracket, build_chevalley
from .errors import NotInVminus
from .parabolic import Grading, grade, require_levi
from .polys import PolySC
from .rootsys import AlgebraType, RootSystem, build_root_system, neg, sub
from .verma import VermaElement, VermaModule


@dataclass
class Context:
    """Everything built once per algebra: roots, bracket table, grading, Verma module."""

    rs: RootSystem
    tab: StructureTable
    grad: Grading
    module: VermaModule
    _omega2_memo: dict = field(default_factory=dict, repr=False)

    @classmethod
    def build(cls, algebra: AlgebraType | str, seed: int | None = None, tab: StructureTable | None = None) -> "Context":
        rs = build_root_system(algebra)
        tab = tab if tab is not None else build_chevalley(rs, seed)
        grad = grade(tab)
        return cls(rs, tab, grad, VermaModule(tab, grad))

    @property
    def label(self) -> str:
        return self.rs.type.label


def _require_vminus(ctx: Context, Y: LieElement) -> None:
    if any(Y.cartan) or any(r not in ctx.module.index or r == ctx.grad.z_nbar[0] for r in Y.roots):
        raise NotInVminus(f"{Y} is not in V-")


def _omega2_root(ctx: Context, key) -> VermaElement:
    hit = ctx._omega2_memo.get(key)
    if hit is not None:
        return hit
    kind, val = key
    Z = LieElement.X(val) if kind == "X" else LieElement.H_simple(val, ctx.rs.rank)
    tab, grad, mod = ctx.tab, ctx.grad, ctx.module
    out = VermaElement()
    for a in grad.vplus:
        image = bracket(tab, Z, LieElement.X(a))
        for bp, m in image.roots.items():
            # bp = b' ranges over V+; the pairing root is b = gamma - b'
            b = sub(grad.gamma, bp)
            coeff = Fraction(tab.N[(b, bp)]) * m / 2
            out = out + mod.sym(neg(a), neg(b)) * coeff
    ctx._omega2_memo[key] = out
    return out


def omega2(ctx: Context, Z: LieElement) -> VermaElement:
    require_levi(ctx.grad, Z)
    out = VermaElement()
    for r, c in Z.roots.items():
        out = out + _omega2_root(ctx, ("X", r)) * c
    for i, c in enumerate(Z.cartan):
        if c:
            out = out + _omega2_root(ctx, ("H", i)) * c
    return out


def omega3_tilde(ctx: Context, Y: LieElement) -> VermaElement:
    _require_vminus(ctx, Y)
    mod = ctx.module
    out = VermaElement()
    for e in ctx.grad.vplus:
        w = omega2(ctx, bracket(ctx.tab, LieElement.X(e), Y))
        if w:
            out = out + mod.mul(mod.generator(neg(e)), w)
    return out


def omega3_tilde_in_basis(ctx: Context, Y: LieElement, change: Sequence[Sequence[Fraction]]) -> VermaElement:
    """sum_i W_i^* omega2([W_i, Y]) for W_i = sum_j change[i][j] X_{e_j} and the B-dual basis W_i^*."""
    from .linalg import inverse

    _require_vminus(ctx, Y)
    mod = ctx.module
    vplus = ctx.grad.vplus
    inv = inverse(change)
    out = VermaElement()
    for i, row in enumerate(change):
        W = LieElement({e: a for e, a in zip(vplus, row)}, rank=ctx.rs.rank)
        Wstar = LieElement({neg(e): inv[k][i] for k, e in enumerate(vplus)}, rank=ctx.rs.rank)
        w = omega2(ctx, bracket(ctx.tab, W, Y))
        if w and not Wstar.is_zero():
            out = out + mod.mul(mod.nbar_element(Wstar), w)
    return out


def c3(ctx: Context, Y: LieElement) -> VermaElement:
    _require_vminus(ctx, Y)
    mod = ctx.module
    return mod.mul(mod.nbar_element(Y), mod.generator(ctx.grad.z_nbar[0]))


def omega3(ctx: Context, Y: LieElement) -> VermaElement:
    return omega3_tilde(ctx, Y) + c3(ctx, Y) * PolySC.t()
