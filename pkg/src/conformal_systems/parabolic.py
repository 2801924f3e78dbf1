"""Grading of g by ad(H_gamma) for the Heisenberg parabolic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chevalley import LieElement, StructureTable, bracket
from .errors import NotInLevi, NotInVplus
from .rootsys import Root, RootSystem, add, height, inner, neg, root_key, sub


@dataclass(frozen=True)
class Grading:
    rs: RootSystem
    gamma: Root
    z_nbar: tuple[Root, ...]
    vminus: tuple[Root, ...]
    levi_roots: tuple[Root, ...]
    vplus: tuple[Root, ...]
    z_n: tuple[Root, ...]

    def degree(self, root: Root) -> int:
        return inner(self.rs, root, self.gamma)

    @property
    def dims(self) -> tuple[int, int, int, int, int]:
        return (
            len(self.z_nbar),
            len(self.vminus),
            len(self.levi_roots) + self.rs.rank,
            len(self.vplus),
            len(self.z_n),
        )

    @property
    def levi_positive(self) -> tuple[Root, ...]:
        return tuple(r for r in self.levi_roots if height(r) > 0)

    def levi_basis(self) -> list[LieElement]:
        """Root vectors of l in module order, then the simple coroots."""
        n = self.rs.rank
        return [LieElement.X(r) for r in self.levi_roots] + [LieElement.H_simple(i, n) for i in range(n)]

    def nilradical(self) -> tuple[Root, ...]:
        return self.vplus + self.z_n


@dataclass(frozen=True)
class DeletedDiagram:
    components: tuple[tuple[int, ...], ...]

    @property
    def nodes(self) -> tuple[int, ...]:
        return tuple(sorted(i for c in self.components for i in c))


@dataclass(frozen=True)
class Submodule:
    roots: tuple[Root, ...]
    highest_weight: Root


def grade(tab: StructureTable) -> Grading:
    rs = tab.rs
    g = rs.gamma
    parts: dict[int, list[Root]] = {k: [] for k in (-2, -1, 0, 1, 2)}
    for r in rs.positives:
        parts[inner(rs, r, g)].append(r)
    vplus = tuple(parts[1])
    levi_pos = parts[0]
    levi = tuple(sorted(levi_pos + [neg(r) for r in levi_pos], key=root_key))
    return Grading(
        rs=rs,
        gamma=g,
        z_nbar=(neg(g),),
        vminus=tuple(neg(r) for r in vplus),
        levi_roots=levi,
        vplus=vplus,
        z_n=(g,),
    )


def in_levi(grad: Grading, Z: LieElement) -> bool:
    return all(grad.degree(r) == 0 for r in Z.roots)


def require_levi(grad: Grading, Z: LieElement) -> None:
    if not in_levi(grad, Z):
        raise NotInLevi(f"{Z} has components outside the Levi factor")


def dchi(grad: Grading, Z: LieElement) -> Fraction:
    """Differential of the character on l: gamma evaluated on the Cartan part."""
    require_levi(grad, Z)
    rs = grad.rs
    return sum(
        (c * inner(rs, grad.gamma, rs.simples[i]) for i, c in enumerate(Z.cartan) if c),
        Fraction(0),
    )


def gamma_partner(grad: Grading, beta: Root) -> Root:
    beta = tuple(beta)
    if beta not in grad.vplus:
        raise NotInVplus(f"{beta} is not a root of V+")
    return sub(grad.gamma, beta)


def m_coeff(tab: StructureTable, Z: LieElement, alpha: Root, beta: Root, grad: Grading | None = None) -> Fraction:
    """Coefficient of X_beta in [Z, X_alpha] for Z in l and alpha, beta in V+."""
    grad = grad or grade(tab)
    require_levi(grad, Z)
    for r in (alpha, beta):
        if tuple(r) not in grad.vplus:
            raise NotInVplus(f"{r} is not a root of V+")
    return bracket(tab, Z, LieElement.X(tuple(alpha))).roots.get(tuple(beta), Fraction(0))


def deleted_components(rs: RootSystem) -> DeletedDiagram:
    """Components of the Dynkin diagram after removing every node not orthogonal to gamma."""
    keep = [i for i, a in enumerate(rs.simples) if inner(rs, a, rs.gamma) == 0]
    seen: set[int] = set()
    comps = []
    for start in keep:
        if start in seen:
            continue
        stack, comp = [start], []
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in keep:
                if j not in seen and rs.cartan[i][j] == -1:
                    seen.add(j)
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return DeletedDiagram(tuple(comps))


def vminus_components(grad: Grading) -> list[Submodule]:
    """Orbits of Delta(V-) under adding roots of l, each with its l-highest weight."""
    members = set(grad.vminus)
    comp_of: dict[Root, int] = {}
    comps: list[list[Root]] = []
    for r in grad.vminus:
        if r in comp_of:
            continue
        idx = len(comps)
        comps.append([])
        stack = [r]
        comp_of[r] = idx
        while stack:
            x = stack.pop()
            comps[idx].append(x)
            for d in grad.levi_roots:
                y = add(x, d)
                if y in members and y not in comp_of:
                    comp_of[y] = idx
                    stack.append(y)
    out = []
    pos = grad.levi_positive
    for comp in comps:
        cset = set(comp)
        tops = [w for w in comp if not any(add(w, d) in cset for d in pos)]
        if len(tops) != 1:
            raise AssertionError(f"component {comp} has {len(tops)} highest weights")
        order = sorted(comp, key=lambda r: grad.vminus.index(r))
        out.append(Submodule(tuple(order), tops[0]))
    return out
