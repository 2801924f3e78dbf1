from fractions import Fraction

import pytest

from conformal_systems.chevalley import LieElement, bracket
from conformal_systems.errors import NotInLevi, NotInVminus
from conformal_systems.omega import c3, omega2, omega3, omega3_tilde
from conformal_systems.polys import PolySC
from conformal_systems.rootsys import neg, sub
from conformal_systems.selftest import (
    suite_omega2_equivariance,
    suite_hgamma_eigenvalue,
    suite_basis_independence,
    suite_nested_bracket_identity,
    suite_omega3_equivariance,
)
from conformal_systems.verma import VermaElement, specialize

X, H = LieElement.X, LieElement.H
A1, A2, G = (-1, 0), (0, -1), (-1, -1)


@pytest.mark.parametrize("label", ["A2", "A3", "D4", "D5"])
def test_omega2_vanishes_on_hgamma(ctx_cache, label):
    ctx = ctx_cache(label)
    assert omega2(ctx, H(ctx.grad.gamma)).is_zero()


def test_unsymmetrized_reading_does_not_vanish_on_hgamma(a2):
    """Oracle for the chosen reading: the plain product fails omega2(H_gamma) = 0."""
    ctx, mod = a2, a2.module
    Z = H(ctx.grad.gamma)
    plain = VermaElement()
    for a in ctx.grad.vplus:
        for bp, m in bracket(ctx.tab, Z, X(a)).roots.items():
            b = sub(ctx.grad.gamma, bp)
            plain = plain + mod.normal_order([neg(a), neg(b)]) * (Fraction(ctx.tab.N[(b, bp)]) * m / 2)
    assert not plain.is_zero()


def test_omega2_a2_hand_expansion(a2):
    mod = a2.module
    n = a2.tab.N[((1, 0), (0, 1))]
    want = mod.normal_order([A1, A2]) * Fraction(-3 * n, 2) + mod.generator(G) * Fraction(-3, 4)
    assert omega2(a2, H((1, 0))) == want


def test_omega2_linear(d4):
    Z1, Z2 = H((1, 0, 0, 0)), X((0, 0, -1, 0))
    assert omega2(d4, Z1 + Z2 * 3) == omega2(d4, Z1) + omega2(d4, Z2) * 3
    with pytest.raises(NotInLevi):
        omega2(d4, X((0, 1, 0, 0)))


@pytest.mark.parametrize("i,k", [(0, 1), (1, 0)])
def test_a2_omega3_tilde_expansion(a2, i, k):
    """Expected A2 expansion, rendered in the PBW order with X_{-alpha_i} first."""
    mod = a2.module
    ai = tuple(-1 if j == i else 0 for j in range(2))
    ak = tuple(-1 if j == k else 0 for j in range(2))
    n_ik = a2.tab.N[(neg(ai), neg(ak))]
    other, w = mod.reorder(omega3_tilde(a2, X(ai)), [ai, ak])
    want = other.normal_order([ai, ai, ak]) * Fraction(-3 * n_ik, 2) + other.normal_order([ai, G]) * Fraction(-3, 4)
    assert w == want


def test_c3(a2, d4):
    assert c3(a2, X(A1)) == a2.module.normal_order([A1, G])
    assert a2.module.render(c3(a2, X(A1))) == "X[-1,0]*X[-1,-1]"
    b = (0, -1, 0, 0)
    assert c3(d4, X(b)) == d4.module.normal_order([b, (-1, -2, -1, -1)])
    assert c3(d4, X(b) * 2 + X((-1, -1, 0, 0))) == c3(d4, X(b)) * 2 + c3(d4, X((-1, -1, 0, 0)))
    with pytest.raises(NotInVminus):
        c3(a2, X(G))
    with pytest.raises(NotInVminus):
        c3(a2, X((1, 0)))


def test_omega3_t_coefficient(a2):
    w = omega3(a2, X(A1))
    m = a2.module.normal_order([A1, G])
    (mono,) = m.terms
    assert w.terms[mono] == PolySC.t() - Fraction(3, 4)
    assert specialize(w, 0, 0) == specialize(omega3_tilde(a2, X(A1)), 0, 0)
    assert omega3_tilde(a2, X(A1) * 0).is_zero()


def test_omega3_nonzero_d4(d4):
    for b in d4.grad.vminus:
        w = omega3(d4, X(b))
        assert not w.is_zero()
        assert w.degrees() == {2, 3}


@pytest.mark.parametrize("label", ["A2", "A3", "D4"])
def test_equivariance_suites(ctx_cache, label):
    ctx = ctx_cache(label)
    for suite in (suite_omega2_equivariance, suite_omega3_equivariance, suite_hgamma_eigenvalue):
        res = suite(ctx)
        assert res.passed, (res.name, res.failures)


@pytest.mark.parametrize("label", ["A2", "D4"])
def test_basis_independence(ctx_cache, label):
    res = suite_basis_independence(ctx_cache(label), seed=17)
    assert res.passed and res.checked == 5 * len(ctx_cache(label).grad.vminus)


def test_nested_bracket_identity_d4(d4):
    res = suite_nested_bracket_identity(d4)
    assert res.passed and res.checked == 64
