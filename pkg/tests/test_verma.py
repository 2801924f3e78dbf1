import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conformal_systems.chevalley import LieElement, bracket
from conformal_systems.errors import LetterNotInNbar
from conformal_systems.polys import PolySC
from conformal_systems.selftest import (
    suite_normal_order,
    suite_representation,
    suite_weight_grading,
)
from conformal_systems.verma import VermaElement, random_element, specialize

X, H = LieElement.X, LieElement.H
A1, A2, G = (-1, 0), (0, -1), (-1, -1)


def test_normal_order_single_swap(a2):
    mod = a2.module
    got = mod.normal_order([A2, A1])
    # oracle: X_{-a2} X_{-a1} = X_{-a1} X_{-a2} + [X_{-a2}, X_{-a1}]
    comm = bracket(a2.tab, X(A2), X(A1))
    assert set(comm.roots) == {G}
    want = mod.normal_order([A1, A2]) + mod.generator(G) * comm.roots[G]
    assert got == want
    assert mod.render(got) == f"X[-1,0]*X[0,-1] {'+' if comm.roots[G] > 0 else '-'} X[-1,-1]"


def test_normal_order_center_and_unit(a2):
    mod = a2.module
    assert mod.normal_order([G, A1]) == mod.normal_order([A1, G])
    assert mod.normal_order([]) == mod.unit()
    with pytest.raises(LetterNotInNbar):
        mod.normal_order([(1, 0)])


def test_act_vacuum(a2, d4):
    for ctx in (a2, d4):
        mod = ctx.module
        vac = mod.unit()
        assert mod.act(H(ctx.grad.gamma), vac) == vac * (PolySC.s() * 2)
        for a in ctx.grad.vplus + ctx.grad.z_n:
            assert mod.act(X(a), vac).is_zero()
        for r in ctx.grad.levi_roots:
            assert mod.act(X(r), vac).is_zero()
        for b in mod.gens:
            assert mod.act(X(b), vac) == mod.generator(b)


def test_act_hand_recursion(a2):
    mod = a2.module
    # X_a1 . X_-a1 (x) 1 = [X_a1, X_-a1] (x) 1 = H_a1 (x) 1 = s * dchi(H_a1) = s
    assert mod.act(X((1, 0)), mod.generator(A1)) == mod.unit() * PolySC.s()


def test_specialize(a2):
    mod = a2.module
    v = mod.unit() * (PolySC.s() * 2)
    assert specialize(v, -1, 0) == mod.unit() * -2
    m = mod.normal_order([A1, G]) * (PolySC.t() - Fraction(3, 4))
    assert specialize(m, 0, Fraction(3, 4)).is_zero()
    assert specialize(VermaElement(), 3, 4).is_zero()


def test_representation_exhaustive_a2(a2):
    res = suite_representation(a2, None, 0)
    assert res.passed, res.failures
    assert res.checked == 20 * (8 * 7 // 2)


def test_representation_sampled_a3(a3):
    res = suite_representation(a3, 25, 11)
    assert res.passed, res.failures


@pytest.mark.parametrize("label", ["A2", "A3", "D4"])
def test_weight_grading_and_pbw(ctx_cache, label):
    ctx = ctx_cache(label)
    assert suite_weight_grading(ctx).passed
    assert suite_normal_order(ctx, seed=3).passed


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000))
def test_product_associative_and_unital(seed):
    ctx = _d4()
    mod = ctx.module
    rng = random.Random(seed)
    u, v, w = (random_element(mod, rng, 2, 2) for _ in range(3))
    assert mod.mul(mod.mul(u, v), w) == mod.mul(u, mod.mul(v, w))
    assert mod.mul(mod.unit(), u) == u == mod.mul(u, mod.unit())


_D4 = []


def _d4():
    from conformal_systems.omega import Context

    if not _D4:
        _D4.append(Context.build("D4"))
    return _D4[0]


def test_reorder_round_trip(a2, d4):
    for ctx in (a2, d4):
        mod = ctx.module
        rng = random.Random(1)
        order = list(ctx.grad.vminus)
        rng.shuffle(order)
        for _ in range(10):
            v = random_element(mod, rng, 3, 3)
            other, w = mod.reorder(v, order)
            back_mod, back = other.reorder(w, ctx.grad.vminus)
            assert back == v


def test_render_coefficients(a2):
    mod = a2.module
    v = mod.normal_order([A1, A1, A2]) * Fraction(-3, 2) + mod.normal_order([A1, G]) * (PolySC.t() - Fraction(3, 4))
    assert mod.render(v) == "-3/2*X[-1,0]^2*X[0,-1] + (t - 3/4)*X[-1,0]*X[-1,-1]"
    assert mod.render(mod.unit() * 2) == "2"
    assert mod.render(VermaElement()) == "0"
