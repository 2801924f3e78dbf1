from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conformal_systems.chevalley import (
    LieElement,
    bracket,
    build_chevalley,
    extraspecial_pair,
    jacobi_residuals,
    killing_form,
    read_cache,
    write_cache,
)
from conformal_systems.errors import CacheCorrupted
from conformal_systems.rootsys import build_root_system, height, inner, neg

X, H = LieElement.X, LieElement.H


@pytest.fixture(scope="module")
def a2tab():
    return build_chevalley(build_root_system("A2"))


def test_a2_structure_constants(a2tab):
    n = a2tab.N[((1, 0), (0, 1))]
    assert abs(n) == 1
    assert a2tab.N[((0, 1), (1, 0))] == -n


def test_bracket_examples(a2tab):
    assert bracket(a2tab, X((1, 0)), X((-1, 0))) == H((1, 0))
    assert bracket(a2tab, LieElement.H_simple(0, 2), X((0, 1))) == X((0, 1)) * -1
    assert bracket(a2tab, X((1, 0)), X((1, 0))).is_zero()
    assert bracket(a2tab, X((1, 0)), X((0, 1))) == X((1, 1)) * a2tab.N[((1, 0), (0, 1))]


def test_killing_form_examples(a2tab):
    assert killing_form(a2tab, X((1, 1)), X((-1, -1))) == 1
    assert killing_form(a2tab, H((1, 0)), H((1, 0))) == 2
    assert killing_form(a2tab, X((1, 0)), X((0, -1))) == 0
    assert killing_form(a2tab, H((1, 0)), X((1, 0))) == 0
    x, y, z = X((1, 0)), X((0, 1)), X((-1, -1))
    assert killing_form(a2tab, bracket(a2tab, x, y), z) + killing_form(a2tab, y, bracket(a2tab, x, z)) == 0


@pytest.mark.parametrize("label", ["A2", "A3", "D4"])
@pytest.mark.parametrize("seed", [None, 3])
def test_jacobi_exhaustive(label, seed):
    tab = build_chevalley(build_root_system(label), seed)
    assert next(jacobi_residuals(tab), None) is None


@pytest.mark.parametrize("label", ["A4", "D5", "E6"])
def test_table_invariants_and_sl2(label):
    rs = build_root_system(label)
    tab = build_chevalley(rs)
    for (a, b), v in tab.N.items():
        assert abs(v) == 1 and tab.N[(b, a)] == -v and tab.N[(neg(a), neg(b))] == -v
    for a in rs.positives:
        assert bracket(tab, X(a), X(neg(a))) == H(a)
        assert bracket(tab, H(a), X(a)) == X(a) * 2
        assert bracket(tab, H(a), X(neg(a))) == X(neg(a)) * -2
        for b in rs.roots:
            # (C2)/(C4): [H_a, X_b] = (b, a) X_b
            assert bracket(tab, H(a), X(b)) == X(b) * inner(rs, b, a)


def test_extraspecial_signs_default_positive():
    rs = build_root_system("D4")
    tab = build_chevalley(rs)
    for d in rs.positives:
        if height(d) > 1:
            a, b = extraspecial_pair(rs, d)
            assert tab.N[(a, b)] == 1


def test_alternative_seed_changes_signs():
    rs = build_root_system("D4")
    default, other = build_chevalley(rs), build_chevalley(rs, seed=5)
    assert default.N.keys() == other.N.keys()
    assert default.N != other.N
    assert next(jacobi_residuals(other), None) is None


def test_dual_basis_over_vplus(d4):
    tab = d4.tab
    for e in d4.grad.vplus:
        for f in d4.grad.vplus:
            assert killing_form(tab, X(e), X(neg(f))) == (1 if e == f else 0)


roots_a3 = build_root_system("A3").roots
coeff = st.fractions(min_value=-3, max_value=3, max_denominator=4)
elements = st.builds(
    lambda rs, h: LieElement(dict(rs), cartan=h, rank=3),
    st.lists(st.tuples(st.sampled_from(roots_a3), coeff), max_size=4),
    st.tuples(coeff, coeff, coeff),
)


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements, coeff)
def test_bracket_bilinear_alternating_invariant(x, y, z, k):
    tab = build_chevalley(build_root_system("A3"))
    assert bracket(tab, x, y) == -bracket(tab, y, x)
    assert bracket(tab, x + y * k, z) == bracket(tab, x, z) + bracket(tab, y, z) * k
    assert bracket(tab, x, x).is_zero()
    assert killing_form(tab, bracket(tab, x, y), z) + killing_form(tab, y, bracket(tab, x, z)) == 0


def test_cache_round_trip(tmp_path):
    rs = build_root_system("D4")
    tab = build_chevalley(rs, seed=2)
    path = tmp_path / "d4.sc"
    write_cache(tab, path)
    first = path.read_text().splitlines()[1].split()
    assert len(first) == 2 * 4 + 1
    loaded = read_cache(rs, path)
    assert loaded.N == tab.N and loaded.seed == 2


def test_cache_corruption_is_hard_error(tmp_path):
    rs = build_root_system("A3")
    tab = build_chevalley(rs)
    path = tmp_path / "a3.sc"
    write_cache(tab, path)
    lines = path.read_text().splitlines()
    *head, v = lines[1].split()
    lines[1] = " ".join(head + [str(-int(v))])
    path.write_text("\n".join(lines) + "\n")
    with pytest.raises(CacheCorrupted):
        read_cache(rs, path)
    path.write_text("# A3 seed=None\n1 0 0 0 1 0 7\n")
    with pytest.raises(CacheCorrupted):
        read_cache(rs, path)
    with pytest.raises(CacheCorrupted):
        read_cache(build_root_system("A2"), tmp_path / "missing.sc")


def test_cache_wrong_algebra(tmp_path):
    path = tmp_path / "a2.sc"
    write_cache(build_chevalley(build_root_system("A2")), path)
    with pytest.raises(CacheCorrupted):
        read_cache(build_root_system("A3"), path)


def test_lie_element_arithmetic():
    x = LieElement({(1, 0): Fraction(1, 2)}, cartan=(1, 0))
    assert (x - x).is_zero()
    assert x * 2 == LieElement({(1, 0): 1}, cartan=(2, 0))
    assert LieElement({(1, 0): 0}, rank=2).roots == {}
