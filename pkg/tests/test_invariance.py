import random
from fractions import Fraction

import pytest
import sympy

from conformal_systems.chevalley import LieElement
from conformal_systems.errors import DegenerateCharacterEquation, NotInvariant
from conformal_systems.invariance import (
    EXISTS,
    NOT_EXISTS,
    ZERO_OPERATOR,
    ad_matrix_oracle,
    annihilation_system,
    character_equation,
    infinitesimal_s,
    l_action_matrix,
    omega2_invariance,
    reducibility_witness,
    resultant_audit,
    singleton_components,
    solve_special_values,
    verify_annihilation,
)
from conformal_systems.parabolic import Submodule, vminus_components
from conformal_systems.rootsys import build_root_system

X, H = LieElement.X, LieElement.H


def character_equation_by_sympy(rs, varpi):
    """Oracle: expand both squared norms symbolically and solve for s."""
    s = sympy.Symbol("s")
    C = sympy.Matrix(rs.cartan)

    def norm(v):
        v = sympy.Matrix(v)
        return (v.T * C * v)[0]

    g = sympy.Matrix(rs.gamma)
    rho = sympy.Matrix([sympy.Rational(x.numerator, x.denominator) for x in rs.rho])
    w = sympy.Matrix([sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in varpi])
    expr = sympy.expand(norm(w + (s - 1) * g + rho) - norm(s * g + rho))
    return sympy.Poly(expr, s)


@pytest.mark.parametrize("label,varpi,s0", [("A2", (-1, 0), 0), ("A2", (0, -1), 0), ("D4", (0, -1, 0, 0), -1)])
def test_infinitesimal_s_examples(label, varpi, s0):
    rs = build_root_system(label)
    assert infinitesimal_s(rs, varpi) == s0
    sol = sympy.solve(character_equation_by_sympy(rs, varpi).as_expr())
    assert sol == [s0]


@pytest.mark.parametrize("label", ["A2", "A3", "D4", "D5"])
def test_character_equation_matches_symbolic_expansion(label):
    rs = build_root_system(label)
    rng = random.Random(label)
    for _ in range(20):
        varpi = tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 5)) for _ in range(rs.rank))
        a, b, c = character_equation(rs, varpi)
        ref = character_equation_by_sympy(rs, varpi)
        coeffs = [ref.coeff_monomial(sympy.Symbol("s") ** k) for k in (2, 1, 0)]
        assert [a, b, c] == [Fraction(int(x.p), int(x.q)) for x in coeffs]
        assert a == 0


def test_zero_weight_and_degenerate():
    rs = build_root_system("A2")
    # varpi = 0: -4 s + (||rho - gamma||^2 - ||rho||^2) = -4 s - 2 => s = -1/2
    assert infinitesimal_s(rs, (0, 0)) == Fraction(-1, 2)
    assert sympy.solve(character_equation_by_sympy(rs, (0, 0)).as_expr()) == [sympy.Rational(-1, 2)]
    # (gamma, varpi - gamma) = 0 kills the linear term
    with pytest.raises(DegenerateCharacterEquation):
        infinitesimal_s(rs, (1, 1))


def test_a2_system_and_solution(a2):
    for E in vminus_components(a2.grad):
        system = annihilation_system(a2, E)
        assert system and all(p.evaluate(0, Fraction(3, 4)) == 0 for p in system)
        assert any(p.evaluate(0, 0) != 0 for p in system)
        rep = solve_special_values(a2, E)
        assert rep.status == EXISTS and rep.solutions == [(0, Fraction(3, 4))]


def test_d4_solution_and_verification(d4):
    (E,) = vminus_components(d4.grad)
    assert verify_annihilation(d4, E, -1, 0)
    assert not verify_annihilation(d4, E, -1, 1)
    rep = solve_special_values(d4, E, audit=True)
    assert rep.s_character == -1 and (Fraction(-1), Fraction(0)) in rep.solutions
    assert any("consistent" in n for n in rep.notes)


def test_a3_nonexistence(a3):
    for E in vminus_components(a3.grad):
        rep = solve_special_values(a3, E)
        assert rep.status == NOT_EXISTS and rep.solutions == []


def test_zero_operator_guard(a2):
    fake = Submodule(roots=(), highest_weight=(-1, 0))
    assert annihilation_system(a2, fake) == []
    assert solve_special_values(a2, fake).status == ZERO_OPERATOR


def test_l_action_matrix(a2, d4):
    (E,) = vminus_components(d4.grad)
    m = l_action_matrix(d4, E, H(d4.grad.gamma), -1, 0)
    assert m == [[Fraction(-5) if i == j else 0 for j in range(8)] for i in range(8)]
    for Z in d4.grad.levi_basis():
        assert l_action_matrix(d4, E, Z, -1, 0) == ad_matrix_oracle(d4, E, Z, -1)
    for F in vminus_components(a2.grad):
        assert l_action_matrix(a2, F, H(a2.grad.gamma), 0, Fraction(3, 4)) == [[-3]]
    # a root vector of n does not preserve F_t(E) when the operator is not annihilated
    with pytest.raises(NotInvariant):
        l_action_matrix(d4, E, X((1, 1, 0, 0)), -1, 1)


def test_reducibility_d4(d4):
    (E,) = vminus_components(d4.grad)
    w = reducibility_witness(d4, E, -1, 0)
    assert w == {"h_gamma_on_F": -5, "h_gamma_on_vacuum": -2, "reducible": True}


def test_omega2_invariance(a2, d4):
    assert singleton_components(a2) == []
    comps = singleton_components(d4)
    assert comps == [(0,), (2,), (3,)]
    for c in comps:
        rep = omega2_invariance(d4, c)
        assert rep.status == EXISTS and rep.solutions == [(Fraction(-1), None)]


def test_resultant_audit_flags_inconsistency(a3):
    E = vminus_components(a3.grad)[0]
    notes = resultant_audit(annihilation_system(a3, E), Fraction(-1, 3))
    assert "NOT consistent" in notes[0]
