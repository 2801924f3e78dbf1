"""Exact construction of third-order conformally invariant systems for Heisenberg parabolics."""

from .chevalley import LieElement, StructureTable, bracket, build_chevalley, killing_form
from .errors import (
    ConformalSystemsError,
    DegenerateCharacterEquation,
    NotInLevi,
    NotInvariant,
    NotInVminus,
    NotInVplus,
    UnsupportedAlgebra,
)
from .invariance import (
    SpecialValueReport,
    annihilation_system,
    infinitesimal_s,
    l_action_matrix,
    omega2_invariance,
    solve_special_values,
)
from .omega import Context, c3, omega2, omega3, omega3_tilde
from .parabolic import dchi, deleted_components, gamma_partner, grade, m_coeff, vminus_components
from .polys import PolySC
from .rootsys import AlgebraType, RootSystem, build_root_system, highest_root, inner
from .verma import VermaElement, VermaModule, specialize

__version__ = "0.1.0"

__all__ = [
    "AlgebraType",
    "ConformalSystemsError",
    "Context",
    "DegenerateCharacterEquation",
    "LieElement",
    "NotInLevi",
    "NotInVminus",
    "NotInVplus",
    "NotInvariant",
    "PolySC",
    "RootSystem",
    "SpecialValueReport",
    "StructureTable",
    "UnsupportedAlgebra",
    "VermaElement",
    "VermaModule",
    "annihilation_system",
    "bracket",
    "build_chevalley",
    "build_root_system",
    "c3",
    "dchi",
    "deleted_components",
    "gamma_partner",
    "grade",
    "highest_root",
    "infinitesimal_s",
    "inner",
    "killing_form",
    "l_action_matrix",
    "m_coeff",
    "omega2",
    "omega2_invariance",
    "omega3",
    "omega3_tilde",
    "solve_special_values",
    "specialize",
    "vminus_components",
]
