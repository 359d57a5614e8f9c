# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Clifford engine, hierarchy analyzer, verification suites and survey."""
from engine.clifford_engine import (
    CliffordRep,
    PauliExpansion,
    FamilyMember,
    symplectic_of,
    conjugate_pauli,
    clifford_transvection,
    clifford_from_symplectic,
    pauli_expand,
    diagonalizer,
    diagonal_clifford,
    permutation_clifford,
    enumerate_climber_family,
    family_count,
)
from engine.hierarchy_analyzer import (
    hat,
    controlled,
    level_at_most,
    min_level,
    counter_obstruction,
    climb_verdict,
    verify_tcnot_rules,
    lift_controlled,
)
from engine.verification import run_suite, SUITES
from engine.survey import run_survey

__all__ = [
    "CliffordRep",
    "PauliExpansion",
    "FamilyMember",
    "symplectic_of",
    "conjugate_pauli",
    "clifford_transvection",
    "clifford_from_symplectic",
    "pauli_expand",
    "diagonalizer",
    "diagonal_clifford",
    "permutation_clifford",
    "enumerate_climber_family",
    "family_count",
    "hat",
    "controlled",
    "level_at_most",
    "min_level",
    "counter_obstruction",
    "climb_verdict",
    "verify_tcnot_rules",
    "lift_controlled",
    "run_suite",
    "SUITES",
    "run_survey",
]
