# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Exact algebra: ring, dense matrices, Paulis, GF(2) symplectic group, gates."""
from algebra.errors import ClimbError
from algebra.ring_exact import RingScalar, ring_arith, ring_const
from algebra.exact_matrix import ExactMatrix, ExactUnitary
from algebra.pauli_algebra import (
    PauliOp,
    pauli_mul,
    symplectic_inner,
    is_hermitian,
    hermitian_rep,
    pauli_to_matrix,
    enumerate_pauli_classes,
    detect_pauli,
)
from algebra.symplectic_core import (
    SymplecticMatrix,
    ResidueSpace,
    gf2_rowspace,
    is_hyperbolic,
    transvection,
    residue_space,
    is_involution,
    decompose_involution,
    symplectic_complete,
)
from algebra.gates import gate_matrix, embed, on_qubits

__all__ = [
    "ClimbError",
    "RingScalar",
    "ring_arith",
    "ring_const",
    "ExactMatrix",
    "ExactUnitary",
    "PauliOp",
    "pauli_mul",
    "symplectic_inner",
    "is_hermitian",
    "hermitian_rep",
    "pauli_to_matrix",
    "enumerate_pauli_classes",
    "detect_pauli",
    "SymplecticMatrix",
    "ResidueSpace",
    "gf2_rowspace",
    "is_hyperbolic",
    "transvection",
    "residue_space",
    "is_involution",
    "decompose_involution",
    "symplectic_complete",
    "gate_matrix",
    "embed",
    "on_qubits",
]
