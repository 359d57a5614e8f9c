# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Exact unitary of a parsed circuit."""
from pathlib import Path
from typing import Union

from algebra.exact_matrix import ExactMatrix, ExactUnitary
from algebra.gates import embed, gate_matrix
from circuit.parser import CircuitAST, parse_circuit
from utils.budget import ensure_within_limits


def evaluate(ast: CircuitAST) -> ExactUnitary:
    """U = G_m···G_1 for statements G_1..G_m.

    Raises:
        BudgetExceeded: n above the configured qubit cap
    """
    ensure_within_limits(ast.n)
    u = ExactMatrix.identity(ast.n)
    for op in ast.ops:
        u = embed(gate_matrix(op.name), op.qubits, ast.n) @ u
    return u


def load_circuit(path: Union[str, Path]) -> CircuitAST:
    return parse_circuit(Path(path).read_text(encoding="utf-8"))
