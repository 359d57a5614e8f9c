# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Named gates and their placement on chosen qubits of an n-qubit register."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, Sequence

import numpy as np

from algebra.errors import DimensionError
from algebra.exact_matrix import ExactMatrix, ExactUnitary
from algebra.ring_exact import INV_SQRT2


def identity(n: int = 1) -> ExactUnitary:
    return ExactMatrix.identity(n)


def pauli_x() -> ExactUnitary:
    return ExactMatrix.monomial([1, 0], [0, 0])


def pauli_y() -> ExactUnitary:
    return ExactMatrix.monomial([1, 0], [2, 6])


def pauli_z() -> ExactUnitary:
    return ExactMatrix.diagonal([0, 4])


def hadamard() -> ExactUnitary:
    return ExactUnitary.from_matrix(
        ExactMatrix.from_entries([[1, 1], [1, -1]]).scale(INV_SQRT2)
    )


def phase_s() -> ExactUnitary:
    return ExactMatrix.diagonal([0, 2])


def phase_sdg() -> ExactUnitary:
    return ExactMatrix.diagonal([0, 6])


def r_gate() -> ExactUnitary:
    """R = H S† H = ½[[1-i, 1+i], [1+i, 1-i]], the square root of X up to phase."""
    h = hadamard()
    return h @ phase_sdg() @ h


def swap() -> ExactUnitary:
    return ExactMatrix.monomial([0, 2, 1, 3], [0, 0, 0, 0])


@dataclass(frozen=True)
class GateSpec:
    name: str
    arity: int
    factory: Callable[[], ExactUnitary]


GATE_LIBRARY: Dict[str, GateSpec] = {
    spec.name: spec
    for spec in (
        GateSpec("X", 1, pauli_x),
        GateSpec("Y", 1, pauli_y),
        GateSpec("Z", 1, pauli_z),
        GateSpec("H", 1, hadamard),
        GateSpec("S", 1, phase_s),
        GateSpec("SDG", 1, phase_sdg),
        GateSpec("R", 1, r_gate),
        GateSpec("CX", 2, lambda: pauli_x().controlled(1)),
        GateSpec("CZ", 2, lambda: pauli_z().controlled(1)),
        GateSpec("SWAP", 2, swap),
        GateSpec("CCX", 3, lambda: pauli_x().controlled(2)),
        GateSpec("CCZ", 3, lambda: pauli_z().controlled(2)),
        GateSpec("CSWAP", 3, lambda: swap().controlled(1)),
        GateSpec("CCCX", 4, lambda: pauli_x().controlled(3)),
    )
}


@lru_cache(maxsize=None)
def gate_matrix(name: str) -> ExactUnitary:
    """Matrix of a library gate (name is case-insensitive)."""
    key = name.upper()
    if key not in GATE_LIBRARY:
        raise KeyError(f"unknown gate {name!r}")
    return GATE_LIBRARY[key].factory()


def embed(gate: ExactMatrix, qubits: Sequence[int], n: int) -> ExactMatrix:
    """Place a k-qubit gate on the listed (1-based) qubits of an n-qubit register.

    ``qubits[j]`` receives the gate's j-th tensor factor, so CX on (3, 1)
    is controlled by qubit 3.
    """
    qubits = [int(q) for q in qubits]
    if 2 ** len(qubits) != gate.dim:
        raise DimensionError(f"gate acts on {gate.n} qubits, got {len(qubits)} positions")
    if len(set(qubits)) != len(qubits) or not all(1 <= q <= n for q in qubits):
        raise DimensionError(f"invalid qubit positions {qubits} for n={n}")
    rest = n - len(qubits)
    full = gate.kron(identity(rest)) if rest else gate
    order = qubits + [q for q in range(1, n + 1) if q not in qubits]
    if order == list(range(1, n + 1)):
        return full
    indices = np.arange(2 ** n, dtype=np.int64)
    sigma = np.zeros(2 ** n, dtype=np.int64)
    for j, qubit in enumerate(order):
        bit = (indices >> (n - 1 - j)) & 1
        sigma |= bit << (n - qubit)
    return full.permute_basis(sigma)


def on_qubits(name: str, *qubits: int, n: int) -> ExactMatrix:
    """Library gate ``name`` placed on ``qubits`` of n."""
    return embed(gate_matrix(name), qubits, n)


def kron_all(*gates: ExactMatrix) -> ExactMatrix:
    result = gates[0]
    for gate in gates[1:]:
        result = result.kron(gate)
    return result
