# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Exceptions raised by the exact algebra and the analyzers."""


class ClimbError(Exception):
    """Base class for precondition failures on gates, Paulis and symplectic data."""
    pass


class DimensionError(ClimbError):
    """Operands act on different numbers of qubits or have the wrong shape."""
    pass


class NotUnitary(ClimbError):
    pass


class NotHermitian(ClimbError):
    pass


class NotClifford(ClimbError):
    """A Pauli conjugate is not a signed Pauli."""
    pass


class NotSymplectic(ClimbError):
    pass


class NotHyperbolic(ClimbError):
    pass


class NotInvolution(ClimbError):
    pass


class NotIndependent(ClimbError):
    pass


class NotIsotropic(ClimbError):
    pass


class NotCommuting(ClimbError):
    pass


class NotSymmetric(ClimbError):
    pass


class NotInvertible(ClimbError):
    pass


class DecompositionNotFound(ClimbError):
    pass


class OrderNotTwoOrFour(ClimbError):
    """C² is not ±I, so the controlled-lift rule does not apply.

    ``controlled_in_level3`` records the direct level-3 check of C(C) made
    before rejecting.
    """

    def __init__(self, message: str, controlled_in_level3: bool = None):
        super().__init__(message)
        self.controlled_in_level3 = controlled_in_level3
