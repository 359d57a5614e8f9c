"""Circuit description language."""
from circuit.parser import (
    CircuitAST,
    GateApplication,
    CircuitError,
    CircuitSyntaxError,
    UnknownGateError,
    GateArityError,
    QubitRangeError,
    DuplicateQubitError,
    parse_circuit,
    render_circuit,
)
from circuit.evaluator import evaluate, load_circuit

__all__ = [
    "CircuitAST",
    "GateApplication",
    "CircuitError",
    "CircuitSyntaxError",
    "UnknownGateError",
    "GateArityError",
    "QubitRangeError",
    "DuplicateQubitError",
    "parse_circuit",
    "render_circuit",
    "evaluate",
    "load_circuit",
]
