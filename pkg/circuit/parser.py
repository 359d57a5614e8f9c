# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Line-oriented circuit language.

    # comment
    qubits 4
    CZ(1,4)
    CZ(2,3)

Statements apply in order: the first statement acts first on states. A bare
gate name is accepted when the gate covers the whole register.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from algebra.gates import GATE_LIBRARY

HEADER = re.compile(r"^qubits\s+([0-9]+)$", re.IGNORECASE)
QUBIT_INDEX = re.compile(r"[0-9]+")
STATEMENT = re.compile(r"^([A-Za-z][A-Za-z0-9]*)\s*(?:\((.*)\))?$")


class CircuitError(Exception):
    """Base class for circuit input errors, with a source position."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(f"{where}{message}")


class CircuitSyntaxError(CircuitError):
    pass


class UnknownGateError(CircuitError):
    pass


class GateArityError(CircuitError):
    pass


class QubitRangeError(CircuitError):
    pass


class DuplicateQubitError(CircuitError):
    pass


@dataclass(frozen=True)
class GateApplication:
    name: str
    qubits: Tuple[int, ...]
    line: Optional[int] = field(default=None, compare=False)
    column: Optional[int] = field(default=None, compare=False)

    def render(self) -> str:
        return f"{self.name}({','.join(str(q) for q in self.qubits)})"


@dataclass(frozen=True)
class CircuitAST:
    n: int
    ops: Tuple[GateApplication, ...] = ()

    def then(self, other: CircuitAST) -> CircuitAST:
        """This circuit followed by ``other``."""
        if other.n != self.n:
            raise CircuitError(f"cannot concatenate circuits on {self.n} and {other.n} qubits")
        return CircuitAST(self.n, self.ops + other.ops)


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def _parse_qubits(args: str, line: int, column: int) -> List[int]:
    qubits = []
    for part in args.split(","):
        token = part.strip()
        if QUBIT_INDEX.fullmatch(token) is None:
            raise CircuitSyntaxError(f"expected a qubit index, got {token!r}", line, column)
        qubits.append(int(token))
    return qubits


def parse_circuit(text: str) -> CircuitAST:
    """Parse circuit text into an AST.

    Raises:
        CircuitSyntaxError: Missing header or malformed statement
        UnknownGateError: Gate name outside the library
        GateArityError: Wrong number of qubit arguments
        QubitRangeError: Qubit index outside 1..n
        DuplicateQubitError: Same qubit twice in one statement
    """
    n: Optional[int] = None
    ops: List[GateApplication] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = _strip(raw)
        if not body:
            continue
        column = raw.index(body[0]) + 1
        if n is None:
            header = HEADER.match(body)
            if header is None:
                raise CircuitSyntaxError("expected header 'qubits N'", number, column)
            n = int(header.group(1))
            if n < 1:
                raise CircuitSyntaxError("qubit count must be at least 1", number, column)
            continue

        match = STATEMENT.match(body)
        if match is None:
            raise CircuitSyntaxError(f"cannot parse statement {body!r}", number, column)
        name = match.group(1).upper()
        spec = GATE_LIBRARY.get(name)
        if spec is None:
            raise UnknownGateError(f"unknown gate {match.group(1)!r}", number, column)
        args = match.group(2)
        if args is None:
            if spec.arity != n:
                raise GateArityError(
                    f"{name} without arguments needs a {spec.arity}-qubit register", number, column
                )
            qubits = list(range(1, n + 1))
        else:
            qubits = _parse_qubits(args, number, column + match.start(2))
        if len(qubits) != spec.arity:
            raise GateArityError(f"{name} takes {spec.arity} qubits, got {len(qubits)}", number, column)
        for q in qubits:
            if not 1 <= q <= n:
                raise QubitRangeError(f"qubit {q} outside 1..{n}", number, column)
        if len(set(qubits)) != len(qubits):
            raise DuplicateQubitError(f"{name} repeats a qubit in {tuple(qubits)}", number, column)
        ops.append(GateApplication(name, tuple(qubits), number, column))

    if n is None:
        raise CircuitSyntaxError("empty circuit: expected header 'qubits N'", 1, 1)
    return CircuitAST(n, tuple(ops))


def render_circuit(ast: CircuitAST) -> str:
    """Canonical text form; parse_circuit(render_circuit(a)) == a."""
    lines = [f"qubits {ast.n}"] + [op.render() for op in ast.ops]
    return "\n".join(lines) + "\n"
