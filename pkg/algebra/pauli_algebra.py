# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""The n-qubit Pauli group in normal form i^c · X(x) · Z(z).

Qubit 1 is the leftmost tensor factor: in the bit masks ``x`` and ``z`` it
is the most significant of the n bits, and in symplectic vectors
``v = (x_1..x_n | z_1..z_n)`` it is position 0 of each half.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from algebra.errors import DimensionError
from algebra.exact_matrix import ExactMatrix, ExactUnitary
from algebra.ring_exact import RingScalar


def _popcount(value: int) -> int:
    return bin(value).count("1")


def bits_of(mask: int, n: int) -> np.ndarray:
    """Mask to a length-n 0/1 array, qubit 1 first."""
    return np.array([(mask >> (n - 1 - j)) & 1 for j in range(n)], dtype=np.uint8)


def mask_of(bits: Sequence[int]) -> int:
    n = len(bits)
    return sum((int(b) & 1) << (n - 1 - j) for j, b in enumerate(bits))


@dataclass(frozen=True, slots=True)
class PauliOp:
    """i^c · X(x) · Z(z) on n qubits; x and z are bit masks, qubit 1 most significant."""

    n: int
    x: int
    z: int
    c: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise DimensionError("a Pauli operator needs at least one qubit")
        limit = 1 << self.n
        if not (0 <= self.x < limit and 0 <= self.z < limit):
            raise DimensionError(f"masks x={self.x}, z={self.z} do not fit {self.n} qubits")
        object.__setattr__(self, "c", self.c % 4)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> PauliOp:
        return cls(n, 0, 0, 0)

    @classmethod
    def from_bits(cls, x_bits: Sequence[int], z_bits: Sequence[int], c: int = 0) -> PauliOp:
        if len(x_bits) != len(z_bits):
            raise DimensionError("x and z parts must have equal length")
        return cls(len(x_bits), mask_of(x_bits), mask_of(z_bits), c)

    @classmethod
    def from_vector(cls, v: Sequence[int], c: int = 0) -> PauliOp:
        v = np.asarray(v, dtype=np.uint8) % 2
        if v.ndim != 1 or len(v) % 2:
            raise DimensionError(f"symplectic vector must have even length, got {len(v)}")
        n = len(v) // 2
        return cls.from_bits(v[:n], v[n:], c)

    @classmethod
    def from_label(cls, text: str) -> PauliOp:
        """Parse ``[+|-|−][i]`` followed by letters over {I, X, Y, Z}, qubit 1 first."""
        match = re.fullmatch(r"\s*([+\-−]?)(i?)([IXYZ]+)\s*", text)
        if match is None:
            raise ValueError(f"not a Pauli label: {text!r}")
        sign, imag, letters = match.groups()
        power = (2 if sign in ("-", "−") else 0) + (1 if imag else 0)
        x_bits = [1 if ch in "XY" else 0 for ch in letters]
        z_bits = [1 if ch in "ZY" else 0 for ch in letters]
        return cls.from_bits(x_bits, z_bits, power + letters.count("Y"))

    # ------------------------------------------------------------------
    # Views
    # ------------------------------------------------------------------
    @property
    def x_bits(self) -> np.ndarray:
        return bits_of(self.x, self.n)

    @property
    def z_bits(self) -> np.ndarray:
        return bits_of(self.z, self.n)

    def vector(self) -> np.ndarray:
        """Phaseless part as a symplectic vector (x | z)."""
        return np.concatenate([self.x_bits, self.z_bits])

    def label(self) -> str:
        letters = []
        for xb, zb in zip(self.x_bits, self.z_bits):
            letters.append({(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}[(int(xb), int(zb))])
        word = "".join(letters)
        prefix = ("", "i", "-", "-i")[(self.c - word.count("Y")) % 4]
        return prefix + word

    def __str__(self) -> str:
        return self.label()

    def to_json(self) -> dict:
        return {
            "x": format(self.x, f"0{self.n}b"),
            "z": format(self.z, f"0{self.n}b"),
            "c": self.c,
        }

    def phaseless(self) -> PauliOp:
        return PauliOp(self.n, self.x, self.z, 0)

    def with_phase(self, power: int) -> PauliOp:
        """Multiply by i^power."""
        return PauliOp(self.n, self.x, self.z, self.c + power)

    def __mul__(self, other: PauliOp) -> PauliOp:
        return pauli_mul(self, other)

    def __neg__(self) -> PauliOp:
        return self.with_phase(2)

    def to_matrix(self) -> ExactUnitary:
        return pauli_to_matrix(self)


class PauliMatch(NamedTuple):
    """Result of detect_pauli: M = phase · pauli with pauli Hermitian."""

    pauli: PauliOp
    phase: RingScalar
    i_power: int

    def signed(self) -> PauliOp:
        """Fold the phase into the normal form."""
        return self.pauli.with_phase(self.i_power)


# ----------------------------------------------------------------------
# Group operations
# ----------------------------------------------------------------------
def _same_size(p: PauliOp, q: PauliOp):
    if p.n != q.n:
        raise DimensionError(f"Pauli operators on {p.n} and {q.n} qubits")


def pauli_mul(p: PauliOp, q: PauliOp) -> PauliOp:
    """Exact product; moving Z(z1) past X(x2) costs (-1)^{z1·x2}."""
    _same_size(p, q)
    return PauliOp(p.n, p.x ^ q.x, p.z ^ q.z, p.c + q.c + 2 * _popcount(p.z & q.x))


def symplectic_inner(u: Sequence[int], v: Sequence[int]) -> int:
    """⟨(a,b),(c,d)⟩ = a·d + b·c mod 2."""
    u = np.asarray(u, dtype=np.int64)
    v = np.asarray(v, dtype=np.int64)
    if u.shape != v.shape or u.ndim != 1 or len(u) % 2:
        raise DimensionError(f"symplectic vectors of lengths {u.shape} and {v.shape}")
    n = len(u) // 2
    return int((u[:n] @ v[n:] + u[n:] @ v[:n]) % 2)


def anticommutes(p: PauliOp, q: PauliOp) -> bool:
    _same_size(p, q)
    return bool((_popcount(p.x & q.z) + _popcount(p.z & q.x)) % 2)


def commutes(p: PauliOp, q: PauliOp) -> bool:
    return not anticommutes(p, q)


def is_hermitian(p: PauliOp) -> bool:
    """(i^c XZ)† = i^{-c} (-1)^{x·z} XZ, so Hermitian iff c ≡ x·z (mod 2)."""
    return p.c % 2 == _popcount(p.x & p.z) % 2


def hermitian_rep(v: Sequence[int]) -> PauliOp:
    """E(v): the tensor product of I/X/Y/Z letters with phaseless part v."""
    p = PauliOp.from_vector(v)
    return p.with_phase(_popcount(p.x & p.z))


def single_qubit(kind: str, qubit: int, n: int) -> PauliOp:
    """X_i, Y_i or Z_i (1-based qubit) on n qubits."""
    if not 1 <= qubit <= n:
        raise DimensionError(f"qubit {qubit} outside 1..{n}")
    mask = 1 << (n - qubit)
    if kind == "X":
        return PauliOp(n, mask, 0)
    if kind == "Z":
        return PauliOp(n, 0, mask)
    if kind == "Y":
        return PauliOp(n, mask, mask, 1)
    raise ValueError(f"unknown single-qubit Pauli {kind!r}")


def pauli_generators(n: int) -> Tuple[PauliOp, ...]:
    """X_1..X_n then Z_1..Z_n."""
    return tuple(single_qubit("X", i, n) for i in range(1, n + 1)) + tuple(
        single_qubit("Z", i, n) for i in range(1, n + 1)
    )


def enumerate_pauli_classes(n: int) -> Iterator[PauliOp]:
    """One c = 0 representative per phaseless class; z outer, x inner."""
    if n < 1:
        raise DimensionError("n must be at least 1")
    for z in range(1 << n):
        for x in range(1 << n):
            yield PauliOp(n, x, z, 0)


# ----------------------------------------------------------------------
# Dense matrices
# ----------------------------------------------------------------------
def _parity_with(mask: int, n: int) -> np.ndarray:
    """(-1)-exponent parity(mask & y) for every basis index y."""
    indices = np.arange(1 << n, dtype=np.int64)
    parity = np.zeros(1 << n, dtype=np.int64)
    for bit in range(n):
        if (mask >> bit) & 1:
            parity ^= (indices >> bit) & 1
    return parity


@lru_cache(maxsize=4096)
def _monomial_data(n: int, x: int, z: int, c: int):
    indices = np.arange(1 << n, dtype=np.int64)
    targets = indices ^ x
    powers = (2 * c + 4 * _parity_with(z, n)) % 8
    targets.setflags(write=False)
    powers.setflags(write=False)
    return targets, powers


def pauli_monomial(p: PauliOp) -> Tuple[np.ndarray, np.ndarray]:
    """Column c of the matrix holds ω^{powers[c]} at row targets[c]."""
    return _monomial_data(p.n, p.x, p.z, p.c)


def pauli_to_matrix(p: PauliOp) -> ExactUnitary:
    targets, powers = pauli_monomial(p)
    return ExactMatrix.monomial(targets, powers)


def detect_pauli(matrix: ExactMatrix) -> Optional[PauliMatch]:
    """Recognise matrix = phase · E with E a Hermitian Pauli and phase in {±1, ±i}."""
    if matrix.k != 0:
        return None
    planes = matrix.num
    dim = matrix.dim
    n = matrix.n
    support = planes.any(axis=0).astype(bool)
    rows = np.flatnonzero(support[:, 0])
    if rows.size != 1:
        return None
    x = int(rows[0])
    columns = np.arange(dim)
    targets = columns ^ x
    expected = np.zeros((dim, dim), dtype=bool)
    expected[targets, columns] = True
    if not np.array_equal(support, expected):
        return None

    values = planes[:, targets, columns]
    powers = np.full(dim, -1, dtype=np.int64)
    for plane, base in ((0, 0), (2, 2)):
        others = [j for j in range(4) if j != plane]
        pure = ~values[others].any(axis=0).astype(bool)
        powers[pure & (values[plane] == 1)] = base
        powers[pure & (values[plane] == -1)] = base + 4
    if (powers < 0).any():
        return None

    base_power = int(powers[0])
    z = 0
    for qubit in range(1, n + 1):
        column = 1 << (n - qubit)
        if (powers[column] - base_power) % 8 == 4:
            z |= column
    if not np.array_equal(powers, (base_power + 4 * _parity_with(z, n)) % 8):
        return None

    pauli = hermitian_rep(np.concatenate([bits_of(x, n), bits_of(z, n)]))
    phase_power = (base_power - 2 * _popcount(x & z)) % 8
    return PauliMatch(pauli, RingScalar.omega(phase_power), phase_power // 2)


def is_pauli_up_to_phase(matrix: ExactMatrix) -> bool:
    """True iff matrix = ζ·P for a Pauli P and any ζ = ω^j."""
    return detect_pauli(matrix) is not None or detect_pauli(matrix.mul_omega(7)) is not None
