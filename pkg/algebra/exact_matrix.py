# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Dense matrices over Z[ω, 1/√2].

An N×N matrix is stored as four integer planes ``num[j]`` (the ω^j
coefficients of every entry) over one common denominator √2^k, so that

    M = (num[0] + ω·num[1] + ω²·num[2] + ω³·num[3]) / √2^k.

Products are sixteen integer matmuls. Planes are int64 while a product
bound stays below 2^62 and switch to Python-int object arrays beyond that.
Like RingScalar, every matrix is kept canonical (k minimal), so equality is
plane equality.
"""
from __future__ import annotations

import hashlib
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from algebra.errors import DimensionError, NotUnitary
from algebra.ring_exact import RingScalar, lift_coeffs, mul_coeffs, omega_power_coeffs

_INT64_SAFE = 2 ** 62


def _max_abs(planes: np.ndarray) -> int:
    if planes.size == 0:
        return 0
    return int(np.abs(planes).max())


def _compact(planes: np.ndarray) -> np.ndarray:
    if planes.dtype == object and _max_abs(planes) < _INT64_SAFE:
        return planes.astype(np.int64)
    return planes


def _widen(planes: np.ndarray, bound: int) -> np.ndarray:
    if bound >= _INT64_SAFE and planes.dtype != object:
        return planes.astype(object)
    return planes


def _mul_sqrt2_planes(planes: np.ndarray) -> np.ndarray:
    a, b, c, d = planes
    return np.stack([b - d, a + c, b + d, c - a])


def _normalize_planes(planes: np.ndarray, k: int):
    if not bool(planes.any()):
        return np.zeros(planes.shape, dtype=np.int64), 0
    while k > 0:
        a, b, c, d = planes
        if bool(((a - c) % 2).any()) or bool(((b - d) % 2).any()):
            break
        planes = np.stack([(b - d) // 2, (a + c) // 2, (b + d) // 2, (c - a) // 2])
        k -= 1
    return planes, k


def _lift_planes(planes: np.ndarray, k: int, target: int) -> np.ndarray:
    steps = target - k
    if steps <= 0:
        return planes
    factor = 2 ** (steps // 2)
    planes = _widen(planes, _max_abs(planes) * factor * 4)
    planes = planes * factor
    if steps % 2:
        planes = _mul_sqrt2_planes(planes)
    return planes


def _mul_omega_planes(planes: np.ndarray, j: int) -> np.ndarray:
    """Multiply every entry by ω^j; works on any trailing shape."""
    j %= 8
    negate = j >= 4
    j %= 4
    if j == 0:
        out = planes.copy()
    else:
        out = np.concatenate([-planes[4 - j:], planes[:4 - j]], axis=0)
    return -out if negate else out


def _omega_columns(planes: np.ndarray, powers: np.ndarray) -> np.ndarray:
    """Multiply column c (last axis) by ω^{powers[c]}."""
    powers = np.asarray(powers) % 8
    out = np.empty_like(planes)
    for j in np.unique(powers):
        mask = powers == j
        out[..., mask] = _mul_omega_planes(planes[..., mask], int(j))
    return out


def _product_planes(left: np.ndarray, right: np.ndarray, combine) -> np.ndarray:
    bound = _max_abs(left) * _max_abs(right) * 4 * max(left.shape[-1], 1)
    left = _widen(left, bound)
    right = _widen(right, bound)
    out = None
    active_left = [i for i in range(4) if bool(left[i].any())]
    active_right = [j for j in range(4) if bool(right[j].any())]
    for i in active_left:
        for j in active_right:
            term = combine(left[i], right[j])
            if out is None:
                out = np.zeros((4,) + term.shape, dtype=term.dtype)
            if i + j < 4:
                out[i + j] += term
            else:
                out[i + j - 4] -= term
    if out is None:
        out = np.zeros((4,) + combine(left[0], right[0]).shape, dtype=np.int64)
    return out


def _planes_bytes(planes: np.ndarray) -> bytes:
    if planes.dtype == object:
        return repr(planes.tolist()).encode()
    return np.ascontiguousarray(planes, dtype=np.int64).tobytes()


Scalar = Union[int, RingScalar]


class ExactMatrix:
    """Square matrix of dimension 2^n over Z[ω, 1/√2]."""

    __slots__ = ("_num", "_k", "_fingerprint")

    def __init__(self, num, k: int = 0) -> None:
        planes = np.array(num, copy=True)
        if planes.dtype != object:
            planes = planes.astype(np.int64)
        if planes.ndim != 3 or planes.shape[0] != 4 or planes.shape[1] != planes.shape[2]:
            raise DimensionError(f"expected planes of shape (4, N, N), got {planes.shape}")
        dim = planes.shape[1]
        if dim < 1 or dim & (dim - 1):
            raise DimensionError(f"dimension {dim} is not a power of two")
        if k < 0:
            raise ValueError("denominator exponent k must be non-negative")
        planes, k = _normalize_planes(planes, int(k))
        planes = _compact(planes)
        planes.setflags(write=False)
        self._num = planes
        self._k = k
        self._fingerprint: Optional[str] = None

    @staticmethod
    def _make(planes: np.ndarray, k: int, unitary: bool) -> ExactMatrix:
        if unitary:
            return ExactUnitary(planes, k, check=False)
        return ExactMatrix(planes, k)

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zeros(cls, n: int) -> ExactMatrix:
        dim = 2 ** n
        return ExactMatrix(np.zeros((4, dim, dim), dtype=np.int64))

    @classmethod
    def identity(cls, n: int) -> ExactUnitary:
        dim = 2 ** n
        return ExactMatrix.monomial(np.arange(dim), np.zeros(dim, dtype=np.int64))

    @classmethod
    def monomial(cls, targets: Sequence[int], powers: Sequence[int]) -> ExactUnitary:
        """Matrix with entry ω^{powers[c]} at (targets[c], c); targets must be a permutation."""
        targets = np.asarray(targets, dtype=np.int64)
        powers = np.asarray(powers, dtype=np.int64) % 8
        dim = len(targets)
        if sorted(targets.tolist()) != list(range(dim)):
            raise DimensionError("monomial targets must be a permutation")
        planes = np.zeros((4, dim, dim), dtype=np.int64)
        signs = np.where(powers >= 4, -1, 1)
        planes[powers % 4, targets, np.arange(dim)] = signs
        return ExactUnitary(planes, 0, check=False)

    @classmethod
    def diagonal(cls, powers: Sequence[int]) -> ExactUnitary:
        """Diagonal matrix diag(ω^{p_0}, ω^{p_1}, ...)."""
        return ExactMatrix.monomial(np.arange(len(powers)), powers)

    @classmethod
    def from_entries(cls, rows: Sequence[Sequence[Scalar]]) -> ExactMatrix:
        """Build a matrix from nested rows of ints or RingScalars."""
        entries = [[RingScalar.coerce(v) for v in row] for row in rows]
        dim = len(entries)
        if any(len(row) != dim for row in entries):
            raise DimensionError("matrix must be square")
        k = max((v.k for row in entries for v in row), default=0)
        planes = np.zeros((4, dim, dim), dtype=object)
        for r, row in enumerate(entries):
            for c, value in enumerate(row):
                planes[:, r, c] = value.numerator_at(k)
        return ExactMatrix(planes, k)

    @classmethod
    def block_diagonal(cls, blocks: Sequence[ExactMatrix]) -> ExactMatrix:
        k = max(block.k for block in blocks)
        dim = sum(block.dim for block in blocks)
        planes = np.zeros((4, dim, dim), dtype=object)
        offset = 0
        for block in blocks:
            size = block.dim
            planes[:, offset:offset + size, offset:offset + size] = _lift_planes(block.num, block.k, k)
            offset += size
        unitary = all(isinstance(block, ExactUnitary) for block in blocks)
        return ExactMatrix._make(planes, k, unitary)

    # ------------------------------------------------------------------
    # Accessors
    # ------------------------------------------------------------------
    @property
    def num(self) -> np.ndarray:
        return self._num

    @property
    def k(self) -> int:
        return self._k

    @property
    def dim(self) -> int:
        return self._num.shape[1]

    @property
    def n(self) -> int:
        return self.dim.bit_length() - 1

    def entry(self, row: int, col: int) -> RingScalar:
        coeffs = tuple(int(v) for v in self._num[:, row, col])
        return RingScalar.from_coeffs(coeffs, self._k)

    def rows(self) -> list:
        return [[self.entry(r, c) for c in range(self.dim)] for r in range(self.dim)]

    def __repr__(self) -> str:
        kind = type(self).__name__
        return f"{kind}(n={self.n}, k={self._k})"

    def to_text(self) -> str:
        return "\n".join("  ".join(str(v) for v in row) for row in self.rows())

    def to_json(self) -> list:
        return [[v.to_json() for v in row] for row in self.rows()]

    def to_complex(self) -> np.ndarray:
        """Floating-point copy, for display only."""
        w = np.exp(1j * np.pi / 4)
        planes = self._num.astype(float)
        value = planes[0] + w * planes[1] + w ** 2 * planes[2] + w ** 3 * planes[3]
        return value / np.sqrt(2) ** self._k

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------
    def _check_same_shape(self, other: ExactMatrix):
        if not isinstance(other, ExactMatrix):
            raise TypeError(f"expected ExactMatrix, got {type(other).__name__}")
        if other.dim != self.dim:
            raise DimensionError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def _aligned(self, other: ExactMatrix):
        k = max(self._k, other._k)
        return _lift_planes(self._num, self._k, k), _lift_planes(other._num, other._k, k), k

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_shape(other)
        left, right, k = self._aligned(other)
        return ExactMatrix(left + right, k)

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_shape(other)
        left, right, k = self._aligned(other)
        return ExactMatrix(left - right, k)

    def __neg__(self) -> ExactMatrix:
        return self._make(-self._num, self._k, isinstance(self, ExactUnitary))

    def __matmul__(self, other: ExactMatrix) -> ExactMatrix:
        self._check_same_shape(other)
        planes = _product_planes(self._num, other._num, np.matmul)
        unitary = isinstance(self, ExactUnitary) and isinstance(other, ExactUnitary)
        return self._make(planes, self._k + other._k, unitary)

    def scale(self, scalar: Scalar) -> ExactMatrix:
        """Multiply every entry by a ring element."""
        scalar = RingScalar.coerce(scalar)
        weight = sum(abs(v) for v in scalar.coeffs)
        planes = _widen(self._num, _max_abs(self._num) * max(weight, 1) * 4)
        out = np.zeros_like(planes)
        for j, coeff in enumerate(scalar.coeffs):
            if coeff:
                out = out + coeff * _mul_omega_planes(planes, j)
        unitary = isinstance(self, ExactUnitary) and scalar.abs_squared() == 1
        return self._make(out, self._k + scalar.k, unitary)

    def __mul__(self, scalar: Scalar) -> ExactMatrix:
        if isinstance(scalar, (int, RingScalar)):
            return self.scale(scalar)
        return NotImplemented

    def __rmul__(self, scalar: Scalar) -> ExactMatrix:
        return self.__mul__(scalar)

    def mul_omega(self, j: int) -> ExactMatrix:
        """Global phase ω^j."""
        return self._make(_mul_omega_planes(self._num, j), self._k, isinstance(self, ExactUnitary))

    def dagger(self) -> ExactMatrix:
        a, b, c, d = self._num
        planes = np.stack([a, -d, -c, -b]).transpose(0, 2, 1)
        return self._make(planes, self._k, isinstance(self, ExactUnitary))

    def trace(self) -> RingScalar:
        sums = self._num.diagonal(axis1=1, axis2=2).sum(axis=1)
        return RingScalar.from_coeffs(tuple(int(v) for v in sums), self._k)

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        """Tensor product with ``self`` on the leading (lower-numbered) qubits."""
        planes = _product_planes(self._num, other._num, np.kron)
        unitary = isinstance(self, ExactUnitary) and isinstance(other, ExactUnitary)
        return self._make(planes, self._k + other._k, unitary)

    def controlled(self, controls: int = 1) -> ExactMatrix:
        """C^(controls)(self): identity unless every control qubit (leading) is 1."""
        if controls < 0:
            raise ValueError("number of controls must be non-negative")
        if controls == 0:
            return self
        total = self.dim * 2 ** controls
        planes = np.zeros((4, total, total), dtype=self._num.dtype)
        one = lift_coeffs((1, 0, 0, 0), 0, self._k)
        head = total - self.dim
        for j, value in enumerate(one):
            if value:
                planes[j, np.arange(head), np.arange(head)] = value
        planes[:, head:, head:] = self._num
        return self._make(planes, self._k, isinstance(self, ExactUnitary))

    def right_monomial(self, targets: Sequence[int], powers: Sequence[int]) -> ExactMatrix:
        """Compute M·Q for the monomial Q with ω^{powers[c]} at (targets[c], c)."""
        gathered = self._num[:, :, np.asarray(targets)]
        planes = _omega_columns(gathered, powers)
        return self._make(planes, self._k, isinstance(self, ExactUnitary))

    def monomial_trace(self, targets: Sequence[int], powers: Sequence[int]) -> RingScalar:
        """Tr(Q·M) for the monomial Q with ω^{powers[c]} at (targets[c], c)."""
        columns = np.arange(self.dim)
        values = self._num[:, columns, np.asarray(targets)]
        sums = _omega_columns(values, powers).sum(axis=1)
        return RingScalar.from_coeffs(tuple(int(v) for v in sums), self._k)

    def permute_basis(self, sigma: Sequence[int]) -> ExactMatrix:
        """Relabel basis states: entry (r, c) moves to (sigma[r], sigma[c])."""
        sigma = np.asarray(sigma)
        planes = np.zeros_like(self._num)
        planes[:, sigma[:, None], sigma[None, :]] = self._num
        return self._make(planes, self._k, isinstance(self, ExactUnitary))

    # ------------------------------------------------------------------
    # Predicates
    # ------------------------------------------------------------------
    def is_zero(self) -> bool:
        return not bool(self._num.any())

    def is_identity(self) -> bool:
        if self._k != 0:
            return False
        eye = np.eye(self.dim, dtype=np.int64)
        return (
            np.array_equal(self._num[0], eye)
            and not bool(self._num[1:].any())
        )

    def is_unitary(self) -> bool:
        return (self @ self.dagger()).is_identity()

    def is_hermitian(self) -> bool:
        return self == self.dagger()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return (
            self.dim == other.dim
            and self._k == other._k
            and np.array_equal(self._num, other._num)
        )

    def __hash__(self) -> int:
        return hash((self._k, _planes_bytes(self._num)))

    def equal_up_to_phase(self, other: ExactMatrix) -> bool:
        return self.fingerprint() == other.fingerprint()

    def fingerprint(self) -> str:
        """Digest invariant under global phases ω^j."""
        if self._fingerprint is None:
            flat = self._num.reshape(4, -1)
            support = np.flatnonzero(flat.any(axis=0))
            if support.size == 0:
                canonical = self._num
            else:
                first = tuple(int(v) for v in flat[:, support[0]])
                best = max(range(8), key=lambda j: mul_coeffs(first, omega_power_coeffs(j)))
                canonical = _mul_omega_planes(self._num, best)
            digest = hashlib.blake2b(digest_size=16)
            digest.update(f"{self.dim}:{self._k}:".encode())
            digest.update(_planes_bytes(canonical))
            self._fingerprint = digest.hexdigest()
        return self._fingerprint


class ExactUnitary(ExactMatrix):
    """ExactMatrix known to satisfy U·U† = I.

    Products, daggers, tensor products and unit-phase scalings of unitaries
    stay ExactUnitary without re-checking.
    """

    __slots__ = ()

    def __init__(self, num, k: int = 0, check: bool = True) -> None:
        super().__init__(num, k)
        if check and not self.is_unitary():
            raise NotUnitary("matrix is not unitary")

    @classmethod
    def from_matrix(cls, matrix: ExactMatrix, check: bool = True) -> ExactUnitary:
        if isinstance(matrix, ExactUnitary):
            return matrix
        return cls(matrix.num, matrix.k, check=check)


def product(matrices: Iterable[ExactMatrix]) -> ExactMatrix:
    """Left-to-right product M_1·M_2·...·M_m."""
    result = None
    for matrix in matrices:
        result = matrix if result is None else result @ matrix
    if result is None:
        raise ValueError("empty product")
    return result
