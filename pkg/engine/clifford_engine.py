# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Clifford gates as symplectic data plus phases.

Extraction of F_C from a dense unitary, synthesis of a representative from
F, Clifford transvections, exact Pauli expansions, the two-Pauli
diagonalizer and the diagonal / permutation climber families.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from algebra.errors import (
    DimensionError,
    DecompositionNotFound,
    NotClifford,
    NotCommuting,
    NotHermitian,
    NotIndependent,
    NotSymmetric,
)
from algebra.exact_matrix import ExactMatrix, ExactUnitary
from algebra.pauli_algebra import (
    PauliOp,
    anticommutes,
    detect_pauli,
    enumerate_pauli_classes,
    hermitian_rep,
    is_hermitian,
    pauli_generators,
    pauli_monomial,
    pauli_to_matrix,
    single_qubit,
)
from algebra.ring_exact import INV_SQRT2, RingScalar
from algebra.symplectic_core import (
    SymplecticMatrix,
    all_vectors,
    bitstring,
    gf2_inverse,
    gf2_matmul,
    gf2_rank,
    residue_space,
    symplectic_complete,
    transvection_factors,
)


def conjugate_pauli(u: ExactMatrix, p: PauliOp, u_dag: Optional[ExactMatrix] = None) -> ExactMatrix:
    """U·P·U† using the monomial structure of P."""
    if u_dag is None:
        u_dag = u.dagger()
    targets, powers = pauli_monomial(p)
    return u.right_monomial(targets, powers) @ u_dag


def _as_unitary(u: ExactMatrix) -> ExactUnitary:
    return ExactUnitary.from_matrix(u)


# ----------------------------------------------------------------------
# Symplectic representation
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class CliffordRep:
    """F_C together with the signed images of X_1..X_n, Z_1..Z_n."""

    n: int
    F: SymplecticMatrix
    images: Tuple[PauliOp, ...]

    def to_json(self) -> dict:
        return {
            "F": self.F.to_bitstrings(),
            "images": [p.label() for p in self.images],
        }


def symplectic_of(u: ExactMatrix) -> CliffordRep:
    """Read F_C off the conjugates of the 2n generators."""
    u = _as_unitary(u)
    u_dag = u.dagger()
    images = []
    for g in pauli_generators(u.n):
        match = detect_pauli(conjugate_pauli(u, g, u_dag))
        if match is None or match.i_power % 2:
            raise NotClifford(f"conjugate of {g.label()} is not a signed Pauli")
        images.append(match.signed())
    f = SymplecticMatrix(np.array([p.vector() for p in images]))
    return CliffordRep(n=u.n, F=f, images=tuple(images))


def is_clifford(u: ExactMatrix) -> bool:
    try:
        symplectic_of(u)
    except NotClifford:
        return False
    return True


def clifford_transvection(v: Sequence[int], sign: int = 1) -> ExactUnitary:
    """C_v = (I ± i·E(v))/√2."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    e = pauli_to_matrix(hermitian_rep(v))
    root = (ExactMatrix.identity(e.n) + e.mul_omega(2 * sign)).scale(INV_SQRT2)
    return ExactUnitary.from_matrix(root, check=False)


def clifford_from_symplectic(f: SymplecticMatrix) -> ExactUnitary:
    """C_{h_1}···C_{h_m} for the transvection factorization F = T_{h_m}···T_{h_1}."""
    u = ExactMatrix.identity(f.n)
    for h in transvection_factors(f):
        u = u @ clifford_transvection(h)
    return u


def match_up_to_pauli(u: ExactMatrix, v: ExactMatrix) -> Optional[Tuple[PauliOp, RingScalar]]:
    """(P, ζ) with U = ζ·P·V, or None."""
    quotient = u @ v.dagger()
    for j in range(8):
        match = detect_pauli(quotient.mul_omega(j))
        if match is not None:
            return match.signed(), RingScalar.omega(-j)
    return None


def hermitian_lift(f: SymplecticMatrix) -> Optional[ExactUnitary]:
    """A Hermitian Clifford with symplectic matrix F, if one exists."""
    base = clifford_from_symplectic(f)
    for p in enumerate_pauli_classes(f.n):
        candidate = pauli_to_matrix(p) @ base
        for j in range(8):
            rotated = candidate.mul_omega(j)
            if rotated.is_hermitian():
                return rotated
    return None


# ----------------------------------------------------------------------
# Pauli expansion
# ----------------------------------------------------------------------
def pauli_trace(u: ExactMatrix, e: PauliOp) -> RingScalar:
    """Tr(E·U)."""
    targets, powers = pauli_monomial(e)
    return u.monomial_trace(targets, powers)


@dataclass(frozen=True)
class PauliExpansion:
    """U = Σ α_E·E over Hermitian Paulis E with exact α_E = Tr(E·U)/2^n."""

    n: int
    r: Optional[int]
    terms: Tuple[Tuple[PauliOp, RingScalar], ...]
    subgroup: bool

    def reconstruct(self) -> ExactMatrix:
        total = ExactMatrix.zeros(self.n)
        for e, alpha in self.terms:
            total = total + pauli_to_matrix(e).scale(alpha)
        return total

    def magnitudes(self) -> List[RingScalar]:
        """Distinct |α_E|², smallest first."""
        values = {alpha.abs_squared() for _, alpha in self.terms}
        return sorted(values, key=lambda s: s.to_complex().real)

    def coefficient(self, e: PauliOp) -> RingScalar:
        for term, alpha in self.terms:
            if term.x == e.x and term.z == e.z:
                return alpha
        return RingScalar()


def _closed_under_xor(keys: set) -> bool:
    if (0, 0) not in keys:
        return False
    return all((x1 ^ x2, z1 ^ z2) in keys for x1, z1 in keys for x2, z2 in keys)


def pauli_expand(u: ExactMatrix) -> PauliExpansion:
    n = u.n
    terms = []
    for p in enumerate_pauli_classes(n):
        e = hermitian_rep(p.vector())
        trace = pauli_trace(u, e)
        if trace.is_zero():
            continue
        alpha = RingScalar.from_coeffs(trace.coeffs, trace.k + 2 * n)
        terms.append((e, alpha))
    try:
        r = residue_space(symplectic_of(u).F).dim
    except NotClifford:
        r = None
    keys = {(e.x, e.z) for e, _ in terms}
    return PauliExpansion(n=n, r=r, terms=tuple(terms), subgroup=_closed_under_xor(keys))


# ----------------------------------------------------------------------
# Diagonalizer
# ----------------------------------------------------------------------
def diagonalizer(e1: PauliOp, e2: PauliOp) -> ExactUnitary:
    """Clifford C₁ with C₁E₁C₁† = Z₁ and C₁E₂C₁† = Z₂ exactly."""
    if e1.n != e2.n:
        raise DimensionError("Paulis act on different registers")
    for e in (e1, e2):
        if not is_hermitian(e):
            raise NotHermitian(f"{e.label()} is not Hermitian")
    if anticommutes(e1, e2):
        raise NotCommuting(f"{e1.label()} and {e2.label()} anticommute")
    v1, v2 = e1.vector(), e2.vector()
    if gf2_rank(np.array([v1, v2])) < 2:
        raise NotIndependent("the Paulis are dependent up to sign")
    n = e1.n
    c1 = clifford_from_symplectic(symplectic_complete([v1, v2]))

    flip = 0
    for e, qubit in ((e1, 1), (e2, 2)):
        image = detect_pauli(conjugate_pauli(c1, e)).signed()
        if image == single_qubit("Z", qubit, n).with_phase(2):
            flip |= 1 << (n - qubit)
    if flip:
        c1 = pauli_to_matrix(PauliOp(n, flip, 0)) @ c1

    for e, qubit in ((e1, 1), (e2, 2)):
        if conjugate_pauli(c1, e) != pauli_to_matrix(single_qubit("Z", qubit, n)):
            raise DecompositionNotFound("sign correction failed")
    return c1


# ----------------------------------------------------------------------
# Diagonal and permutation Cliffords
# ----------------------------------------------------------------------
def _basis_index(bits: np.ndarray) -> np.ndarray:
    n = bits.shape[-1]
    weights = 1 << np.arange(n - 1, -1, -1, dtype=np.int64)
    return bits.astype(np.int64) @ weights


def diagonal_clifford(a) -> ExactUnitary:
    """diag(i^{x A xᵀ mod 4}) for symmetric A."""
    a = np.asarray(a, dtype=np.int64) % 2
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError("A must be square")
    if not np.array_equal(a, a.T):
        raise NotSymmetric("A is not symmetric")
    x = all_vectors(a.shape[0]).astype(np.int64)
    quadratic = np.einsum("si,ij,sj->s", x, a, x) % 4
    return ExactMatrix.diagonal(2 * quadratic)


def permutation_clifford(b) -> ExactUnitary:
    """|x⟩ ↦ |xB⟩ for invertible B."""
    b = np.asarray(b, dtype=np.uint8) % 2
    gf2_inverse(b)
    x = all_vectors(b.shape[0])
    targets = _basis_index(gf2_matmul(x, b))
    return ExactMatrix.monomial(targets, np.zeros(len(targets), dtype=np.int64))


@dataclass(frozen=True)
class FamilyMember:
    """A gate of the diagonal or permutation family with its parameter matrix."""

    family: str
    parameter: np.ndarray
    unitary: ExactUnitary
    residue_dim: int

    @property
    def label(self) -> str:
        prefix = "A" if self.family == "diagonal" else "B"
        return f"{prefix}=" + "|".join(bitstring(row) for row in self.parameter)

    def matrix_rows(self) -> List[str]:
        return [bitstring(row) for row in self.parameter]


FAMILIES = ("diagonal", "permutation")


def family_count(family: str, n: int) -> int:
    """Closed-form size of the climbing family."""
    if family == "diagonal":
        return (2 ** n - 1) * (2 ** n - 2) // 6
    if family == "permutation":
        return (2 ** n - 1) * (2 ** (n - 1) - 1)
    raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")


def symmetric_zero_diagonal(n: int) -> Iterator[np.ndarray]:
    """Every symmetric n×n binary matrix with zero diagonal."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for code in range(1 << len(pairs)):
        a = np.zeros((n, n), dtype=np.uint8)
        for bit, (i, j) in enumerate(pairs):
            if (code >> bit) & 1:
                a[i, j] = a[j, i] = 1
        yield a


def involutive_matrices(n: int) -> Iterator[np.ndarray]:
    """Every B in GL(n, 2) with B² = I."""
    eye = np.eye(n, dtype=np.uint8)
    for code in range(1 << (n * n)):
        b = ((code >> np.arange(n * n - 1, -1, -1)) & 1).astype(np.uint8).reshape(n, n)
        if np.array_equal(gf2_matmul(b, b), eye):
            yield b


def _diagonal_members(n: int) -> Iterator[FamilyMember]:
    for a in symmetric_zero_diagonal(n):
        if gf2_rank(a) == 2:
            yield FamilyMember("diagonal", a, diagonal_clifford(a), 2)


def _permutation_members(n: int) -> Iterator[FamilyMember]:
    eye = np.eye(n, dtype=np.uint8)
    seen = set()
    vectors = all_vectors(n)[1:]
    for w in vectors:
        for u in vectors:
            if int(u.astype(np.int64) @ w.astype(np.int64)) % 2:
                continue
            b = (eye + np.outer(u, w)) % 2
            key = b.tobytes()
            if key in seen:
                continue
            seen.add(key)
            yield FamilyMember("permutation", b.astype(np.uint8), permutation_clifford(b), 2)


def enumerate_climber_family(family: str, n: int) -> Tuple[Iterator[FamilyMember], int]:
    """Stream of the family's gates and the closed-form count."""
    count = family_count(family, n)
    if family == "diagonal":
        return _diagonal_members(n), count
    return _permutation_members(n), count


def hermitian_diagonal_members(n: int) -> Iterator[FamilyMember]:
    """Every Hermitian diagonal Clifford diag(i^{xAxᵀ}), any rank."""
    for a in symmetric_zero_diagonal(n):
        yield FamilyMember("diagonal", a, diagonal_clifford(a), gf2_rank(a))


def hermitian_permutation_members(n: int) -> Iterator[FamilyMember]:
    """Every Hermitian permutation Clifford |x⟩ ↦ |xB⟩, B² = I."""
    eye = np.eye(n, dtype=np.uint8)
    for b in involutive_matrices(n):
        yield FamilyMember("permutation", b, permutation_clifford(b), 2 * gf2_rank((b + eye) % 2))


# ----------------------------------------------------------------------
# Random Cliffords
# ----------------------------------------------------------------------
def random_clifford(n: int, rng: np.random.Generator, length: Optional[int] = None) -> ExactUnitary:
    """Product of random Clifford transvections and a random Pauli."""
    length = 2 * n + 2 if length is None else length
    x, z = (int(v) for v in rng.integers(0, 1 << n, size=2))
    u = pauli_to_matrix(PauliOp(n, x, z))
    for _ in range(length):
        v = rng.integers(0, 2, size=2 * n, dtype=np.uint8)
        u = u @ clifford_transvection(v, 1 if rng.integers(0, 2) else -1)
    return u


def random_hermitian_clifford(n: int, rng: np.random.Generator) -> ExactUnitary:
    """W·D·W† with D a Hermitian diagonal Clifford times a Z-type Pauli."""
    a = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8), 1)
    a = (a + a.T) % 2
    z = int(rng.integers(0, 1 << n))
    d = diagonal_clifford(a) @ pauli_to_matrix(PauliOp(n, 0, z))
    w = random_clifford(n, rng)
    return w @ d @ w.dagger()
