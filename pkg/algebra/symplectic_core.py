# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Linear algebra over GF(2) and the binary symplectic group Sp(2n).

Binary matrices are ``np.uint8`` arrays with entries in {0, 1}. Vectors are
rows and matrices act on the right: a symplectic matrix F sends v to vF,
and the symplectic form is ⟨u, v⟩ = u Ω vᵀ with Ω = [[0, I], [I, 0]].
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from algebra.errors import (
    DecompositionNotFound,
    DimensionError,
    NotHyperbolic,
    NotIndependent,
    NotInvertible,
    NotInvolution,
    NotIsotropic,
    NotSymplectic,
)
from algebra.pauli_algebra import symplectic_inner
from utils.budget import BudgetExceeded

BinMatrix = np.ndarray


def as_bin(matrix) -> BinMatrix:
    return np.asarray(matrix, dtype=np.uint8) % 2


def int_to_bits(value: int, length: int) -> np.ndarray:
    """Bits of ``value``, most significant first."""
    return np.array([(value >> (length - 1 - j)) & 1 for j in range(length)], dtype=np.uint8)


def all_vectors(length: int) -> np.ndarray:
    """Every vector of F_2^length as rows, in counting order."""
    codes = np.arange(1 << length, dtype=np.int64)
    shifts = np.arange(length - 1, -1, -1, dtype=np.int64)
    return ((codes[:, None] >> shifts[None, :]) & 1).astype(np.uint8)


def bitstring(v: Sequence[int]) -> str:
    return "".join(str(int(b)) for b in v)


# ----------------------------------------------------------------------
# General GF(2) linear algebra
# ----------------------------------------------------------------------
def gf2_row_reduce(matrix, n_pivot_cols: Optional[int] = None) -> Tuple[BinMatrix, List[int]]:
    """Reduced row echelon form; pivots are searched in the first ``n_pivot_cols`` columns."""
    reduced = as_bin(matrix).copy()
    if reduced.ndim != 2:
        raise DimensionError("expected a 2-D binary matrix")
    rows, cols = reduced.shape
    limit = cols if n_pivot_cols is None else n_pivot_cols
    pivots: List[int] = []
    pivot_row = 0
    for col in range(limit):
        if pivot_row == rows:
            break
        hits = np.flatnonzero(reduced[pivot_row:, col])
        if hits.size == 0:
            continue
        found = pivot_row + int(hits[0])
        if found != pivot_row:
            reduced[[pivot_row, found]] = reduced[[found, pivot_row]]
        mask = reduced[:, col].astype(bool)
        mask[pivot_row] = False
        reduced[mask] ^= reduced[pivot_row]
        pivots.append(col)
        pivot_row += 1
    return reduced, pivots


def gf2_rowspace(matrix) -> Tuple[BinMatrix, int]:
    """RREF basis of the row space and its rank."""
    reduced, pivots = gf2_row_reduce(matrix)
    rank = len(pivots)
    return reduced[:rank].copy(), rank


def gf2_rank(matrix) -> int:
    return len(gf2_row_reduce(matrix)[1])


def gf2_solve(a, b) -> Optional[np.ndarray]:
    """One solution x of a·x = b, or None if inconsistent."""
    a = as_bin(a)
    b = as_bin(b).reshape(-1, 1)
    rows, cols = a.shape
    reduced, pivots = gf2_row_reduce(np.hstack([a, b]), n_pivot_cols=cols)
    if reduced[len(pivots):, cols].any():
        return None
    x = np.zeros(cols, dtype=np.uint8)
    for row, col in enumerate(pivots):
        x[col] = reduced[row, cols]
    return x


def gf2_nullspace(a) -> BinMatrix:
    """Basis (as rows) of {x : a·x = 0}."""
    a = as_bin(a)
    cols = a.shape[1]
    reduced, pivots = gf2_row_reduce(a)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for row, col in enumerate(pivots):
            basis[i, col] = reduced[row, f]
    return basis


def gf2_inverse(matrix) -> BinMatrix:
    matrix = as_bin(matrix)
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        raise DimensionError("only square matrices have inverses")
    reduced, pivots = gf2_row_reduce(np.hstack([matrix, np.eye(size, dtype=np.uint8)]), n_pivot_cols=size)
    if pivots != list(range(size)):
        raise NotInvertible("matrix is singular over GF(2)")
    return reduced[:, size:].copy()


def gf2_matmul(*matrices) -> BinMatrix:
    result = as_bin(matrices[0]).astype(np.int64)
    for m in matrices[1:]:
        result = (result @ as_bin(m).astype(np.int64)) % 2
    return result.astype(np.uint8)


# ----------------------------------------------------------------------
# Symplectic form
# ----------------------------------------------------------------------
def omega(n: int) -> BinMatrix:
    zero = np.zeros((n, n), dtype=np.uint8)
    eye = np.eye(n, dtype=np.uint8)
    return np.block([[zero, eye], [eye, zero]])


def swap_halves(v: np.ndarray) -> np.ndarray:
    """vΩ: the row whose dot product with u gives ⟨u, v⟩."""
    n = v.shape[-1] // 2
    return np.concatenate([v[..., n:], v[..., :n]], axis=-1)


def inner_many(vectors: np.ndarray, v: np.ndarray) -> np.ndarray:
    """⟨row, v⟩ for every row."""
    return (vectors.astype(np.int64) @ swap_halves(v).astype(np.int64)) % 2


def unit_vector(index: int, length: int) -> np.ndarray:
    e = np.zeros(length, dtype=np.uint8)
    e[index] = 1
    return e


class SymplecticMatrix:
    """A 2n×2n binary matrix F with F Ω Fᵀ = Ω."""

    __slots__ = ("_m", "_n")

    def __init__(self, matrix, check: bool = True) -> None:
        m = as_bin(matrix).copy()
        if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] % 2:
            raise DimensionError(f"expected a 2n×2n matrix, got shape {m.shape}")
        n = m.shape[0] // 2
        if check and not np.array_equal(gf2_matmul(m, omega(n), m.T), omega(n)):
            raise NotSymplectic("F Ω Fᵀ ≠ Ω")
        m.setflags(write=False)
        self._m = m
        self._n = n

    @classmethod
    def identity(cls, n: int) -> SymplecticMatrix:
        return cls(np.eye(2 * n, dtype=np.uint8), check=False)

    @classmethod
    def from_bitstrings(cls, rows: Sequence[str]) -> SymplecticMatrix:
        return cls([[int(ch) for ch in row] for row in rows])

    @property
    def m(self) -> BinMatrix:
        return self._m

    @property
    def n(self) -> int:
        return self._n

    def blocks(self) -> Tuple[BinMatrix, BinMatrix, BinMatrix, BinMatrix]:
        n = self._n
        return self._m[:n, :n], self._m[:n, n:], self._m[n:, :n], self._m[n:, n:]

    def apply(self, v: Sequence[int]) -> np.ndarray:
        """vF."""
        return gf2_matmul(np.asarray(v).reshape(1, -1), self._m)[0]

    def __matmul__(self, other: SymplecticMatrix) -> SymplecticMatrix:
        if other.n != self._n:
            raise DimensionError("symplectic matrices of different sizes")
        return SymplecticMatrix(gf2_matmul(self._m, other._m), check=False)

    def inverse(self) -> SymplecticMatrix:
        """F⁻¹ = Ω Fᵀ Ω."""
        return SymplecticMatrix(gf2_matmul(omega(self._n), self._m.T, omega(self._n)), check=False)

    def is_identity(self) -> bool:
        return np.array_equal(self._m, np.eye(2 * self._n, dtype=np.uint8))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymplecticMatrix):
            return NotImplemented
        return np.array_equal(self._m, other._m)

    def __hash__(self) -> int:
        return hash(self._m.tobytes())

    def __repr__(self) -> str:
        return f"SymplecticMatrix(n={self._n}, rows={self.to_bitstrings()})"

    def to_bitstrings(self) -> List[str]:
        return [bitstring(row) for row in self._m]

    def pretty(self) -> str:
        """Rows split into the four n×n blocks."""
        n = self._n
        lines = []
        for i, row in enumerate(self._m):
            if i == n:
                lines.append("-" * n + "-+-" + "-" * n)
            lines.append(f"{bitstring(row[:n])} | {bitstring(row[n:])}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ResidueSpace:
    """Res(F) = rs(I + F), with an RREF basis and its pivot columns."""

    basis: BinMatrix
    pivots: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> List[np.ndarray]:
        return [row.copy() for row in self.basis]

    def contains(self, v: Sequence[int]) -> bool:
        stacked = np.vstack([self.basis, np.asarray(v, dtype=np.uint8).reshape(1, -1)])
        return gf2_rank(stacked) == self.dim

    def to_bitstrings(self) -> List[str]:
        return [bitstring(row) for row in self.basis]


# ----------------------------------------------------------------------
# Transvections
# ----------------------------------------------------------------------
def transvection(v: Sequence[int]) -> SymplecticMatrix:
    """T_v = I + Ω vᵀ v, acting as w ↦ w + ⟨w, v⟩ v."""
    v = as_bin(v)
    if v.ndim != 1 or len(v) % 2:
        raise DimensionError("transvection vector must have even length")
    n = len(v) // 2
    outer = np.outer(swap_halves(v), v).astype(np.uint8)
    return SymplecticMatrix((np.eye(2 * n, dtype=np.uint8) + outer) % 2, check=False)


def apply_transvection(w: Sequence[int], v: Sequence[int]) -> np.ndarray:
    w = as_bin(w)
    return (w + symplectic_inner(w, v) * as_bin(v)) % 2


def transvection_product(vectors: Sequence[Sequence[int]], n: int) -> SymplecticMatrix:
    """T_{v_1} T_{v_2} ... T_{v_m}."""
    result = SymplecticMatrix.identity(n)
    for v in vectors:
        result = result @ transvection(v)
    return result


# ----------------------------------------------------------------------
# Involutions and hyperbolicity
# ----------------------------------------------------------------------
def is_involution(f: SymplecticMatrix) -> bool:
    return (f @ f).is_identity()


def is_hyperbolic(f: SymplecticMatrix) -> bool:
    """⟨vF, v⟩ = v (FΩ) vᵀ vanishes for all v iff FΩ is symmetric with zero diagonal."""
    gram = gf2_matmul(f.m, omega(f.n))
    return np.array_equal(gram, gram.T) and not gram.diagonal().any()


def is_hyperbolic_bruteforce(f: SymplecticMatrix) -> bool:
    vectors = all_vectors(2 * f.n)
    images = gf2_matmul(vectors, f.m)
    values = (images.astype(np.int64) * swap_halves(vectors).astype(np.int64)).sum(axis=1) % 2
    return not values.any()


def residue_space(f: SymplecticMatrix) -> ResidueSpace:
    reduced, pivots = gf2_row_reduce((f.m + np.eye(2 * f.n, dtype=np.uint8)) % 2)
    return ResidueSpace(basis=reduced[:len(pivots)].copy(), pivots=tuple(pivots))


def _orthonormal_basis(form: BinMatrix) -> Optional[BinMatrix]:
    """Rows o_i with o_i·form·o_jᵀ = δ_ij, or None for an alternating or degenerate form."""
    size = form.shape[0]
    form = form.astype(np.int64)

    def pair(u, v):
        return int(u.astype(np.int64) @ form @ v.astype(np.int64)) % 2

    pending = [row for row in np.eye(size, dtype=np.uint8)]
    chosen: List[np.ndarray] = []
    while pending:
        odd = next((i for i, w in enumerate(pending) if pair(w, w)), None)
        if odd is not None:
            x = pending.pop(odd)
            pending = [(w + pair(w, x) * x) % 2 for w in pending]
            chosen.append(x)
            continue
        # remaining space is alternating; trade one chosen vector for three
        if not chosen:
            return None
        e = chosen.pop()
        a = pending.pop(0)
        partner = next((i for i, w in enumerate(pending) if pair(a, w)), None)
        if partner is None:
            return None
        b = pending.pop(partner)
        pending = [(w + pair(w, b) * a + pair(w, a) * b) % 2 for w in pending]
        chosen.extend([(e + a) % 2, (e + b) % 2, (e + a + b) % 2])
    return np.array(chosen, dtype=np.uint8).reshape(size, size)


def decompose_involution(f: SymplecticMatrix) -> List[np.ndarray]:
    """Write a hyperbolic involution as T_{s_1}···T_{s_r}·T_v with s_i a basis of Res(F).

    F = I + ΩQ with Q = Ω(I + F) an alternating form supported on Res(F).
    Adding vᵀv for v in Res(F) makes it non-alternating; diagonalising that
    form re-chooses the basis so the r + 1 transvections multiply to F.
    """
    if not is_involution(f):
        raise NotInvolution("F² ≠ I")
    if not is_hyperbolic(f):
        raise NotHyperbolic("⟨vF, v⟩ ≠ 0 for some v")
    residue = residue_space(f)
    r = residue.dim
    if r == 0:
        return []
    basis = residue.basis
    q = gf2_matmul(omega(f.n), (f.m + np.eye(2 * f.n, dtype=np.uint8)) % 2)
    gram = q[np.ix_(residue.pivots, residue.pivots)]
    for code in range(1, 1 << r):
        c = int_to_bits(code, r)
        form = (gram + np.outer(c, c)) % 2
        if gf2_rank(form) < r:
            continue
        orthonormal = _orthonormal_basis(form)
        if orthonormal is None:
            continue
        factor = gf2_inverse(orthonormal).T
        vectors = list(gf2_matmul(factor, basis)) + [gf2_matmul(c.reshape(1, -1), basis)[0]]
        if transvection_product(vectors, f.n) == f:
            return vectors
    raise DecompositionNotFound("no completing vector reproduces F")


# ----------------------------------------------------------------------
# General factorization and completion
# ----------------------------------------------------------------------
def _transvections_between(x: np.ndarray, y: np.ndarray, fixed: List[np.ndarray]) -> List[np.ndarray]:
    """At most two transvections sending x to y while fixing every vector in ``fixed``."""
    if symplectic_inner(x, y):
        return [(x + y) % 2]
    constraints = [swap_halves(x), swap_halves(y)] + [swap_halves(f) for f in fixed]
    rhs = [1, 1] + [symplectic_inner(f, x) for f in fixed]
    z = gf2_solve(np.array(constraints), np.array(rhs))
    if z is None:
        raise DecompositionNotFound("no intermediate vector for the transvection pair")
    return [(x + z) % 2, (z + y) % 2]


def transvection_factors(f: SymplecticMatrix) -> List[np.ndarray]:
    """Vectors h_1..h_m with F·T_{h_1}···T_{h_m} = I, i.e. F = T_{h_m}···T_{h_1}."""
    n = f.n
    current = f.m.copy()
    found: List[np.ndarray] = []
    fixed: List[np.ndarray] = []
    order = [t for i in range(n) for t in (i, n + i)]
    for t in order:
        target = unit_vector(t, 2 * n)
        row = current[t]
        if not np.array_equal(row, target):
            for h in _transvections_between(row, target, fixed):
                current = gf2_matmul(current, transvection(h).m)
                found.append(h)
        fixed.append(target)
    if not np.array_equal(current, np.eye(2 * n, dtype=np.uint8)):
        raise DecompositionNotFound("row reduction by transvections did not reach I")
    return found


def symplectic_complete(vectors: Sequence[Sequence[int]]) -> SymplecticMatrix:
    """G symplectic with v_i G = e_{n+i} for independent, pairwise orthogonal v_1..v_k."""
    vectors = [as_bin(v) for v in vectors]
    if not vectors:
        raise NotIndependent("need at least one vector")
    length = len(vectors[0])
    if length % 2 or any(len(v) != length for v in vectors):
        raise DimensionError("vectors must share an even length")
    n = length // 2
    k = len(vectors)
    if k > n or gf2_rank(np.array(vectors)) < k:
        raise NotIndependent("vectors are linearly dependent")
    for i in range(k):
        for j in range(i + 1, k):
            if symplectic_inner(vectors[i], vectors[j]):
                raise NotIsotropic("vectors are not pairwise orthogonal")

    zs = list(vectors)
    xs: List[np.ndarray] = []
    for i in range(n):
        if i >= k:
            constraints = [swap_halves(v) for v in zs + xs]
            null = gf2_nullspace(np.array(constraints))
            candidate = None
            for row in [unit_vector(n + i, length)] + list(null):
                if (gf2_matmul(np.array(constraints), row.reshape(-1, 1))).any():
                    continue
                if gf2_rank(np.array(zs + [row])) > len(zs):
                    candidate = row
                    break
            if candidate is None:
                raise NotIndependent("could not extend to a Lagrangian basis")
            zs.append(candidate)
        rows = [swap_halves(v) for v in zs] + [swap_halves(v) for v in xs]
        rhs = [1 if j == i else 0 for j in range(len(zs))] + [0] * len(xs)
        x = gf2_solve(np.array(rows), np.array(rhs))
        if x is None:
            raise NotIndependent("no symplectic partner exists")
        xs.append(x)

    # rows [x_1..x_n, z_1..z_n] form a symplectic S sending e_i ↦ x_i, e_{n+i} ↦ z_i
    s = SymplecticMatrix(np.array(xs + zs))
    return s.inverse()


# ----------------------------------------------------------------------
# Whole-group helpers
# ----------------------------------------------------------------------
def symplectic_group_order(n: int) -> int:
    order = 2 ** (n * n)
    for i in range(1, n + 1):
        order *= 4 ** i - 1
    return order


def enumerate_symplectic_group(n: int) -> List[SymplecticMatrix]:
    """All of Sp(2n) by closure over transvections (n ≤ 2)."""
    if n > 2:
        raise BudgetExceeded(f"exhaustive enumeration of Sp({2 * n}) is out of reach; use n <= 2")
    generators = [transvection(v).m for v in all_vectors(2 * n)[1:]]
    start = np.eye(2 * n, dtype=np.uint8)
    seen = {start.tobytes(): start}
    frontier = [start]
    while frontier:
        grown = []
        for m in frontier:
            for g in generators:
                p = gf2_matmul(m, g)
                key = p.tobytes()
                if key not in seen:
                    seen[key] = p
                    grown.append(p)
        frontier = grown
    return [SymplecticMatrix(m, check=False) for m in seen.values()]


def random_symplectic(n: int, rng: np.random.Generator, length: Optional[int] = None) -> SymplecticMatrix:
    """Product of random transvections."""
    length = 4 * n + 2 if length is None else length
    result = SymplecticMatrix.identity(n)
    for _ in range(length):
        v = rng.integers(0, 2, size=2 * n, dtype=np.uint8)
        result = result @ transvection(v)
    return result


def random_hyperbolic_involution(n: int, rng: np.random.Generator) -> SymplecticMatrix:
    """G⁻¹ [[I, A], [0, I]] G with A symmetric zero-diagonal and G random."""
    a = np.triu(rng.integers(0, 2, size=(n, n), dtype=np.uint8), 1)
    a = (a + a.T) % 2
    eye = np.eye(n, dtype=np.uint8)
    diagonal_form = SymplecticMatrix(np.block([[eye, a], [np.zeros_like(eye), eye]]))
    g = random_symplectic(n, rng)
    return g.inverse() @ diagonal_form @ g


def residue_pairs_orthogonal(f: SymplecticMatrix) -> bool:
    """Every pair of residue basis vectors is orthogonal."""
    basis = residue_space(f).vectors()
    return all(
        symplectic_inner(u, v) == 0 for i, u in enumerate(basis) for v in basis[i + 1:]
    )


def iter_vectors(length: int) -> Iterable[np.ndarray]:
    return iter(all_vectors(length))
