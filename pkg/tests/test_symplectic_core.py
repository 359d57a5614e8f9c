# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Tests for GF(2) linear algebra and the symplectic group.

Run with: pytest tests/test_symplectic_core.py -v
"""
import numpy as np
import pytest

from algebra.errors import (
    DimensionError,
    NotHyperbolic,
    NotInvertible,
    NotInvolution,
    NotIsotropic,
    NotSymplectic,
)
from algebra.symplectic_core import (
    SymplecticMatrix,
    all_vectors,
    apply_transvection,
    decompose_involution,
    enumerate_symplectic_group,
    gf2_inverse,
    gf2_matmul,
    gf2_nullspace,
    gf2_rank,
    gf2_rowspace,
    gf2_solve,
    is_hyperbolic,
    is_hyperbolic_bruteforce,
    is_involution,
    omega,
    random_hyperbolic_involution,
    random_symplectic,
    residue_pairs_orthogonal,
    residue_space,
    symplectic_complete,
    symplectic_group_order,
    transvection,
    transvection_factors,
    transvection_product,
)
from utils.budget import BudgetExceeded


def diagonal_form(a) -> SymplecticMatrix:
    """[[I, A], [0, I]]: the symplectic matrix of a diagonal Clifford."""
    a = np.asarray(a, dtype=np.uint8)
    n = a.shape[0]
    eye = np.eye(n, dtype=np.uint8)
    return SymplecticMatrix(np.block([[eye, a], [np.zeros_like(eye), eye]]))


ANTI_DIAGONAL = np.fliplr(np.eye(4, dtype=np.uint8))
HADAMARD_F = SymplecticMatrix([[0, 1], [1, 0]])
S_GATE_F = SymplecticMatrix([[1, 1], [0, 1]])
SWAP_F = SymplecticMatrix([
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, 1],
    [0, 0, 1, 0],
])


# =============================================================================
# TEST: GF(2) linear algebra
# =============================================================================

class TestGF2:
    """Row reduction, rank, solving and inversion."""

    def test_rowspace_ranks(self):
        """Test ranks of the zero, identity and anti-diagonal matrices."""
        assert gf2_rowspace(np.zeros((3, 3)))[1] == 0
        assert gf2_rowspace(np.eye(4))[1] == 4
        assert gf2_rowspace(ANTI_DIAGONAL)[1] == 4

    def test_rank_of_dependent_rows(self):
        """Three rows summing to zero have rank 2."""
        assert gf2_rank([[1, 1, 0], [0, 1, 1], [1, 0, 1]]) == 2

    def test_solve(self):
        """Test that the returned solution satisfies A·x = b."""
        a = np.array([[1, 1], [0, 1]])
        x = gf2_solve(a, [1, 1])
        assert np.array_equal(gf2_matmul(a, x.reshape(-1, 1)).ravel(), [1, 1])

    def test_solve_inconsistent(self):
        """Test that an inconsistent system returns None."""
        assert gf2_solve([[1, 1], [1, 1]], [0, 1]) is None

    def test_nullspace(self):
        """Test that the nullspace basis is annihilated by A."""
        a = np.array([[1, 1, 0], [0, 1, 1]])
        null = gf2_nullspace(a)
        assert null.shape == (1, 3)
        assert not gf2_matmul(a, null.T).any()

    def test_inverse(self):
        """Test that the inverse multiplies back to the identity."""
        b = np.array([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
        assert np.array_equal(gf2_matmul(b, gf2_inverse(b)), np.eye(3, dtype=np.uint8))

    def test_singular_inverse(self):
        """Test that a singular matrix raises NotInvertible."""
        with pytest.raises(NotInvertible):
            gf2_inverse([[1, 1], [1, 1]])


# =============================================================================
# TEST: Symplectic matrices and transvections
# =============================================================================

class TestSymplecticMatrix:
    """Construction, group structure and transvections."""

    def test_omega(self):
        """Ω for one qubit swaps x and z."""
        assert np.array_equal(omega(1), [[0, 1], [1, 0]])

    def test_rejects_non_symplectic(self):
        """Test that a matrix failing FΩFᵀ = Ω is rejected."""
        with pytest.raises(NotSymplectic):
            SymplecticMatrix([[1, 0], [0, 0]])

    def test_rejects_odd_shape(self):
        """Test that a 3×3 matrix is rejected."""
        with pytest.raises(DimensionError):
            SymplecticMatrix(np.eye(3))

    def test_inverse(self):
        """Test that the inverse multiplies back to the identity."""
        rng = np.random.default_rng(7)
        f = random_symplectic(2, rng)
        assert (f @ f.inverse()).is_identity()

    def test_zero_transvection_is_identity(self):
        """T₀ = I."""
        assert transvection([0, 0, 0, 0]).is_identity()

    def test_transvections_are_involutions(self):
        """Every T_v on two qubits is symplectic and squares to I."""
        for v in all_vectors(4):
            t = transvection(v)
            SymplecticMatrix(t.m)
            assert is_involution(t)

    def test_transvection_action(self):
        """Test that the matrix T_v acts as w ↦ w + ⟨w, v⟩v."""
        for v in all_vectors(2):
            for w in all_vectors(2):
                assert np.array_equal(transvection(v).apply(w), apply_transvection(w, v))

    @pytest.mark.parametrize("n,order", [(1, 6), (2, 720), (3, 1451520)])
    def test_group_order(self, n, order):
        """Test |Sp(2n)| against the closed form."""
        assert symplectic_group_order(n) == order

    @pytest.mark.parametrize("n", [1, 2])
    def test_enumeration_size(self, n):
        """Enumeration lists each element of Sp(2n) once."""
        group = enumerate_symplectic_group(n)
        assert len(group) == symplectic_group_order(n)
        assert len(set(group)) == len(group)

    def test_enumeration_refuses_large_n(self):
        """Test that enumerating Sp(6) is refused by the budget."""
        with pytest.raises(BudgetExceeded):
            enumerate_symplectic_group(3)

    def test_transvection_factors_reproduce(self):
        """Test that the transvection factors multiply back to F."""
        rng = np.random.default_rng(11)
        for _ in range(20):
            f = random_symplectic(3, rng)
            factors = transvection_factors(f)
            assert transvection_product(list(reversed(factors)), 3) == f


# =============================================================================
# TEST: Involutions, hyperbolicity and residues
# =============================================================================

class TestInvolutions:
    """Hyperbolicity, residue spaces and involution decomposition."""

    def test_identity_is_hyperbolic(self):
        """Test that the identity is hyperbolic."""
        assert is_hyperbolic(SymplecticMatrix.identity(2))

    def test_hadamard_not_hyperbolic(self):
        """H swaps X and Z, so ⟨vF, v⟩ = 1 for v = X."""
        assert is_involution(HADAMARD_F)
        assert not is_hyperbolic(HADAMARD_F)
        assert not is_hyperbolic_bruteforce(HADAMARD_F)

    def test_s_gate_is_involution_but_not_hyperbolic(self):
        """Test that the S gate's F is an involution but not hyperbolic."""
        assert is_involution(S_GATE_F)
        assert not is_hyperbolic(S_GATE_F)

    def test_diagonal_form_is_hyperbolic(self):
        """[[I, A], [0, I]] with zero-diagonal A is hyperbolic."""
        assert is_hyperbolic(diagonal_form([[0, 1], [1, 0]]))
        assert is_hyperbolic(diagonal_form(ANTI_DIAGONAL))

    def test_hyperbolic_matches_bruteforce_on_sp4(self):
        """Closed form and brute force agree on all of Sp(4)."""
        for f in enumerate_symplectic_group(2):
            assert is_hyperbolic(f) == is_hyperbolic_bruteforce(f)

    @pytest.mark.parametrize("n", [3, 4])
    def test_hyperbolic_matches_bruteforce_on_samples(self, n):
        """Closed form and brute force agree on sampled Sp(6) and Sp(8) elements."""
        rng = np.random.default_rng(40 + n)
        samples = []
        for _ in range(15):
            samples.append(random_symplectic(n, rng))
            samples.append(random_hyperbolic_involution(n, rng))
            samples.append(transvection(np.eye(2 * n, dtype=np.uint8)[rng.integers(0, 2 * n)]))
        verdicts = set()
        for f in samples:
            assert is_hyperbolic(f) == is_hyperbolic_bruteforce(f)
            verdicts.add(is_hyperbolic(f))
        assert verdicts == {True, False}

    def test_swap_is_involution(self):
        """Test that SWAP's F is an involution."""
        assert is_involution(SWAP_F)

    def test_residue_dimensions(self):
        """Test residue dimensions 0, 2 and 4."""
        assert residue_space(SymplecticMatrix.identity(2)).dim == 0
        assert residue_space(diagonal_form([[0, 1], [1, 0]])).dim == 2
        assert residue_space(diagonal_form(ANTI_DIAGONAL)).dim == 4

    def test_residue_contains(self):
        """Test membership in the residue space."""
        residue = residue_space(diagonal_form([[0, 1], [1, 0]]))
        assert residue.contains([0, 0, 1, 0])
        assert not residue.contains([1, 0, 0, 0])

    def test_decompose_identity(self):
        """The identity decomposes into no transvections."""
        assert decompose_involution(SymplecticMatrix.identity(2)) == []

    def test_single_transvection_not_hyperbolic(self):
        """Test that decomposing a single transvection raises NotHyperbolic."""
        with pytest.raises(NotHyperbolic):
            decompose_involution(transvection([1, 0, 0, 0]))

    def test_decompose_rejects_non_involution(self):
        """Test that a non-involution raises NotInvolution."""
        f = transvection([1, 0, 0, 0]) @ transvection([0, 0, 1, 0])
        assert not is_involution(f)
        with pytest.raises(NotInvolution):
            decompose_involution(f)

    def test_decompose_cz(self):
        """CZ's F is a product of three transvections."""
        f = diagonal_form([[0, 1], [1, 0]])
        vectors = decompose_involution(f)
        assert len(vectors) == 3
        assert transvection_product(vectors, 2) == f

    def test_decompose_every_hyperbolic_involution_in_sp4(self):
        """Every hyperbolic involution in Sp(4) uses r + 1 transvections."""
        for f in enumerate_symplectic_group(2):
            if not (is_involution(f) and is_hyperbolic(f)):
                continue
            r = residue_space(f).dim
            vectors = decompose_involution(f)
            assert len(vectors) == (r + 1 if r else 0)
            assert transvection_product(vectors, 2) == f

    def test_residue_orthogonal_for_every_involution_in_sp4(self):
        """Test residue orthogonality on every involution of Sp(4)."""
        for f in enumerate_symplectic_group(2):
            if is_involution(f):
                assert residue_pairs_orthogonal(f)

    def test_random_hyperbolic_involution(self):
        """Test that sampled hyperbolic involutions decompose back exactly."""
        rng = np.random.default_rng(3)
        for _ in range(10):
            f = random_hyperbolic_involution(3, rng)
            assert is_involution(f)
            assert is_hyperbolic(f)
            assert transvection_product(decompose_involution(f), 3) == f


# =============================================================================
# TEST: Symplectic completion
# =============================================================================

class TestCompletion:
    """symplectic_complete sends v_i to e_{n+i}."""

    def test_already_in_place(self):
        """Test that a vector already at Z₁ stays there."""
        g = symplectic_complete([[0, 1]])
        assert np.array_equal(g.apply([0, 1]), [0, 1])

    def test_x_to_z(self):
        """Test that X is sent to Z."""
        g = symplectic_complete([[1, 0]])
        assert np.array_equal(g.apply([1, 0]), [0, 1])

    def test_two_commuting_vectors(self):
        """Test that two commuting vectors land on Z₁ and Z₂."""
        vectors = [[1, 0, 0, 0], [0, 0, 0, 1]]
        g = symplectic_complete(vectors)
        assert np.array_equal(g.apply(vectors[0]), [0, 0, 1, 0])
        assert np.array_equal(g.apply(vectors[1]), [0, 0, 0, 1])

    def test_rejects_anticommuting(self):
        """Test that anticommuting vectors are rejected."""
        with pytest.raises(NotIsotropic):
            symplectic_complete([[1, 0, 0, 0], [0, 0, 1, 0]])


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
