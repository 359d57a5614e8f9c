# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Tests for the Pauli normal form, products, commutation and dense matrices.

Run with: pytest tests/test_pauli_algebra.py -v
"""
import itertools

import pytest

from algebra.errors import DimensionError
from algebra.exact_matrix import ExactMatrix
from algebra.gates import gate_matrix
from algebra.pauli_algebra import (
    PauliOp,
    anticommutes,
    commutes,
    detect_pauli,
    enumerate_pauli_classes,
    hermitian_rep,
    is_hermitian,
    is_pauli_up_to_phase,
    pauli_generators,
    pauli_mul,
    pauli_to_matrix,
    single_qubit,
    symplectic_inner,
)
from algebra.ring_exact import I_UNIT, ONE


X = PauliOp(1, 1, 0)
Z = PauliOp(1, 0, 1)


# =============================================================================
# TEST: Normal form and products
# =============================================================================

class TestPauliProducts:
    """pauli_mul in the i^c X(x) Z(z) normal form."""

    def test_x_times_z(self):
        """Test that X·Z carries the phase -i relative to Y."""
        assert pauli_mul(X, Z) == PauliOp(1, 1, 1, 0)

    def test_z_times_x(self):
        """Test that Z·X = iY."""
        assert pauli_mul(Z, X) == PauliOp(1, 1, 1, 2)

    def test_xz_label_is_minus_i_y(self):
        """Test the label of X·Z."""
        assert (X * Z).label() == "-iY"

    def test_mismatched_sizes(self):
        """Test that products of different register sizes raise."""
        with pytest.raises(DimensionError):
            pauli_mul(X, PauliOp.identity(2))

    def test_product_matches_matrices(self):
        """Bit-packed products agree with dense products on all two-qubit pairs."""
        paulis = [p.with_phase(c) for p in enumerate_pauli_classes(2) for c in (0, 1)]
        for p, q in itertools.product(paulis, repeat=2):
            assert pauli_to_matrix(p * q) == pauli_to_matrix(p) @ pauli_to_matrix(q)

    def test_phase_reduced_mod_four(self):
        """Test that the i-power is kept modulo 4."""
        assert PauliOp(1, 0, 0, 6).c == 2

    def test_mask_out_of_range(self):
        with pytest.raises(DimensionError):
            PauliOp(1, 2, 0)


# =============================================================================
# TEST: Labels
# =============================================================================

class TestPauliLabels:
    """Text form: letters qubit 1 first with a phase prefix."""

    def test_label_bits(self):
        """Test that labels read qubit 1 first."""
        p = PauliOp.from_label("ZX")
        assert (p.x, p.z) == (1, 2)

    def test_y_round_trip(self):
        """Y survives label → PauliOp → label."""
        y = PauliOp.from_label("Y")
        assert y.c == 1
        assert y.label() == "Y"

    def test_prefixes(self):
        """Test the -, i and -i prefixes."""
        assert PauliOp.from_label("-iXZY").label() == "-iXZY"
        assert PauliOp.from_label("−I").c == 2
        assert PauliOp.from_label("+iX").label() == "iX"

    def test_bad_label(self):
        """Test that an unparseable label raises ValueError."""
        with pytest.raises(ValueError):
            PauliOp.from_label("XQ")

    def test_json(self):
        assert PauliOp.from_label("XZ").to_json() == {"x": "10", "z": "01", "c": 0}


# =============================================================================
# TEST: Commutation and Hermiticity
# =============================================================================

class TestCommutation:
    """Symplectic inner product and the Hermitian representative."""

    def test_x_and_z_anticommute(self):
        """Test that X and Z anticommute."""
        assert symplectic_inner([1, 0], [0, 1]) == 1
        assert anticommutes(X, Z)

    def test_inner_product_is_alternating(self):
        """⟨v, v⟩ = 0 for every v."""
        for p in enumerate_pauli_classes(2):
            assert symplectic_inner(p.vector(), p.vector()) == 0

    def test_xx_commutes_with_zz(self):
        """Test that XX and ZZ commute."""
        assert commutes(PauliOp.from_label("XX"), PauliOp.from_label("ZZ"))

    def test_hermitian_examples(self):
        """Test Hermiticity of a few phased Paulis."""
        assert is_hermitian(PauliOp(1, 1, 1, 1))
        assert not is_hermitian(PauliOp(1, 1, 1, 0))
        assert is_hermitian(PauliOp(1, 0, 0, 2))

    def test_hermitian_rep(self):
        """Test that E(v) uses plain I/X/Y/Z letters."""
        assert hermitian_rep([1, 1]) == PauliOp(1, 1, 1, 1)
        assert hermitian_rep([0, 0]) == PauliOp.identity(1)
        assert hermitian_rep([1, 1, 1, 1]).label() == "YY"

    def test_hermitian_rep_matches_dense_dagger(self):
        """E(v)† = E(v) on the dense matrices."""
        for p in enumerate_pauli_classes(2):
            e = hermitian_rep(p.vector())
            assert is_hermitian(e)
            assert pauli_to_matrix(e).is_hermitian()

    def test_commutation_matches_matrices(self):
        """Symplectic commutation agrees with dense commutators."""
        classes = list(enumerate_pauli_classes(2))
        for p, q in itertools.product(classes, repeat=2):
            pm, qm = pauli_to_matrix(p), pauli_to_matrix(q)
            assert commutes(p, q) == (pm @ qm == qm @ pm)


# =============================================================================
# TEST: Matrices and enumeration
# =============================================================================

class TestPauliMatrices:
    """Dense matrices, detection and class enumeration."""

    def test_x_matrix(self):
        """Test the dense X matrix."""
        assert pauli_to_matrix(X) == ExactMatrix.from_entries([[0, 1], [1, 0]])

    def test_y_matrix(self):
        """Test the dense Y matrix."""
        assert pauli_to_matrix(PauliOp(1, 1, 1, 1)) == gate_matrix("Y")

    def test_z1_big_endian(self):
        """Test that Z₁ acts on the most significant bit."""
        assert pauli_to_matrix(single_qubit("Z", 1, 2)) == ExactMatrix.diagonal([0, 0, 4, 4])

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_class_count(self, n):
        """There are 4^n phaseless classes."""
        classes = list(enumerate_pauli_classes(n))
        assert len(classes) == 4 ** n
        assert len({(p.x, p.z) for p in classes}) == 4 ** n

    def test_generators(self):
        """Test the generator list X₁..Xₙ, Z₁..Zₙ."""
        assert [p.label() for p in pauli_generators(2)] == ["XI", "IX", "ZI", "IZ"]

    def test_detect_hermitian_pauli(self):
        """Test that a dense Hermitian Pauli is recognized with phase 1."""
        match = detect_pauli(gate_matrix("Y"))
        assert match.pauli == PauliOp(1, 1, 1, 1)
        assert match.phase == ONE
        assert match.i_power == 0

    def test_detect_phase(self):
        """Test that an i-phased Pauli is detected with its phase."""
        match = detect_pauli(gate_matrix("X").mul_omega(2))
        assert match.pauli == X
        assert match.phase == I_UNIT
        assert match.signed().label() == "iX"

    def test_detect_minus_y(self):
        """Test that -Y is detected as Y with i-power 2."""
        match = detect_pauli(gate_matrix("Y").mul_omega(4))
        assert match.i_power == 2
        assert match.signed().label() == "-Y"

    def test_non_paulis(self):
        """H, S and ω·X are not detected as Hermitian Paulis."""
        assert detect_pauli(gate_matrix("H")) is None
        assert detect_pauli(gate_matrix("S")) is None
        assert detect_pauli(gate_matrix("X").mul_omega(1)) is None

    def test_up_to_any_phase(self):
        assert is_pauli_up_to_phase(gate_matrix("X").mul_omega(1))
        assert not is_pauli_up_to_phase(gate_matrix("CZ"))

    def test_detect_every_class(self):
        """Every two-qubit Hermitian representative is detected as itself."""
        for p in enumerate_pauli_classes(2):
            e = hermitian_rep(p.vector())
            assert detect_pauli(pauli_to_matrix(e)).pauli == e


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
