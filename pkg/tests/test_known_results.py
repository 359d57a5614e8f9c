# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Known results about roots of Hermitian gates, checked exactly.

The n = 6 Toffoli case is slow; set CLIMB_RUN_SLOW=1 to include it.

Run with: pytest tests/test_known_results.py -v
"""
import os

import pytest

from algebra.gates import gate_matrix, on_qubits
from algebra.symplectic_core import residue_space
from config.settings import settings
from data.models import Verdict
from engine.clifford_engine import symplectic_of
from engine.hierarchy_analyzer import counter_obstruction, hat, level_at_most, lift_controlled, min_level
from engine.verification import SUITES, run_check

CHECKS = {check.name: check for suite in SUITES.values() for check in suite}


def assert_check(name: str, n: int = 4):
    result = run_check(CHECKS[name], n)
    assert not result.skipped, result.detail
    assert result.passed, result.detail


# =============================================================================
# TEST: Square roots and single-qubit obstructions
# =============================================================================

class TestRoots:
    """hat(U)² = iU and the Hadamard obstruction."""

    def test_square_root_law(self):
        """Test hat(U)² = iU on named and random Hermitian gates."""
        assert_check("square_root_law", 3)

    def test_z_root(self):
        """Test that hat(Z) is a phased S†."""
        assert_check("z_hat_formula", 1)

    def test_hadamard_obstruction(self):
        """Test the Hadamard obstruction and its factorization."""
        pair = counter_obstruction(gate_matrix("H"))
        assert (pair[0].label(), pair[1].label()) == ("X", "Z")
        assert_check("hadamard_obstruction", 1)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_hadamard_root_outside_hierarchy(self, k):
        """Test that hat(H) is outside each searched level."""
        assert not level_at_most(hat(gate_matrix("H")), k)

    def test_root_conjugation_expansion(self):
        """Test the four-term expansion of hat(U)·P·hat(U)†."""
        assert_check("root_conjugation_expansion", 2)


# =============================================================================
# TEST: CNOT and SWAP
# =============================================================================

class TestCnotAndSwap:
    """Roots of CNOT, its multi-controlled versions and SWAP."""

    def test_cnot_root_level(self):
        """Test that the root of CNOT is in level 3."""
        assert min_level(hat(gate_matrix("CX"))) == 3

    @pytest.mark.parametrize("name", ["cnot_hat_formula_k1", "cnot_hat_formula_k2"])
    def test_hat_formula(self, name):
        """Test hat(C^(k)X) = ω·C^(k)R."""
        assert_check(name, 3)

    @pytest.mark.parametrize("name", ["cnot_lift_rules_k1", "cnot_lift_rules_k2"])
    def test_conjugation_rules(self, name):
        """Test the conjugation rules and their perturbed failure."""
        assert_check(name, 3)

    def test_swap(self):
        """Test the root level of SWAP and its conjugation identities."""
        assert min_level(hat(gate_matrix("SWAP"))) == 3
        assert_check("swap_lift_identities", 2)


# =============================================================================
# TEST: Four-qubit products
# =============================================================================

class TestFourQubitProducts:
    """Residue dimension 4 blocks the climb."""

    def test_cz_pair(self):
        """Test that the root of the CZ pair is in level 4 but not level 3."""
        c = on_qubits("CZ", 1, 4, n=4) @ on_qubits("CZ", 2, 3, n=4)
        assert residue_space(symplectic_of(c).F).dim == 4
        assert not level_at_most(hat(c), 3)
        assert level_at_most(hat(c), 4)

    def test_cz_pair_conjugation_formulas(self):
        """Test the conjugation images under the root of the CZ pair."""
        assert_check("cz_pair_counterexample")

    def test_cnot_pair(self):
        """Test that the root of the CNOT pair is blocked but the product of roots climbs."""
        assert_check("cnot_pair_non_lift")

    def test_root_magnitudes_spread(self):
        """The root of the CZ pair has coefficients of several magnitudes."""
        assert_check("root_magnitudes_spread")


# =============================================================================
# TEST: Families, counts and characterization
# =============================================================================

class TestFamilies:
    """Diagonal and permutation climbers."""

    def test_characterization_equivalence(self):
        """Test that the symplectic verdict matches the level search."""
        assert_check("characterization_equivalence", 3)

    @pytest.mark.parametrize("name", ["diagonal_family_count", "permutation_family_count"])
    def test_counts(self, name):
        """Test the family counts against their closed forms."""
        assert_check(name)

    def test_members_climb(self):
        """Test that every family member gets the Climbs verdict."""
        assert_check("family_members_climb", 3)

    def test_trace_magnitudes(self):
        """|Tr(E·U)|² is 0 or 2^(2n - r) for every family member."""
        assert_check("trace_magnitudes", 3)

    def test_diagonal_level_ladder(self):
        """Each added control on Z or S raises the level by one."""
        assert_check("diagonal_level_ladder", 2)

    def test_clifford_closure(self):
        """Multiplying by Cliffords keeps a level-3 gate in level 3."""
        assert_check("clifford_closure", 2)

    def test_anticommuting_pair_table(self):
        """Conjugation by (E + E′)/√2 follows the four-case table."""
        assert_check("anticommuting_pair_table", 2)


# =============================================================================
# TEST: Controlled lifts
# =============================================================================

class TestControlledLifts:
    """Adding a control raises the level by one."""

    def test_controlled_swap(self):
        """Test that CSWAP is in level 3 and its root in level 4."""
        assert min_level(gate_matrix("CSWAP"), 3) == 3
        assert_check("controlled_swap_lift", 3)

    def test_toffoli_pair(self):
        """Test that the root of T123·T124 is in level 4."""
        assert_check("toffoli_pair_lift")

    def test_toffoli_pair_sharing_one_control(self):
        """T123·T145 is in level 3 but its root is not certified to climb."""
        inner = on_qubits("CX", 1, 2, n=4) @ on_qubits("CX", 3, 4, n=4)
        report = lift_controlled(inner, "T123*T145")
        assert report.min_level == 3
        assert report.verdict != Verdict.CLIMBS
        assert report.hat_level is None
        assert_check("toffoli_one_shared_control", 5)

    def test_controlled_hs(self):
        """Test that C(HS) is rejected."""
        assert_check("controlled_hs_rejected", 2)


# =============================================================================
# TEST: Symplectic layer
# =============================================================================

class TestSymplecticLayer:
    """Exhaustive checks over Sp(4)."""

    @pytest.mark.parametrize("name", [
        "sp_group_order",
        "sp4_hyperbolic_matches_bruteforce",
        "sp4_involution_decomposition",
        "sp4_residue_orthogonality",
        "sp4_clifford_roundtrip",
    ])
    def test_sp4(self, name):
        """Test each exhaustive Sp(4) check."""
        assert_check(name, 2)

    def test_sampled(self):
        """Test the sampled Sp(6) and Sp(8) checks."""
        assert_check("sampled_symplectic", 4)


# =============================================================================
# TEST: Slow cases
# =============================================================================

@pytest.mark.skipif(not os.environ.get("CLIMB_RUN_SLOW"), reason="set CLIMB_RUN_SLOW=1")
class TestSlow:
    """Six-qubit Toffoli pair on disjoint qubits."""

    def test_disjoint_toffolis(self, monkeypatch):
        """Test that the root of two disjoint Toffolis is not in level 3."""
        monkeypatch.setattr(settings, "max_qubits", 6)
        monkeypatch.setattr(settings, "budget", 50_000_000)
        c = on_qubits("CCX", 1, 2, 3, n=6) @ on_qubits("CCX", 4, 5, 6, n=6)
        assert c.is_hermitian()
        assert not level_at_most(hat(c), 3)


if __name__ == "__main__":
    pytest.main([__file__, "-v"])
