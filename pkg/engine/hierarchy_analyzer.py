# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Hierarchy membership, the root map and the climb verdict.

Level membership follows the nested definition: U ∈ C^(k) iff U·P·U† lies in
C^(k-1) for every Pauli P, with C^(1) the Pauli group up to phase.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from algebra.errors import (
    NotClifford,
    NotHermitian,
    OrderNotTwoOrFour,
)
from algebra.exact_matrix import ExactMatrix, ExactUnitary
from algebra.gates import on_qubits, pauli_x, pauli_z, phase_sdg, r_gate
from algebra.pauli_algebra import (
    PauliOp,
    anticommutes,
    detect_pauli,
    enumerate_pauli_classes,
    hermitian_rep,
    is_pauli_up_to_phase,
    pauli_generators,
    pauli_to_matrix,
    single_qubit,
)
from algebra.ring_exact import INV_SQRT2
from algebra.symplectic_core import (
    bitstring,
    decompose_involution,
    is_hyperbolic,
    is_involution,
    residue_space,
)
from config.settings import settings
from data.models import (
    BudgetUsage,
    ClimbReport,
    CliffordData,
    Evidence,
    ObstructionPair,
    Verdict,
)
from engine.clifford_engine import conjugate_pauli, symplectic_of
from utils.budget import ensure_within_limits, get_budget, metered

__all__ = [
    "hat",
    "controlled",
    "detect_pauli",
    "MembershipOracle",
    "level_at_most",
    "min_level",
    "counter_obstruction",
    "climb_verdict",
    "RuleCheck",
    "verify_tcnot_rules",
    "lift_controlled",
]


def hat(u: ExactMatrix, sign: int = 1) -> ExactUnitary:
    """(I + i·U)/√2, or (I - i·U)/√2 for sign = -1."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if not u.is_hermitian():
        raise NotHermitian("the root (I ± iU)/√2 is unitary only for Hermitian U")
    root = (ExactMatrix.identity(u.n) + u.mul_omega(2 * sign)).scale(INV_SQRT2)
    return ExactUnitary.from_matrix(root, check=not isinstance(u, ExactUnitary))


def controlled(u: ExactMatrix, controls: int = 1) -> ExactMatrix:
    """C^(controls)(U) with the controls on the leading qubits."""
    if controls < 1:
        raise ValueError("at least one control qubit is required")
    return u.controlled(controls)


# ----------------------------------------------------------------------
# Membership
# ----------------------------------------------------------------------
class MembershipOracle:
    """Decides U ∈ C^(k) with a memo keyed on phase-canonical fingerprints."""

    def __init__(self, memo_size: Optional[int] = None):
        self.memo_size = settings.memo_size if memo_size is None else memo_size
        self._memo: Dict[Tuple[int, str], bool] = {}
        self.hits = 0

    def clear(self):
        self._memo.clear()
        self.hits = 0

    def __len__(self) -> int:
        return len(self._memo)

    def member(self, u: ExactMatrix, k: int) -> bool:
        if k < 1:
            raise ValueError("hierarchy levels start at 1")
        if k == 1:
            return is_pauli_up_to_phase(u)
        key = (k, u.fingerprint())
        cached = self._memo.get(key)
        if cached is not None:
            self.hits += 1
            return cached
        result = self._sweep(u, k)
        if self.memo_size:
            if len(self._memo) >= self.memo_size:
                self._memo.clear()
            self._memo[key] = result
        return result

    def _sweep(self, u: ExactMatrix, k: int) -> bool:
        # Paulis and Cliffords are groups, so generators suffice below level 4.
        if k <= 3:
            probes = pauli_generators(u.n)
        else:
            probes = (p for p in enumerate_pauli_classes(u.n) if p.x or p.z)
        budget = get_budget()
        u_dag = u.dagger()
        for p in probes:
            budget.charge()
            if not self.member(conjugate_pauli(u, p, u_dag), k - 1):
                return False
        return True


_oracle = MembershipOracle()


def default_oracle() -> MembershipOracle:
    return _oracle


@metered
def level_at_most(u: ExactMatrix, k: int, oracle: Optional[MembershipOracle] = None) -> bool:
    """Exact test of U ∈ C^(k).

    Raises:
        BudgetExceeded: n or k above the configured caps, or the work budget ran out
        NotUnitary: U is not unitary
    """
    if k < 1:
        raise ValueError("hierarchy levels start at 1")
    u = ExactUnitary.from_matrix(u)
    ensure_within_limits(u.n, k)
    return (oracle or _oracle).member(u, k)


@metered
def min_level(
    u: ExactMatrix,
    k_max: Optional[int] = None,
    oracle: Optional[MembershipOracle] = None,
) -> Optional[int]:
    """Smallest k ≤ k_max with U ∈ C^(k), or None."""
    k_max = settings.max_level if k_max is None else k_max
    for k in range(1, k_max + 1):
        if level_at_most(u, k, oracle):
            return k
    return None


@metered
def counter_obstruction(u: ExactMatrix) -> Optional[Tuple[PauliOp, PauliOp]]:
    """Hermitian Paulis (E, E′) that anticommute with U·E·U = E′, if any."""
    if not u.is_hermitian():
        raise NotHermitian("obstruction search needs a Hermitian gate")
    ensure_within_limits(u.n)
    budget = get_budget()
    for p in enumerate_pauli_classes(u.n):
        if not (p.x or p.z):
            continue
        e = hermitian_rep(p.vector())
        budget.charge()
        match = detect_pauli(conjugate_pauli(u, e, u))
        if match is None or match.i_power % 2:
            continue
        image = match.signed()
        if anticommutes(e, image):
            return e, image
    return None


# ----------------------------------------------------------------------
# Climb verdict
# ----------------------------------------------------------------------
def _obstruction_model(pair: Optional[Tuple[PauliOp, PauliOp]]) -> Optional[ObstructionPair]:
    if pair is None:
        return None
    return ObstructionPair(source=pair[0].label(), image=pair[1].label())


def _usage() -> BudgetUsage:
    return BudgetUsage(**get_budget().usage())


@metered
def climb_verdict(
    c: ExactMatrix,
    description: str = "",
    max_level: Optional[int] = None,
    hat_bound: Optional[int] = None,
    sign: int = 1,
) -> ClimbReport:
    """Decide whether the root of C climbs one level above C.

    Hermitian Cliffords are decided from F_C alone: not hyperbolic blocks,
    residue dimension 2 climbs, larger residues block. Other gates fall back
    to the obstruction sweep and, when ``hat_bound`` is given, a direct level
    search of the root.

    Args:
        c: Gate to analyze
        description: Text recorded as the report's input
        max_level: Bound for the level search of C itself
        hat_bound: Also search the root's level up to this bound
        sign: +1 for (I + iC)/√2, -1 for (I - iC)/√2

    Returns:
        ClimbReport with verdict and evidence
    """
    c = ExactUnitary.from_matrix(c)
    n = c.n
    ensure_within_limits(n)
    max_level = settings.max_level if max_level is None else max_level
    hermitian = c.is_hermitian()

    clifford_data = None
    evidence = Evidence()
    trivial = False
    try:
        rep = symplectic_of(c)
    except NotClifford:
        rep = None

    if rep is not None:
        f = rep.F
        residue = residue_space(f)
        hyperbolic = is_hyperbolic(f)
        clifford_data = CliffordData(
            F=f.to_bitstrings(),
            images=[p.label() for p in rep.images],
            hyperbolic=hyperbolic,
            involution=is_involution(f),
            residue_dim=residue.dim,
            residue_basis=residue.to_bitstrings(),
        )
        evidence.residue_basis = residue.to_bitstrings()
        found_level = 1 if is_pauli_up_to_phase(c) else 2

        if not hermitian:
            verdict = Verdict.UNKNOWN
            evidence.note = "gate is not Hermitian, so its root is not unitary"
        elif not hyperbolic:
            verdict = Verdict.BLOCKED_NOT_HYPERBOLIC
            evidence.obstruction = _obstruction_model(counter_obstruction(c))
        elif residue.dim == 0:
            verdict = Verdict.CLIMBS
            trivial = True
            evidence.note = "gate is a Pauli up to phase; its root is Clifford"
        elif residue.dim == 2:
            verdict = Verdict.CLIMBS
            evidence.transvections = [bitstring(v) for v in decompose_involution(f)]
        else:
            verdict = Verdict.BLOCKED_RESIDUE_GT2
            evidence.note = f"residue dimension {residue.dim} > 2"
    else:
        found_level = min_level(c, max_level)
        if not hermitian:
            verdict = Verdict.UNKNOWN
            evidence.note = "gate is neither Clifford nor Hermitian"
        else:
            pair = counter_obstruction(c)
            if pair is not None:
                verdict = Verdict.BLOCKED_OBSTRUCTION_PAIR
                evidence.obstruction = _obstruction_model(pair)
            else:
                verdict = Verdict.UNKNOWN

    hat_level = None
    consistent = None
    if hat_bound is not None and hermitian:
        hat_level = min_level(hat(c, sign), hat_bound)
        if rep is None and verdict == Verdict.UNKNOWN and found_level is not None:
            if hat_level is not None and hat_level == found_level + 1:
                verdict = Verdict.CLIMBS
                evidence.note = "root found one level above the gate by direct search"
        if found_level is not None and hat_bound >= found_level + 1:
            searched_climb = hat_level is not None and hat_level <= found_level + 1
            consistent = (verdict == Verdict.CLIMBS) == searched_climb

    return ClimbReport(
        input=description,
        n=n,
        hermitian=hermitian,
        min_level=found_level,
        max_level=max_level,
        clifford=clifford_data,
        verdict=verdict,
        trivial=trivial,
        evidence=evidence,
        hat_level=hat_level,
        hat_sign=sign,
        consistent=consistent,
        budget=_usage(),
    )


# ----------------------------------------------------------------------
# Controlled-X conjugation rules
# ----------------------------------------------------------------------
@dataclass
class RuleCheck:
    """Outcome of the controlled-X conjugation rules; truthy iff all hold."""

    k: int
    rules: Dict[str, bool] = field(default_factory=dict)
    elapsed_ms: float = 0.0

    @property
    def failing_rule(self) -> Optional[str]:
        for name, ok in self.rules.items():
            if not ok:
                return name
        return None

    def __bool__(self) -> bool:
        return self.failing_rule is None


def _rule_family(name: str) -> str:
    head, _, tail = name.rpartition("_")
    return head if tail.isdigit() else name


def verify_tcnot_rules(k: int, perturb: Optional[str] = None) -> RuleCheck:
    """Check every conjugation rule of the root of C^(k)(X) exactly.

    Args:
        k: Number of controls (1 or 2 within the default caps)
        perturb: Rule name, or family such as ``x_control``, whose expected
            side is negated

    Returns:
        RuleCheck naming the first failing rule, if any
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    n = k + 1
    ensure_within_limits(n)
    start = time.time()

    c = pauli_x().controlled(k)
    root = hat(c)
    root_dag = root.dagger()
    m1 = pauli_x().kron(r_gate().controlled(k - 1)) @ c

    expected: List[Tuple[str, PauliOp, ExactMatrix]] = []
    for i in range(1, k + 1):
        if i == 1:
            target = m1
        else:
            sw = on_qubits("SWAP", 1, i, n=n)
            target = sw @ m1 @ sw.dagger()
        expected.append((f"x_control_{i}", single_qubit("X", i, n), target))
    expected.append(("x_target", single_qubit("X", n, n), pauli_to_matrix(single_qubit("X", n, n))))
    for i in range(1, k + 1):
        z_i = single_qubit("Z", i, n)
        expected.append((f"z_control_{i}", z_i, pauli_to_matrix(z_i)))
    expected.append(("z_target", single_qubit("Z", n, n), phase_sdg().controlled(k - 1).kron(pauli_z()) @ c))

    check = RuleCheck(k=k)
    for name, pauli, rhs in expected:
        if perturb is not None and perturb in (name, _rule_family(name)):
            rhs = -rhs
        check.rules[name] = conjugate_pauli(root, pauli, root_dag) == rhs
    check.elapsed_ms = (time.time() - start) * 1000
    return check


# ----------------------------------------------------------------------
# Controlled lifts
# ----------------------------------------------------------------------
@metered
def lift_controlled(c: ExactMatrix, description: str = "", controls: int = 1) -> ClimbReport:
    """Analyze U = C^(controls)(C) for a Clifford C with C² = ±I.

    U is checked in C^(3) directly. When C is Hermitian and climbs, the root
    of U is searched up to level 4.

    Raises:
        NotClifford: C is not Clifford
        OrderNotTwoOrFour: C² ≠ ±I; carries whether U was found in C^(3)
    """
    c = ExactUnitary.from_matrix(c)
    n = c.n + controls
    ensure_within_limits(n)
    u = controlled(c, controls)

    square = c @ c
    identity = ExactMatrix.identity(c.n)
    if square != identity and square != -identity:
        in_level3 = level_at_most(u, 3)
        raise OrderNotTwoOrFour(
            "C² is not ±I, so the controlled gate need not lie in level 3",
            controlled_in_level3=in_level3,
        )
    symplectic_of(c)

    found_level = min_level(u, 3)
    hermitian = u.is_hermitian()
    evidence = Evidence()
    verdict = Verdict.UNKNOWN
    hat_level = None
    consistent = None

    if found_level is None:
        evidence.note = "controlled gate not found in level 3"
    elif not hermitian:
        evidence.note = "controlled gate is not Hermitian"
    else:
        base = climb_verdict(c)
        evidence.note = f"base gate verdict {base.verdict.value}"
        if base.verdict == Verdict.CLIMBS:
            hat_level = min_level(hat(u), found_level + 1)
            consistent = hat_level is not None and hat_level <= found_level + 1
            verdict = Verdict.CLIMBS if consistent else Verdict.UNKNOWN
        else:
            pair = counter_obstruction(u)
            if pair is not None:
                verdict = Verdict.BLOCKED_OBSTRUCTION_PAIR
                evidence.obstruction = _obstruction_model(pair)

    return ClimbReport(
        input=description,
        n=n,
        hermitian=hermitian,
        min_level=found_level,
        max_level=3,
        verdict=verdict,
        evidence=evidence,
        hat_level=hat_level,
        consistent=consistent,
        budget=_usage(),
    )
