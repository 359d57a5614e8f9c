# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Verification suites: worked examples, family counts and the symplectic layer.

Each check declares how many qubits and which hierarchy level it needs; checks
beyond ``-n`` or ``settings.max_level`` are recorded as skipped.
"""
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from algebra.errors import ClimbError, OrderNotTwoOrFour
from algebra.exact_matrix import ExactMatrix, ExactUnitary
from algebra.gates import gate_matrix, kron_all, on_qubits
from algebra.pauli_algebra import (
    PauliOp,
    anticommutes,
    enumerate_pauli_classes,
    hermitian_rep,
    pauli_mul,
    pauli_to_matrix,
    single_qubit,
)
from algebra.ring_exact import HALF, INV_SQRT2
from algebra.symplectic_core import (
    decompose_involution,
    enumerate_symplectic_group,
    is_hyperbolic,
    is_hyperbolic_bruteforce,
    is_involution,
    random_hyperbolic_involution,
    random_symplectic,
    residue_pairs_orthogonal,
    residue_space,
    symplectic_group_order,
    transvection,
    transvection_product,
)
from config.settings import settings
from data.models import CheckResult, Verdict, VerifySummary
from engine.clifford_engine import (
    clifford_from_symplectic,
    conjugate_pauli,
    enumerate_climber_family,
    family_count,
    hermitian_diagonal_members,
    hermitian_permutation_members,
    pauli_expand,
    pauli_trace,
    random_clifford,
    random_hermitian_clifford,
    symplectic_of,
)
from engine.hierarchy_analyzer import (
    climb_verdict,
    counter_obstruction,
    hat,
    level_at_most,
    lift_controlled,
    min_level,
    verify_tcnot_rules,
)

Outcome = Tuple[bool, str]


@dataclass(frozen=True)
class Check:
    """A named verification with the register size and level it needs."""
    name: str
    qubits: int
    run: Callable[[int], Outcome]
    level: int = 3


def _rng() -> np.random.Generator:
    return np.random.default_rng(settings.random_seed)


def _pauli(label: str) -> ExactUnitary:
    return pauli_to_matrix(PauliOp.from_label(label))


def _root_conjugation_expansion(u: ExactMatrix, p: ExactMatrix) -> ExactMatrix:
    """(P + iUP - iPU + UPU)/2."""
    up = u @ p
    pu = p @ u
    return (p + up.mul_omega(2) - pu.mul_omega(2) + up @ u).scale(HALF)


# ============================================================================
# Worked examples
# ============================================================================

def check_square_root_law(n: int) -> Outcome:
    names = ["X", "Y", "Z", "H", "SWAP", "CZ", "CX", "CCX", "CSWAP"]
    gates = [(name, gate_matrix(name)) for name in names if gate_matrix(name).n <= n]
    rng = _rng()
    sizes = list(range(1, min(3, n) + 1))
    for i in range(100):
        size = sizes[i % len(sizes)]
        gates.append((f"random_hermitian_{size}q", random_hermitian_clifford(size, rng)))
    for name, u in gates:
        root = hat(u)
        if root @ root != u.mul_omega(2):
            return False, f"hat({name})^2 != iU"
    return True, f"{len(gates)} gates"


def check_z_hat_formula(n: int) -> Outcome:
    ok = hat(gate_matrix("Z")) == gate_matrix("SDG").mul_omega(1)
    return ok, "hat(Z) = (1+i)/sqrt2 * S^dagger"


def check_hadamard_obstruction(n: int) -> Outcome:
    h = gate_matrix("H")
    pair = counter_obstruction(h)
    if pair is None or (pair[0].label(), pair[1].label()) != ("X", "Z"):
        return False, f"obstruction {pair}"
    root = hat(h)
    x, z = _pauli("X"), _pauli("Z")
    image = root @ x @ root.dagger()
    if image != (x @ root @ z).mul_omega(6):
        return False, "hat(H) X hat(H)^dagger != -i X hat(H) Z"
    # E (I - iU)/sqrt2 (I + EE')/sqrt2 with E = X, E' = Z
    factor = (ExactMatrix.identity(1) + x @ z).scale(INV_SQRT2)
    if image != x @ hat(h, sign=-1) @ factor:
        return False, "obstruction factorization fails"
    top = min(4, settings.max_level)
    levels = {k: level_at_most(root, k) for k in range(2, top + 1)}
    if any(levels.values()):
        return False, f"root found in a level: {levels}"
    return True, f"root outside levels 2..{top}"


def check_root_conjugation_expansion(n: int) -> Outcome:
    rng = _rng()
    size = min(n, 2)
    for _ in range(10):
        u = random_hermitian_clifford(size, rng)
        root = hat(u)
        for p in enumerate_pauli_classes(size):
            pm = pauli_to_matrix(p)
            if conjugate_pauli(root, p) != _root_conjugation_expansion(u, pm):
                return False, f"expansion fails for {p.label()}"
    return True, "10 random gates, all Pauli classes"


def _cnot_hat_formula(k: int) -> Outcome:
    c = gate_matrix("X").controlled(k)
    ok = hat(c) == gate_matrix("R").controlled(k).mul_omega(1)
    return ok, f"hat(C^({k})X) = (1+i)/sqrt2 * C^({k})R"


def _cnot_rules(k: int) -> Outcome:
    result = verify_tcnot_rules(k)
    if not result:
        return False, f"rule {result.failing_rule} fails"
    if verify_tcnot_rules(k, perturb="z_target"):
        return False, "a perturbed rule was accepted"
    return True, f"{len(result.rules)} rules"


def check_cnot_root_level(n: int) -> Outcome:
    level = min_level(hat(gate_matrix("CX")), 3)
    return level == 3, f"min level {level}"


def check_swap_lift_identities(n: int) -> Outcome:
    sw = gate_matrix("SWAP")
    root = hat(sw)
    level = min_level(root, 3)
    if level != 3:
        return False, f"min level {level}"
    cz = gate_matrix("CZ")
    ss = kron_all(gate_matrix("S"), gate_matrix("S"))
    hh = kron_all(gate_matrix("H"), gate_matrix("H"))
    for i in (1, 2):
        z_i = pauli_to_matrix(single_qubit("Z", i, 2))
        x_i = pauli_to_matrix(single_qubit("X", i, 2))
        if conjugate_pauli(root, single_qubit("Z", i, 2)) != sw @ cz @ ss @ z_i:
            return False, f"Z_{i} identity fails"
        if conjugate_pauli(root, single_qubit("X", i, 2)) != sw @ hh @ cz @ ss @ hh @ x_i:
            return False, f"X_{i} identity fails"
    return True, "four conjugation identities hold"


def check_cz_pair_counterexample(n: int) -> Outcome:
    c = on_qubits("CZ", 1, 4, n=4) @ on_qubits("CZ", 2, 3, n=4)
    r = residue_space(symplectic_of(c).F).dim
    if r != 4:
        return False, f"residue dim {r}"
    root = hat(c)
    if level_at_most(root, 3):
        return False, "root found in level 3"
    if settings.max_level >= 4 and not level_at_most(root, 4):
        return False, "root not in level 4"
    w = conjugate_pauli(root, single_qubit("X", 1, 4))
    w_dag = w.dagger()

    def image(q: int) -> ExactMatrix:
        return w @ pauli_to_matrix(single_qubit("X", q, 4)) @ w_dag

    expected = {
        1: _pauli("XIIZ"),
        2: _pauli("IXII") @ on_qubits("CZ", 3, 4, n=4),
        3: _pauli("IIXI") @ on_qubits("CZ", 2, 4, n=4),
        4: (_pauli("IIIX") @ _pauli("ZIII") @ _pauli("IIIZ") @ on_qubits("CZ", 2, 3, n=4)).mul_omega(2),
    }
    for q, rhs in expected.items():
        if image(q) != rhs:
            return False, f"X_{q} formula fails"
    return True, "residue dim 4, root in level 4 only"


def check_cnot_pair_non_lift(n: int) -> Outcome:
    a = on_qubits("CX", 1, 3, n=4)
    b = on_qubits("CX", 2, 4, n=4)
    c = a @ b
    r = residue_space(symplectic_of(c).F).dim
    if r != 4:
        return False, f"residue dim {r}"
    if level_at_most(hat(c), 3):
        return False, "root of the product found in level 3"
    if not level_at_most(hat(a) @ hat(b), 3):
        return False, "product of roots not in level 3"
    return True, "root of product blocked, product of roots climbs"


def check_controlled_swap_lift(n: int) -> Outcome:
    report = lift_controlled(gate_matrix("SWAP"), "CSWAP")
    ok = report.min_level == 3 and report.hat_level == 4
    return ok, f"min level {report.min_level}, root level {report.hat_level}"


def check_toffoli_pair_lift(n: int) -> Outcome:
    xx = kron_all(gate_matrix("X"), gate_matrix("X"))
    report = lift_controlled(xx, "T123*T124", controls=2)
    pair = on_qubits("CCX", 1, 2, 3, n=4) @ on_qubits("CCX", 1, 2, 4, n=4)
    if xx.controlled(2) != pair:
        return False, "controlled XX differs from the Toffoli pair"
    ok = report.hat_level == 4
    return ok, f"root level {report.hat_level}"


def check_toffoli_one_shared_control(n: int) -> Outcome:
    inner = on_qubits("CX", 1, 2, n=4) @ on_qubits("CX", 3, 4, n=4)
    pair = on_qubits("CCX", 1, 2, 3, n=5) @ on_qubits("CCX", 1, 4, 5, n=5)
    if inner.controlled(1) != pair:
        return False, "controlled CNOT pair differs from the Toffoli pair"
    base = climb_verdict(inner)
    if base.verdict != Verdict.BLOCKED_RESIDUE_GT2:
        return False, f"base verdict {base.verdict.value}"
    report = lift_controlled(inner, "T123*T145")
    if report.min_level != 3:
        return False, f"product min level {report.min_level}"
    if report.verdict == Verdict.CLIMBS or report.hat_level is not None:
        return False, "lift certified although the base gate is blocked"
    return True, f"product in level 3, lift not certified ({report.verdict.value})"


def check_controlled_hs_rejected(n: int) -> Outcome:
    hs = gate_matrix("H") @ gate_matrix("S")
    try:
        lift_controlled(hs, "HS")
    except OrderNotTwoOrFour as exc:
        return exc.controlled_in_level3 is False, "rejected; controlled gate outside level 3"
    return False, "HS was accepted"


def check_diagonal_level_ladder(n: int) -> Outcome:
    cases: List[Tuple[str, ExactMatrix, int]] = []
    for k in range(1, n):
        cases.append((f"C^({k})Z", gate_matrix("Z").controlled(k), k + 1))
        cases.append((f"C^({k})S", gate_matrix("S").controlled(k), k + 2))
        cases.append((f"C^({k})SDG", gate_matrix("SDG").controlled(k), k + 2))
    for name in ("X", "Y", "Z"):
        cases.append((f"C{name}", gate_matrix(name).controlled(1), 2))
    checked = 0
    for name, u, expected in cases:
        if expected > settings.max_level:
            continue
        found = min_level(u, expected)
        if found != expected:
            return False, f"{name}: level {found}, expected {expected}"
        checked += 1
    return True, f"{checked} gates"


def check_anticommuting_pair_table(n: int) -> Outcome:
    size = min(n, 2)
    reps = [hermitian_rep(p.vector()) for p in enumerate_pauli_classes(size) if p.x or p.z]
    pairs = 0
    for e in reps:
        for e2 in reps:
            if not anticommutes(e, e2):
                continue
            c = (pauli_to_matrix(e) + pauli_to_matrix(e2)).scale(INV_SQRT2)
            c = ExactUnitary.from_matrix(c)
            ee = pauli_mul(e, e2)
            for p in enumerate_pauli_classes(size):
                sign_e, sign_e2 = anticommutes(e, p), anticommutes(e2, p)
                if not sign_e and not sign_e2:
                    rhs = p
                elif not sign_e:
                    rhs = pauli_mul(p, ee)
                elif not sign_e2:
                    rhs = -pauli_mul(p, ee)
                else:
                    rhs = -p
                if conjugate_pauli(c, p) != pauli_to_matrix(rhs):
                    return False, f"({e.label()}+{e2.label()})/sqrt2 on {p.label()}"
            pairs += 1
    return True, f"{pairs} ordered pairs"


def check_clifford_closure(n: int) -> Outcome:
    rng = _rng()
    size = min(n, 2)
    # T = diag(1, ω) and the root of CZ both sit in level 3
    base = ExactMatrix.diagonal([0, 1]) if size == 1 else hat(gate_matrix("CZ"))
    expected = min_level(base, 3)
    if expected != 3:
        return False, f"base gate level {expected}"
    for _ in range(5):
        moved = random_clifford(size, rng) @ base @ random_clifford(size, rng)
        if min_level(moved, 3) != expected:
            return False, "level changed under Clifford multiplication"
    return True, f"level {expected} preserved"


def check_characterization_equivalence(n: int) -> Outcome:
    examined = 0
    for size in range(2, min(n, 3) + 1):
        members = list(hermitian_diagonal_members(size)) + list(hermitian_permutation_members(size))
        for member in members:
            report = climb_verdict(member.unitary, member.label, hat_bound=3)
            climbs = report.verdict == Verdict.CLIMBS
            if report.consistent is False:
                return False, f"{member.label}: verdict disagrees with level search"
            if climbs != (member.residue_dim == 2) and not report.trivial:
                return False, f"{member.label}: verdict disagrees with residue dim"
            examined += 1
    return True, f"{examined} Hermitian Cliffords"


EXAMPLE_CHECKS = [
    Check("square_root_law", 1, check_square_root_law),
    Check("z_hat_formula", 1, check_z_hat_formula),
    Check("hadamard_obstruction", 1, check_hadamard_obstruction),
    Check("root_conjugation_expansion", 1, check_root_conjugation_expansion),
    Check("cnot_hat_formula_k1", 2, lambda n: _cnot_hat_formula(1)),
    Check("cnot_hat_formula_k2", 3, lambda n: _cnot_hat_formula(2)),
    Check("cnot_lift_rules_k1", 2, lambda n: _cnot_rules(1)),
    Check("cnot_lift_rules_k2", 3, lambda n: _cnot_rules(2)),
    Check("cnot_root_level", 2, check_cnot_root_level),
    Check("swap_lift_identities", 2, check_swap_lift_identities),
    Check("anticommuting_pair_table", 1, check_anticommuting_pair_table, level=2),
    Check("clifford_closure", 1, check_clifford_closure),
    Check("diagonal_level_ladder", 2, check_diagonal_level_ladder),
    Check("characterization_equivalence", 2, check_characterization_equivalence),
    Check("controlled_swap_lift", 3, check_controlled_swap_lift, level=4),
    Check("controlled_hs_rejected", 2, check_controlled_hs_rejected),
    Check("cz_pair_counterexample", 4, check_cz_pair_counterexample),
    Check("cnot_pair_non_lift", 4, check_cnot_pair_non_lift),
    Check("toffoli_pair_lift", 4, check_toffoli_pair_lift, level=4),
    Check("toffoli_one_shared_control", 5, check_toffoli_one_shared_control),
]


# ============================================================================
# Family counts and trace magnitudes
# ============================================================================

def _family_count(family: str) -> Callable[[int], Outcome]:
    def run(n: int) -> Outcome:
        details = []
        for size in range(2, n + 1):
            members, expected = enumerate_climber_family(family, size)
            members = list(members)
            if len(members) != expected or expected != family_count(family, size):
                return False, f"n={size}: {len(members)} != {expected}"
            if any(not m.unitary.is_hermitian() or m.residue_dim != 2 for m in members):
                return False, f"n={size}: a member is not a Hermitian climber"
            details.append(f"n={size}:{expected}")
        return True, ", ".join(details)
    return run


def check_family_members_climb(n: int) -> Outcome:
    size = min(n, 3)
    total = 0
    for family in ("diagonal", "permutation"):
        members, _ = enumerate_climber_family(family, size)
        for member in members:
            if climb_verdict(member.unitary, member.label).verdict != Verdict.CLIMBS:
                return False, f"{member.label} does not climb"
            total += 1
    return True, f"{total} members at n={size}"


def check_trace_magnitudes(n: int) -> Outcome:
    size = 3
    total = 0
    for family in ("diagonal", "permutation"):
        members, _ = enumerate_climber_family(family, size)
        for member in members:
            allowed = {0, 2 ** (2 * size - member.residue_dim)}
            for p in enumerate_pauli_classes(size):
                value = pauli_trace(member.unitary, hermitian_rep(p.vector())).abs_squared()
                if not any(value == a for a in allowed):
                    return False, f"{member.label}: |Tr|^2 = {value}"
            total += 1
    return True, f"{total} gates, 64 classes each"


def check_root_magnitudes_spread(n: int) -> Outcome:
    c = on_qubits("CZ", 1, 4, n=4) @ on_qubits("CZ", 2, 3, n=4)
    root = hat(c)
    expansion = pauli_expand(root)
    if expansion.reconstruct() != root:
        return False, "expansion does not reconstruct the root"
    magnitudes = expansion.magnitudes()
    ok = len(magnitudes) >= 2
    return ok, f"{len(magnitudes)} distinct magnitudes"


COUNTING_CHECKS = [
    Check("diagonal_family_count", 2, _family_count("diagonal"), level=2),
    Check("permutation_family_count", 2, _family_count("permutation"), level=2),
    Check("family_members_climb", 2, check_family_members_climb, level=2),
    Check("trace_magnitudes", 3, check_trace_magnitudes, level=2),
    Check("root_magnitudes_spread", 4, check_root_magnitudes_spread, level=2),
]


# ============================================================================
# Symplectic layer
# ============================================================================

def _group(n: int):
    return enumerate_symplectic_group(min(n, 2))


def check_group_order(n: int) -> Outcome:
    counts = []
    for size in range(1, min(n, 2) + 1):
        group = enumerate_symplectic_group(size)
        if len(group) != symplectic_group_order(size):
            return False, f"|Sp({2 * size})| = {len(group)}"
        counts.append(str(len(group)))
    return True, "orders " + ", ".join(counts)


def check_hyperbolic_matches_bruteforce(n: int) -> Outcome:
    group = _group(n)
    for f in group:
        if is_hyperbolic(f) != is_hyperbolic_bruteforce(f):
            return False, f"mismatch on {f.to_bitstrings()}"
    return True, f"{len(group)} elements"


def check_involution_decomposition(n: int) -> Outcome:
    count = 0
    for f in _group(n):
        if not (is_involution(f) and is_hyperbolic(f)):
            continue
        vectors = decompose_involution(f)
        r = residue_space(f).dim
        if transvection_product(vectors, f.n) != f or len(vectors) != (r + 1 if r else 0):
            return False, f"decomposition fails on {f.to_bitstrings()}"
        count += 1
    return True, f"{count} hyperbolic involutions"


def check_residue_orthogonality(n: int) -> Outcome:
    involutions = [f for f in _group(n) if is_involution(f)]
    ok = all(residue_pairs_orthogonal(f) for f in involutions)
    return ok, f"{len(involutions)} involutions"


def check_clifford_roundtrip(n: int) -> Outcome:
    group = _group(n)
    for f in group:
        if symplectic_of(clifford_from_symplectic(f)).F != f:
            return False, f"round trip fails on {f.to_bitstrings()}"
    return True, f"{len(group)} elements"


def _random_nonzero(size: int, rng: np.random.Generator) -> np.ndarray:
    while True:
        v = rng.integers(0, 2, size=2 * size, dtype=np.uint8)
        if v.any():
            return v


def check_sampled_symplectic(n: int) -> Outcome:
    rng = _rng()
    verdicts = set()
    for size in range(3, n + 1):
        for _ in range(20):
            f = random_symplectic(size, rng)
            if symplectic_of(clifford_from_symplectic(f)).F != f:
                return False, f"round trip fails at n={size}"
            g = random_hyperbolic_involution(size, rng)
            if transvection_product(decompose_involution(g), size) != g:
                return False, f"decomposition fails at n={size}"
            for sample in (f, g, transvection(_random_nonzero(size, rng))):
                hyperbolic = is_hyperbolic(sample)
                if hyperbolic != is_hyperbolic_bruteforce(sample):
                    return False, f"hyperbolicity mismatch at n={size} on {sample.to_bitstrings()}"
                verdicts.add(hyperbolic)
    if n >= 3 and verdicts != {True, False}:
        return False, "samples did not cover both hyperbolicity verdicts"
    return True, f"20 samples per n in 3..{n}"


SYMPLECTIC_CHECKS = [
    Check("sp_group_order", 1, check_group_order, level=1),
    Check("sp4_hyperbolic_matches_bruteforce", 1, check_hyperbolic_matches_bruteforce, level=1),
    Check("sp4_involution_decomposition", 1, check_involution_decomposition, level=1),
    Check("sp4_residue_orthogonality", 1, check_residue_orthogonality, level=1),
    Check("sp4_clifford_roundtrip", 1, check_clifford_roundtrip, level=2),
    Check("sampled_symplectic", 3, check_sampled_symplectic, level=2),
]


SUITES: Dict[str, List[Check]] = {
    "paper": EXAMPLE_CHECKS,
    "counting": COUNTING_CHECKS,
    "symplectic": SYMPLECTIC_CHECKS,
}

DEFAULT_QUBITS = {"paper": 4, "counting": 3, "symplectic": 2}


def run_check(check: Check, n: int) -> CheckResult:
    if check.qubits > n:
        return CheckResult(name=check.name, passed=True, skipped=True, detail=f"needs {check.qubits} qubits")
    if check.level > settings.max_level:
        return CheckResult(name=check.name, passed=True, skipped=True, detail=f"needs level {check.level}")
    try:
        passed, detail = check.run(n)
    except ClimbError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(name=check.name, passed=passed, detail=detail)


def run_suite(suite: str, n: Optional[int] = None, progress: bool = False) -> VerifySummary:
    """Run every check of a suite.

    Args:
        suite: One of ``paper``, ``counting``, ``symplectic``
        n: Largest register size to use; defaults per suite
        progress: Show a progress bar

    Returns:
        VerifySummary with one CheckResult per check

    Raises:
        KeyError: Unknown suite
        BudgetExceeded: A check ran out of work budget
    """
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    n = DEFAULT_QUBITS[suite] if n is None else n
    start = time.time()
    checks = SUITES[suite]
    results = [run_check(check, n) for check in tqdm(checks, desc=f"verify {suite}", disable=not progress)]
    return VerifySummary(
        suite=suite,
        n=n,
        passed=all(r.passed for r in results),
        checks=results,
        elapsed_ms=(time.time() - start) * 1000,
    )
