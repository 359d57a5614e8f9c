# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Command-line interface.

Usage:
    python clifford_climb.py analyze circuits/swap.circ --hat
    python clifford_climb.py verify --suite paper -n 4
    python clifford_climb.py enumerate --family diagonal -n 3 --verify
    python clifford_climb.py expand circuits/cz.circ
    python clifford_climb.py decompose circuits/cz_pair.circ
    python clifford_climb.py survey -n 3
    python clifford_climb.py schema
    python clifford_climb.py history

Exit codes: 0 ok, 1 input error, 2 budget exhausted, 3 verification failed.
"""
import argparse
import json
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from algebra.errors import ClimbError, NotHermitian
from algebra.pauli_algebra import hermitian_rep
from algebra.symplectic_core import (
    bitstring,
    decompose_involution,
    is_hyperbolic,
    is_involution,
    residue_space,
    transvection_factors,
    transvection_product,
)
from circuit import CircuitError, evaluate, load_circuit
from config.settings import settings
from data.models import (
    DecomposeReport,
    EnumerateReport,
    ExpansionReport,
    FamilyMemberModel,
    PauliTermModel,
    RunRecord,
    Verdict,
    climb_report_schema,
)
from engine.clifford_engine import (
    FAMILIES,
    enumerate_climber_family,
    pauli_expand,
    symplectic_of,
)
from engine.hierarchy_analyzer import climb_verdict, hat, level_at_most
from engine.survey import run_survey
from engine.verification import SUITES, run_suite
from utils.budget import BudgetExceeded, ensure_within_limits
from utils.run_ledger import get_run_ledger, log_run

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_BUDGET = 2
EXIT_VERIFY = 3

Outcome = Tuple[int, Optional[str]]


def print_header(text: str):
    """Print a section header."""
    print(f"\n{'='*70}")
    print(f"  {text}")
    print(f"{'='*70}")


def print_step(text: str):
    """Print a step marker."""
    print(f"\n▶ {text}")
    print("-" * 50)


def _emit(model, as_json: bool) -> bool:
    """Print a model as JSON when requested; returns True if printed."""
    if as_json:
        print(model.model_dump_json(indent=2))
    return as_json


# =============================================================================
# COMMANDS
# =============================================================================

def cmd_analyze(args) -> Outcome:
    ast = load_circuit(args.file)
    u = evaluate(ast)
    if args.hat and not u.is_hermitian():
        raise NotHermitian("--hat needs a Hermitian circuit")
    max_level = args.max_level or settings.max_level
    report = climb_verdict(
        u,
        description=str(args.file),
        max_level=max_level,
        hat_bound=max_level if args.hat else None,
        sign=-1 if args.minus else 1,
    )
    if _emit(report, args.json):
        return EXIT_OK, report.verdict.value

    print_header(f"CLIMB ANALYSIS: {args.file}")
    print(f"   Qubits: {report.n}    Gates: {len(ast.ops)}")
    print(f"   Hermitian: {report.hermitian}")
    print(f"   Minimum level (≤ {report.max_level}): {report.min_level}")
    if report.clifford is not None:
        print_step("Symplectic data")
        for row in report.clifford.F:
            print(f"   {row}")
        print(f"   Images: {', '.join(report.clifford.images)}")
        print(f"   Hyperbolic: {report.clifford.hyperbolic}    Residue dim: {report.clifford.residue_dim}")
    print_step("Verdict")
    print(f"   ✓ {report.verdict.value}" + ("  (trivial)" if report.trivial else ""))
    if report.evidence.obstruction is not None:
        pair = report.evidence.obstruction
        print(f"   Obstruction: U·{pair.source}·U = {pair.image}")
    if report.evidence.transvections:
        print(f"   Transvections: {', '.join(report.evidence.transvections)}")
    if report.evidence.note:
        print(f"   Note: {report.evidence.note}")
    if args.hat:
        root = "(I - iU)/√2" if args.minus else "(I + iU)/√2"
        print(f"   Level of {root}: {report.hat_level}")
        if report.consistent is not None:
            print(f"   Verdict agrees with level search: {report.consistent}")
    if report.budget is not None:
        print(f"\n   Work units: {report.budget.used:,} / {report.budget.limit:,}")
    return EXIT_OK, report.verdict.value


def cmd_verify(args) -> Outcome:
    summary = run_suite(args.suite, args.n, progress=not args.json)
    code = EXIT_OK if summary.passed else EXIT_VERIFY
    status = "passed" if summary.passed else "failed"
    if _emit(summary, args.json):
        return code, status

    print_header(f"VERIFY {args.suite.upper()} (n ≤ {summary.n})")
    for check in summary.checks:
        mark = "-" if check.skipped else ("✓" if check.passed else "✗")
        print(f"   {mark} {check.name:<36} {check.detail}")
    print(f"\n   Result: {status.upper()} in {summary.elapsed_ms / 1000:.2f}s")
    return code, status


def cmd_enumerate(args) -> Outcome:
    ensure_within_limits(args.n)
    stream, expected = enumerate_climber_family(args.family, args.n)
    members = []
    for member in stream:
        model = FamilyMemberModel(
            label=member.label,
            matrix=member.matrix_rows(),
            residue_dim=member.residue_dim,
        )
        if args.verify:
            model.climbs = climb_verdict(member.unitary, member.label).verdict == Verdict.CLIMBS
            model.hat_in_level3 = level_at_most(hat(member.unitary), 3)
        members.append(model)

    verified = None
    if args.verify:
        verified = all(m.climbs and m.hat_in_level3 for m in members)
    report = EnumerateReport(
        family=args.family,
        n=args.n,
        count=len(members),
        expected=expected,
        members=members,
        verified=verified,
    )
    ok = report.count == expected and verified is not False
    code = EXIT_OK if ok else EXIT_VERIFY
    if _emit(report, args.json):
        return code, f"{report.count}/{expected}"

    print_header(f"{args.family.upper()} CLIMBERS ON {args.n} QUBITS")
    for m in members:
        extra = ""
        if args.verify:
            extra = f"  climbs={m.climbs} root_in_level3={m.hat_in_level3}"
        print(f"   {m.label}{extra}")
    print(f"\n   Count: {report.count}    Formula: {expected}")
    if verified is not None:
        print(f"   All verified: {verified}")
    return code, f"{report.count}/{expected}"


def cmd_expand(args) -> Outcome:
    u = evaluate(load_circuit(args.file))
    expansion = pauli_expand(u)
    report = ExpansionReport(
        input=str(args.file),
        n=expansion.n,
        residue_dim=expansion.r,
        subgroup=expansion.subgroup,
        terms=[
            PauliTermModel(pauli=e.label(), coeff=str(alpha), exact=alpha.to_json())
            for e, alpha in expansion.terms
        ],
        magnitudes=[str(m) for m in expansion.magnitudes()],
    )
    if _emit(report, args.json):
        return EXIT_OK, f"{len(report.terms)} terms"

    print_header(f"PAULI EXPANSION: {args.file}")
    for term in report.terms:
        print(f"   {term.coeff:>28}  {term.pauli}")
    print(f"\n   Terms: {len(report.terms)}    Residue dim: {report.residue_dim}")
    print(f"   Support is a subgroup: {report.subgroup}")
    print(f"   |α|² values: {', '.join(report.magnitudes)}")
    return EXIT_OK, f"{len(report.terms)} terms"


def cmd_decompose(args) -> Outcome:
    u = evaluate(load_circuit(args.file))
    f = symplectic_of(u).F
    if is_involution(f) and is_hyperbolic(f):
        vectors = decompose_involution(f)
    else:
        vectors = list(reversed(transvection_factors(f)))
    report = DecomposeReport(
        input=str(args.file),
        n=f.n,
        F=f.to_bitstrings(),
        residue_dim=residue_space(f).dim,
        transvections=[bitstring(v) for v in vectors],
        paulis=[hermitian_rep(v).label() for v in vectors],
        reconstructs=transvection_product(vectors, f.n) == f,
    )
    code = EXIT_OK if report.reconstructs else EXIT_VERIFY
    if _emit(report, args.json):
        return code, f"{len(vectors)} transvections"

    print_header(f"TRANSVECTION DECOMPOSITION: {args.file}")
    print(f"   F ({report.residue_dim}-dimensional residue):")
    print(f.pretty())
    print_step("F = T_v1 ··· T_vm")
    for v, p in zip(report.transvections, report.paulis):
        print(f"   {v}  E = {p}")
    print(f"\n   Reconstructs F: {report.reconstructs}")
    return code, f"{len(vectors)} transvections"


def cmd_survey(args) -> Outcome:
    report = run_survey(args.n, args.max_level, progress=not args.json)
    if _emit(report, args.json):
        return EXIT_OK, f"{report.examined} gates"

    print_header(f"ROOT LEVEL SURVEY (n = {report.n}, levels ≤ {report.max_level})")
    print(f"   {'source':<16}{'residue':>8}{'root level':>12}{'count':>8}")
    for row in report.rows:
        level = row.hat_level if row.hat_level is not None else f">{report.max_level}"
        print(f"   {row.source:<16}{row.residue_dim:>8}{str(level):>12}{row.count:>8}")
    print(f"\n   Examined: {report.examined}    Obstructed: {report.obstructed}")
    print(f"   Time: {report.elapsed_ms / 1000:.2f}s")
    return EXIT_OK, f"{report.examined} gates"


def cmd_schema(args) -> Outcome:
    print(json.dumps(climb_report_schema(), indent=2))
    return EXIT_OK, None


def cmd_history(args) -> Outcome:
    ledger = get_run_ledger()
    runs = [RunRecord(**row) for row in ledger.get_recent_runs(args.limit)]
    stats = ledger.get_stats()
    if args.json:
        print(json.dumps({"runs": [r.model_dump() for r in runs], "stats": stats}, indent=2))
        return EXIT_OK, None

    print_header("RUN HISTORY")
    for run in runs:
        print(f"   {run.timestamp[:19]}  {run.command:<10} exit={run.exit_code}  "
              f"{run.target or ''}  {run.verdict or ''}")
    print(f"\n   Total runs: {stats['total_runs']}    Failure rate: {stats['failure_rate']:.1%}")
    print(f"   Average runtime: {stats['avg_runtime_ms']:.1f} ms")
    if stats["verdicts"]:
        print("   Verdicts: " + ", ".join(f"{v} ×{c}" for v, c in sorted(stats["verdicts"].items())))
    return EXIT_OK, None


# =============================================================================
# ENTRY POINT
# =============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clifford-climb",
        description="Exact Clifford-hierarchy analysis of square roots of Hermitian gates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="Climb verdict for a circuit")
    analyze.add_argument("file", type=Path)
    analyze.add_argument("--hat", action="store_true", help="Also search the level of the root")
    analyze.add_argument("--minus", action="store_true", help="Use (I - iU)/√2 for the root")
    analyze.add_argument("--max-level", type=int, default=None)
    analyze.add_argument("--json", action="store_true")
    analyze.set_defaults(handler=cmd_analyze)

    verify = sub.add_parser("verify", help="Run a verification suite")
    verify.add_argument("--suite", choices=sorted(SUITES), default="paper")
    verify.add_argument("-n", type=int, default=None)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    enumerate_ = sub.add_parser("enumerate", help="List a climbing Clifford family")
    enumerate_.add_argument("--family", choices=FAMILIES, required=True)
    enumerate_.add_argument("-n", type=int, required=True)
    enumerate_.add_argument("--verify", action="store_true")
    enumerate_.add_argument("--json", action="store_true")
    enumerate_.set_defaults(handler=cmd_enumerate)

    expand = sub.add_parser("expand", help="Exact Pauli expansion of a circuit")
    expand.add_argument("file", type=Path)
    expand.add_argument("--json", action="store_true")
    expand.set_defaults(handler=cmd_expand)

    decompose = sub.add_parser("decompose", help="Transvection factorization of a Clifford circuit")
    decompose.add_argument("file", type=Path)
    decompose.add_argument("--json", action="store_true")
    decompose.set_defaults(handler=cmd_decompose)

    survey = sub.add_parser("survey", help="Tabulate root levels of obstruction-free Hermitian Cliffords")
    survey.add_argument("-n", type=int, required=True)
    survey.add_argument("--max-level", type=int, default=None)
    survey.add_argument("--json", action="store_true")
    survey.set_defaults(handler=cmd_survey)

    schema = sub.add_parser("schema", help="Print the JSON schema of the climb report")
    schema.set_defaults(handler=cmd_schema)

    history = sub.add_parser("history", help="Show recent runs")
    history.add_argument("--limit", type=int, default=20)
    history.add_argument("--json", action="store_true")
    history.set_defaults(handler=cmd_history)
    return parser


def _target(args) -> Optional[str]:
    for attr in ("file", "suite", "family"):
        value = getattr(args, attr, None)
        if value is not None:
            return str(value)
    n = getattr(args, "n", None)
    return f"n={n}" if n is not None else None


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    start = time.time()
    code, verdict, error = EXIT_OK, None, None
    try:
        code, verdict = args.handler(args)
    except (CircuitError, ClimbError, FileNotFoundError) as e:
        code, error = EXIT_INPUT, f"{type(e).__name__}: {e}"
    except BudgetExceeded as e:
        code, error = EXIT_BUDGET, str(e)

    if error:
        print(f"❌ {error}", file=sys.stderr)
    if args.command != "history":
        log_run(
            command=args.command,
            target=_target(args),
            exit_code=code,
            verdict=verdict,
            runtime_ms=(time.time() - start) * 1000,
            error=error,
        )
    return code


if __name__ == "__main__":
    sys.exit(main())
