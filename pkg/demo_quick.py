# =============================================================================
# Clifford Climb
# Copyright (c) 2024. MIT License. See LICENSE file for details.
# =============================================================================
"""Quick demo: climb verdicts and root levels for the bundled circuits.

For every circuit the demo prints the symplectic verdict and then searches
the level of (I + iU)/√2 directly, so the two can be compared side by side.

Usage:
    python demo_quick.py
    python demo_quick.py circuits/swap.circ circuits/cz_pair.circ
"""
import json
import sys
import time
from datetime import datetime
from pathlib import Path

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from circuit import CircuitError, evaluate, load_circuit
from config.settings import settings
from engine.hierarchy_analyzer import climb_verdict
from utils.budget import BudgetExceeded

DEFAULT_CIRCUITS = ["hadamard.circ", "z.circ", "cz.circ", "swap.circ", "cnot.circ", "cz_pair.circ"]


def print_box(text: str, char: str = "="):
    """Print text in a box."""
    width = 70
    print(f"\n{char * width}")
    print(f"  {text}")
    print(f"{char * width}")


def print_section(title: str, emoji: str = "▶"):
    """Print a section header."""
    print(f"\n{emoji} {title}")
    print("-" * 50)


def run_demo(paths=None):
    """Analyze each circuit with a root-level search."""
    if not paths:
        paths = [settings.circuits_dir / name for name in DEFAULT_CIRCUITS]

    print_box("🧗 CLIFFORD CLIMB", "=")
    print(f"\n⏰ Time: {datetime.now().strftime('%Y-%m-%d %H:%M:%S')}")
    print(f"🔢 Limits: n ≤ {settings.max_qubits}, level ≤ {settings.max_level}, "
          f"{settings.budget:,} work units per search")

    start_time = time.time()
    results = []
    for path in paths:
        path = Path(path)
        print_section(path.name, "🔍")
        try:
            u = evaluate(load_circuit(path))
            if not u.is_hermitian():
                print("   ⚠ not Hermitian, skipping the root search")
                continue
            report = climb_verdict(u, description=str(path), hat_bound=settings.max_level)
        except (CircuitError, FileNotFoundError) as e:
            print(f"   ❌ {e}")
            continue
        except BudgetExceeded as e:
            print(f"   ⏳ {e}")
            continue

        print(f"   ✓ Verdict: {report.verdict.value}" + ("  (trivial)" if report.trivial else ""))
        if report.clifford is not None:
            print(f"   ✓ Residue dim: {report.clifford.residue_dim}")
        if report.evidence.obstruction is not None:
            pair = report.evidence.obstruction
            print(f"   ✓ Obstruction: U·{pair.source}·U = {pair.image}")
        level = report.hat_level if report.hat_level is not None else f"> {report.max_level}"
        print(f"   ✓ Level of U: {report.min_level}    Level of root: {level}")
        if report.consistent is False:
            print("   ⚠ verdict and level search disagree")
        results.append(report.model_dump(mode="json"))

    total_time = time.time() - start_time

    print_box("📊 METRICS", "-")
    print(f"   • Circuits analyzed: {len(results)}")
    print(f"   • Total time: {total_time:.1f} seconds")

    print("\n" + "=" * 70)
    print("  ✅ Demo complete!")
    print("=" * 70 + "\n")
    return results


def main():
    """Main entry point."""
    results = run_demo(sys.argv[1:])

    if results:
        output_dir = settings.data_dir / "output"
        output_dir.mkdir(parents=True, exist_ok=True)

        filename = f"demo_{datetime.now().strftime('%Y%m%d_%H%M%S')}.json"
        with open(output_dir / filename, "w") as f:
            json.dump(results, f, indent=2)

        print(f"💾 Results saved to: {output_dir / filename}")


if __name__ == "__main__":
    main()
