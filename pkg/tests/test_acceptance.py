"""Acceptance criteria, one test per criterion.

Every test asserts the criterion's own tolerance and time budget and records a
one-line verdict; the verdicts are printed in the terminal summary (see
conftest.py) and when this file is run as a script.
"""
import subprocess
import sys
import time

import pytest

from cohspace import classical_gates as cg
from cohspace import verify
from cohspace.complex_sets import CSet

from test_classical_gates import TABLE_1, TABLE_1_INPUTS, TABLE_2, TABLE_3

RESULTS: dict[int, str] = {}
CONFIG = verify.VerifyConfig(seed=0)


def _record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"


def _run_suite(n, name, stated, budget):
    """Run a suite and judge each check against the stated tolerance for its prefix."""
    t0 = time.perf_counter()
    checks = verify.SUITE_FUNCS[name](CONFIG)
    elapsed = time.perf_counter() - t0
    stated_for = {ch.check: next(t for prefix, t in stated.items() if ch.check.startswith(prefix))
                  for ch in checks}
    bad = [f"{ch.check}={ch.residual:.2e}>{stated_for[ch.check]:.0e}"
           for ch in checks if not ch.residual <= stated_for[ch.check]]
    worst = max(checks, key=lambda ch: ch.residual / stated_for[ch.check] if stated_for[ch.check] else ch.residual)
    ok = not bad and elapsed < budget
    _record(n, ok, f"{name}: {len(checks)} checks, {elapsed:.2f}s (< {budget}s)"
            + (f"; failures: {', '.join(bad)}" if bad else f"; tightest {worst.check}={worst.residual:.1e}"))
    assert not bad, bad
    assert elapsed < budget
    return checks


def test_criterion_01_classical_tables():
    t0 = time.perf_counter()
    r1, r2 = CSet([1]), CSet([1, 2])
    mismatches = 0
    for gate, expected in TABLE_1.items():
        rows = cg.truth_table(cg.GateKind(gate), r2).reordered("first-fastest")
        mismatches += sum(i != ei or o[0] != e for (i, o), ei, e in zip(rows, TABLE_1_INPUTS, expected))
    mismatches += sum(a != b for a, b in zip(cg.truth_table(cg.GateKind.CNOT, r1).rows, TABLE_2))
    mismatches += sum(a != b for a, b in zip(cg.truth_table(cg.GateKind.CNOT, r2).rows, TABLE_3))
    elapsed = time.perf_counter() - t0
    entries = 3 * 16 + len(TABLE_2) + len(TABLE_3)
    ok = mismatches == 0 and elapsed < 1.0
    _record(1, ok, f"tables: {entries} entries, {mismatches} mismatches, {elapsed:.3f}s (< 1s)")
    assert ok


def test_criterion_02_boolean_ring():
    checks = _run_suite(2, "ring", {"ring.": 0.0}, 1.0)
    assert CONFIG.ring_samples == 10_000
    assert any(ch.check == "ring.additive_counterexample" for ch in checks)


def test_criterion_03_projectors():
    _run_suite(3, "projectors", {"projectors.": 1e-9}, 10.0)


def test_criterion_04_moments():
    _run_suite(4, "moments", {"moments.trace_number": 1e-8, "moments.": 1e-7}, 60.0)


def test_criterion_05_covariance():
    assert CONFIG.n_max_covariance == 96
    _run_suite(5, "covariance", {"covariance.displacement": 1e-7, "covariance.evolution": 1e-9,
                                 "covariance.q_evolution": 1e-8}, 60.0)


def test_criterion_06_resolution():
    assert CONFIG.disk_radius == 6.0 and tuple(CONFIG.grid) == (200, 256)
    _run_suite(6, "resolution", {"resolution.n1.identity": 1e-3, "resolution.n2.identity": 1e-3,
                                 "resolution.rank_one.identity": 1e-3, "resolution.n1.grid": 1e-4,
                                 "resolution.n2.grid": 1e-4, "resolution.rank_one.grid": 1e-4,
                                 "resolution.n1.q_integral": 2e-3, "resolution.n2.q_integral": 2e-3}, 60.0)


def test_criterion_07_residue_engine():
    assert CONFIG.contour_trials == 1000
    _run_suite(7, "contour", {"contour.projector_idempotency": 1e-12, "contour.projector_pole_set": 0.0,
                              "contour.": 1e-9}, 60.0)


def test_criterion_08_orthogonal_states():
    assert CONFIG.lemma_spaces == 100
    _run_suite(8, "lemma", {"lemma.": 1e-8}, 60.0)


def test_criterion_09_quantum_cnot():
    _run_suite(9, "cnot", {"cnot.metric_unitarity": 1e-12, "cnot.target_metric": 1e-12,
                           "cnot.target_commutator": 1e-12, "cnot.target_involution": 1e-12,
                           "cnot.target_square": 1e-12, "cnot.target_map_cond": 0.0,
                           "cnot.e1_": 1e-10, "cnot.control_eigen": 1e-10, "cnot.e2_": 1e-10,
                           "cnot.consistency": 1e-8, "cnot.lifted": 1e-8, "cnot.limit": 1e-8}, 5.0)


def test_criterion_10_verify_all():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "cohspace.cli", "verify", "--suite", "all"],
                          capture_output=True, text=True, timeout=300)
    elapsed = time.perf_counter() - t0
    ok = proc.returncode == 0 and elapsed < 120
    _record(10, ok, f"verify --suite all: exit {proc.returncode}, {elapsed:.1f}s (< 120s)")
    assert ok, proc.stderr[-2000:]


if __name__ == "__main__":
    code = pytest.main([__file__, "-q"])
    sys.exit(code)
