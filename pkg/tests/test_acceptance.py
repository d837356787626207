"""Acceptance criteria, each at its stated tolerance and time budget.

Every test records one PASS/FAIL line; the lines are printed in a terminal
summary section at the end of the run.
"""
import random
import subprocess
import sys
import time

import pytest

from conftest import ACCEPTANCE_LINES
from mullat.lattice import chain
from mullat.mult import is_primary, meet_mult
from mullat.ring_bridge import ideal_lattice_zn, multiplicative_sets
from mullat.s_theory import (
    check_s_stationary,
    is_s_primary,
    is_s_prime,
    meeting_member,
    top_set,
    validate_mclosed,
)
from mullat.theorems import LIMITATION, summarize, sweep_zn

SWEEP = (4, 60, 6)


def record(number: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture(scope="module")
def full_sweep():
    t0 = time.perf_counter()
    items = sweep_zn(*SWEEP, theorems=True)
    return items, time.perf_counter() - t0


def _failures(items, names):
    out = []
    for it in items:
        for name, status, _ in it.statuses:
            if name in names and status != "pass":
                out.append((it.n, it.s_ring, name, status))
    return out


def test_criterion_1_z12_example():
    t0 = time.perf_counter()
    Z = ideal_lattice_zn(12)
    M, i = Z.M, Z.index
    S = validate_mclosed(M, {i(1), i(3)})
    S4 = validate_mclosed(M, {i(1), i(4)})
    checks = [
        is_s_primary(M, S, i(4)) is not None,
        is_s_prime(M, S, i(4)) is None,
        is_s_primary(M, S, i(6)) is not None,
        not is_primary(M, i(6)),
        is_primary(M, i(4)),
        is_s_primary(M, S4, i(4)) is None,
        meeting_member(S4, i(4)) is not None,
    ]
    elapsed = time.perf_counter() - t0
    ok = all(checks) and elapsed < 1.0
    record(1, "Id(Z12) worked example", ok, f"{sum(checks)}/{len(checks)} claims, {elapsed:.3f}s < 1s")
    assert all(checks)
    assert elapsed < 1.0


def test_criterion_2_correspondence_sweep():
    t0 = time.perf_counter()
    items = sweep_zn(*SWEEP, theorems=False)
    elapsed = time.perf_counter() - t0
    bad = [it for it in items if not it.passed]
    ok = not bad and elapsed < 60 and len(items) == 2338
    record(2, "ring/lattice correspondence sweep", ok, f"{len(items)} instances, {len(bad)} mismatches, {elapsed:.1f}s < 60s")
    assert not bad, bad[:3]
    assert len(items) == 2338
    assert elapsed < 60


THEOREM_CHECKS = {
    "irreducible_implies_primary",
    "finite_meet_s_primary",
    "saturation_of_s_prime_is_prime",
    "meet_below_s_prime",
    "quotient_lemma",
    "s_maximal_radical_primary",
}


def test_criterion_3_theorem_suite(full_sweep):
    items, elapsed = full_sweep
    bad = _failures(items, THEOREM_CHECKS)
    counts = summarize(items)
    cases = sum(counts[name]["cases"] for name in THEOREM_CHECKS)
    ok = not bad and elapsed < 120
    record(3, "theorem property suite (a)-(f)", ok, f"{cases} cases, {len(bad)} counterexamples, {elapsed:.1f}s < 120s")
    assert not bad, bad[:3]
    assert all(counts[name]["cases"] > 0 for name in THEOREM_CHECKS)
    assert elapsed < 120


def test_criterion_4_first_uniqueness(full_sweep):
    items, elapsed = full_sweep
    bad = _failures(items, {"first_uniqueness", "existence"})
    cases = summarize(items)["first_uniqueness"]["cases"]
    ok = not bad and elapsed < 120 and cases > 0
    record(4, "first uniqueness over eligible elements", ok, f"{cases} eligible elements, {len(bad)} mismatches, {elapsed:.1f}s < 120s")
    assert not bad, bad[:3]
    assert cases > 0
    assert elapsed < 120


def test_criterion_5_cohen_kaplansky(full_sweep):
    items, _ = full_sweep
    bad = _failures(items, {"cohen_kaplansky"})
    ran = summarize(items)["cohen_kaplansky"]["pass"]
    ok = not bad and ran == len(items)
    record(5, "Cohen-Kaplansky biconditional agreement", ok, f"{ran}/{len(items)} r-lattice instances; {LIMITATION}")
    assert not bad, bad[:3]
    assert ran == len(items)


def test_criterion_6_noetherian_equivalences(full_sweep):
    items, _ = full_sweep
    bad = _failures(items, {"s_noetherian_equivalences"})
    ran = summarize(items)["s_noetherian_equivalences"]["pass"]
    M = meet_mult(chain(5))
    prefix_verdict = check_s_stationary(M, top_set(M), [0, 1, 2, 3, 4])
    ok = not bad and ran == len(items) and prefix_verdict is None
    record(
        6,
        "S-Noetherian equivalences",
        ok,
        f"{ran}/{len(items)} instances agree; strict 5-step prefix -> "
        f"{'NOT_IN_PREFIX' if prefix_verdict is None else prefix_verdict}",
    )
    assert not bad, bad[:3]
    assert ran == len(items)
    assert prefix_verdict is None


def _random_configs(k: int, seed: int = 20261015) -> list[list[str]]:
    rng = random.Random(seed)
    out = []
    while len(out) < k:
        n = rng.randint(4, 48)
        S = ",".join(map(str, rng.choice(multiplicative_sets(n, 4))))
        kind = rng.choice(["analyze", "decompose", "zn", "verify", "check-axioms", "product"])
        if kind == "analyze":
            out.append(["analyze", "--zn", str(n), "--s", S])
        elif kind == "decompose":
            out.append(["decompose", "--zn", str(n), "--s", S, "--element", "0", "--all"])
        elif kind == "zn":
            out.append(["zn", "--n", str(n), "--s", S, "--verify"])
        elif kind == "verify":
            out.append(["verify", "--zn", str(n), "--s", S])
        elif kind == "check-axioms":
            out.append(["check-axioms", "--zn", str(n)])
        else:
            out.append(["product", f"zn:{rng.randint(2, 9)}", f"zn:{rng.randint(2, 9)}"])
    return out


def test_criterion_7_determinism():
    configs = _random_configs(10)
    mismatched = []
    for argv in configs:
        runs = [
            subprocess.run([sys.executable, "-m", "mullat.cli", *argv], capture_output=True, check=False)
            for _ in range(2)
        ]
        if runs[0].stdout != runs[1].stdout or runs[0].returncode != runs[1].returncode or not runs[0].stdout:
            mismatched.append(argv)
    ok = not mismatched
    record(7, "byte-identical JSON across runs", ok, f"{len(configs) - len(mismatched)}/{len(configs)} configs identical")
    assert not mismatched, mismatched
