"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s``.  The construction sweep
(criterion 3) covers every even n up to one million and takes a few minutes;
everything else is fast.
"""

import json
import time

from knodeldom import (
    KnodelGraph,
    SolveOptions,
    certify_constructions,
    check_power_diff_identity,
    gamma_t_formula,
    side_lower_bound,
    solve_min_total_dominating,
)
from knodeldom.cli import main as cli_main
from knodeldom.solver import CERT_BOUND_MATCHED, CERT_EXHAUSTED, STRATEGY_PRUNED, STRATEGY_PURE
from knodeldom.structure import run_suite

FULL_SCALE_N = 1_000_000

DESK_VALUES = {8: 4, 10: 4, 12: 6, 14: 6, 16: 8, 18: 8, 20: 8, 22: 10, 24: 10}


def _verdict(number: int, name: str, ok: bool, detail: str) -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[criterion {number}] {name}: {status} ({detail})")
    assert ok, f"criterion {number} ({name}) failed: {detail}"


def test_criterion_1_desk_scale_exhaustive():
    started = time.perf_counter()
    mismatches = []
    for n in range(8, 26, 2):
        res = solve_min_total_dominating(
            KnodelGraph(3, n), SolveOptions(strategy=STRATEGY_PURE)
        )
        if res.optimum != gamma_t_formula(n) or res.optimum != DESK_VALUES[n]:
            mismatches.append((n, res.optimum))
    elapsed = time.perf_counter() - started
    _verdict(
        1,
        "exhaustive solver reproduces the closed form for n=8..24",
        not mismatches and elapsed < 300,
        f"{len(DESK_VALUES)} instances, mismatches={mismatches}, {elapsed:.1f}s",
    )


def test_criterion_2_pruned_extension():
    started = time.perf_counter()
    bad = []
    for n in range(26, 38, 2):
        res = solve_min_total_dominating(
            KnodelGraph(3, n), SolveOptions(strategy=STRATEGY_PRUNED)
        )
        if res.optimum != gamma_t_formula(n) or res.certificate not in (
            CERT_BOUND_MATCHED,
            CERT_EXHAUSTED,
        ):
            bad.append((n, res.optimum, res.certificate))
    elapsed = time.perf_counter() - started
    _verdict(
        2,
        "pruned solver matches the closed form for n=26..36 with certificates",
        not bad and elapsed < 600,
        f"6 instances, bad={bad}, {elapsed:.1f}s",
    )


def test_criterion_3_construction_certification_full_scale():
    report = certify_constructions(8, FULL_SCALE_N)
    _verdict(
        3,
        "constructions verify as optimal total dominating sets for n=8..10^6",
        report.passed and report.elapsed < 600,
        f"{report.instances} instances, first_failure={report.first_failure}, "
        f"{report.elapsed:.1f}s",
    )


def test_criterion_4_bound_identity_full_scale():
    started = time.perf_counter()
    first_bad = None
    for n in range(8, FULL_SCALE_N + 1, 2):
        if gamma_t_formula(n) != 2 * side_lower_bound(n):
            first_bad = n
            break
    elapsed = time.perf_counter() - started
    _verdict(
        4,
        "4*ceil(n/10) adjustment equals 2*ceil(n/5) for every even n in [8, 10^6]",
        first_bad is None,
        f"first_mismatch={first_bad}, {elapsed:.1f}s",
    )


def test_criterion_5_structural_property_suite():
    started = time.perf_counter()
    outcomes = run_suite(
        128,
        exhaustive=True,
        samples=10_000,
        seed=1729,
        triple_n_max=64,
        counting_n_max=40,
    )
    elapsed = time.perf_counter() - started
    failures = {o.name: o.counterexample for o in outcomes if not o.passed}
    required = {
        "pair-intersection-count",
        "k23-freeness",
        "unique-regime",
        "two-common-characterization",
        "counting-identities",
    }
    missing = required - {o.name for o in outcomes if o.cases > 0}
    cases = {o.name: o.cases for o in outcomes}
    enough_samples = cases.get("counting-identities", 0) >= 10_000
    _verdict(
        5,
        "structural property suite has zero counterexamples",
        not failures and not missing and enough_samples,
        f"cases={cases}, failures={failures}, missing={sorted(missing)}, {elapsed:.1f}s",
    )


def test_criterion_6_power_difference_identity():
    reports = [check_power_diff_identity(x, 12) for x in (2, 3)]
    bad = [(r.x, r.counterexample) for r in reports if not r.passed]
    _verdict(
        6,
        "power-difference uniqueness holds for x in {2,3}, exponents <= 12",
        not bad,
        f"checked={[r.quadruples_checked for r in reports]}, bad={bad}",
    )


def test_criterion_7_solver_determinism_across_task_counts(capsys):
    payloads = []
    for tasks in ("1", "4"):
        code = cli_main(
            ["solve", "--n", "22", "--strategy", "pruned", "--tasks", tasks, "--json"]
        )
        out = capsys.readouterr().out
        assert code == 0
        result = json.loads(out)["result"]
        payloads.append(
            json.dumps({k: result[k] for k in ("optimum", "witness", "certificate")})
        )
    with capsys.disabled():
        _verdict(
            7,
            "cmd_solve fields are byte-identical across task counts",
            payloads[0] == payloads[1],
            f"fields={payloads[0]}",
        )
