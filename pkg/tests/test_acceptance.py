"""Acceptance suite: one test per criterion, one printed verdict line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the verdict lines.
The oracle-equivalence corpora use seeded instances with sizes weighted
toward the cheap end of the range (the enumeration space grows like the
ordered-set-partition numbers); counts and tolerances are fixed here, not
tuned at run time.
"""

import time

import pytest

from batchfront.bench import loglog_slope, run_bench
from batchfront.frontier import pareto_bounded, pareto_precedence
from batchfront.generate import gen_random
from batchfront.model import Instance, Job, Lateness
from batchfront.oracle import oracle_pareto
from batchfront.verify import run_verification

BOUNDED_COUNT = 1000
PREC_COUNT = 500
SEED = 20_260_811


def _verdict(name: str, ok: bool, detail: str = "") -> None:
    mark = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"{mark} {name}{suffix}")


@pytest.fixture(scope="module")
def bounded_report():
    # criterion 1 corpus; criteria 3, 5, 6 ride on the same instrumented runs
    return run_verification("bounded", BOUNDED_COUNT, 2, 8, seed=SEED)


@pytest.fixture(scope="module")
def prec_report():
    return run_verification("prec", PREC_COUNT, 2, 7, seed=SEED + 1)


def test_criterion_1_bounded_oracle_equivalence(bounded_report):
    """Frontier and min-max-cost schedule match the brute-force oracle
    exactly over >= 1000 seeded small instances, n in [2, 8]."""
    ok = bounded_report.ok and bounded_report.attempted >= 1000
    _verdict(
        "criterion 1: bounded frontier == oracle",
        ok,
        f"{bounded_report.passed}/{bounded_report.attempted} instances",
    )
    assert ok, bounded_report.failures[:3]


def test_criterion_2_precedence_oracle_equivalence(prec_report):
    """Frontier matches the oracle exactly over >= 500 seeded precedence
    instances, n in [2, 7], edge probability 0.3."""
    ok = prec_report.ok and prec_report.attempted >= 500
    _verdict(
        "criterion 2: precedence frontier == oracle",
        ok,
        f"{prec_report.passed}/{prec_report.attempted} instances",
    )
    assert ok, prec_report.failures[:3]


def test_criterion_3_differential_solver_equivalence(bounded_report):
    """Every threshold step of criterion 1 replays the from-scratch reference
    solver on the same limits: equal feasibility, equal (makespan, max cost),
    and the returned schedule equals the greedy rebuild of the final limits.
    The replay runs inside the criterion-1 harness; zero mismatches allowed."""
    ok = bounded_report.ok
    _verdict("criterion 3: warm solver == reference solver on every step", ok)
    assert ok, bounded_report.failures[:3]


def test_criterion_4_fixed_worked_instances():
    """The three documented instances produce their exact frontiers."""
    two = Instance(
        jobs=(Job(1, 1, Lateness(3)), Job(2, 3, Lateness(20))), setup=2, capacity=2
    )
    three = Instance(
        jobs=(Job(1, 3, Lateness(5)), Job(2, 1, Lateness(6)), Job(3, 2, Lateness(10))),
        setup=2,
        capacity=2,
    )
    fork = Instance(
        jobs=(Job(1, 2, Lateness(3)), Job(2, 1, Lateness(10)), Job(3, 1, Lateness(10))),
        setup=1,
        capacity=None,
        precedence=((1, 2), (1, 3)),
    )
    results = {
        "two-job": (pareto_bounded(two).pairs(), [(6, 3), (8, 0)], oracle_pareto(two)),
        "three-job": (pareto_bounded(three).pairs(), [(10, 1)], oracle_pareto(three)),
        "fork": (pareto_precedence(fork).pairs(), [(6, 0)], oracle_pareto(fork)),
    }
    ok = all(got == want == list(ref.points) for got, want, ref in results.values())
    _verdict("criterion 4: fixed worked instances", ok)
    assert ok, {k: v[0] for k, v in results.items()}


def test_criterion_5_relocation_bound(bounded_report, prec_report):
    """Instrumented relocation counts stay within n*(n-1) on every run of
    criteria 1-2 (checked inside the harness; a breach is a failure there)."""
    ok = bounded_report.ok and prec_report.ok
    _verdict("criterion 5: relocations <= n(n-1) on every run", ok)
    assert ok


def test_criterion_6_monotonicity_invariants(bounded_report, prec_report):
    """Per-slot completions never decrease across solver iterations
    (asserted inside the solvers with check=True), frontier makespans
    strictly increase with strictly decreasing costs, and every returned
    schedule validates.  All enforced across the criteria 1-2 corpora."""
    ok = bounded_report.ok and prec_report.ok
    _verdict("criterion 6: monotonicity and validity invariants", ok)
    assert ok


def test_criterion_7_scaling_trend():
    """Benchmark-scale behaviour: n=100 average under 1 second over 30
    seeds; log-log slope over n in {100, 200, 400, 800} at most 3.3; the
    warm sweep and the restarting baseline produce identical frontiers with
    the warm sweep no slower at n >= 400."""
    t0 = time.perf_counter()
    times_100 = []
    for rep in range(30):
        inst = gen_random(100, seed=SEED + rep, profile="paper")
        start = time.perf_counter()
        pareto_bounded(inst)
        times_100.append(time.perf_counter() - start)
    avg_100 = sum(times_100) / len(times_100)
    under_second = avg_100 < 1.0

    pairs = [(100, avg_100)]
    for n in (200, 400, 800):
        per_size = []
        for rep in range(5):
            inst = gen_random(n, seed=SEED + rep, profile="paper")
            start = time.perf_counter()
            pareto_bounded(inst)
            per_size.append(time.perf_counter() - start)
        pairs.append((n, sum(per_size) / len(per_size)))
    slope = loglog_slope(pairs)
    slope_ok = slope <= 3.3

    naive_ok = True
    warm_beats_naive = True
    for n in (400, 800):
        warm, naive = run_bench(["main1", "main1_naive"], [n], repetitions=5, seed=SEED)
        naive_ok = naive_ok and warm.points == naive.points
        warm_beats_naive = warm_beats_naive and warm.avg_seconds <= naive.avg_seconds

    ok = under_second and slope_ok and naive_ok and warm_beats_naive
    _verdict(
        "criterion 7: scaling trend",
        ok,
        f"n=100 avg {avg_100 * 1e3:.2f} ms, slope {slope:.2f}, "
        f"warm<=naive at n>=400: {warm_beats_naive}, elapsed {time.perf_counter() - t0:.0f}s",
    )
    assert under_second, f"n=100 average {avg_100:.3f}s"
    assert slope_ok, f"log-log slope {slope:.2f}"
    assert naive_ok, "warm and naive frontiers differ"
    assert warm_beats_naive, "warm sweep slower than the restarting baseline"
