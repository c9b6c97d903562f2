"""Wall-clock scaling harness for the frontier algorithms.

Instances come from the benchmark-scale generator profiles; generation is
excluded from the timed region and runs are strictly sequential so the
measurements do not interfere.  Records carry the totals a scaling table
needs: average and maximum seconds, frontier points, and relocations.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .frontier import pareto_bounded, pareto_bounded_naive, pareto_precedence
from .generate import gen_random

ALGORITHMS = ("main1", "main1_naive", "main2")

CSV_HEADER = "algorithm,n,avg_seconds,max_seconds,points,moves"


@dataclass(frozen=True)
class BenchRecord:
    algorithm: str
    n: int
    repetitions: int
    avg_seconds: float
    max_seconds: float
    points: int
    moves: int

    def __post_init__(self):
        assert self.repetitions >= 1
        assert self.avg_seconds <= self.max_seconds + 1e-12

    def csv_row(self) -> str:
        return (
            f"{self.algorithm},{self.n},{self.avg_seconds:.6e},"
            f"{self.max_seconds:.6e},{self.points},{self.moves}"
        )


def _runner(algorithm: str):
    if algorithm == "main1":
        return pareto_bounded, "paper"
    if algorithm == "main1_naive":
        return pareto_bounded_naive, "paper"
    if algorithm == "main2":
        return pareto_precedence, "prec"
    raise ValueError(f"unknown algorithm {algorithm!r}, expected one of {ALGORITHMS}")


def run_bench(algorithms, sizes, repetitions: int, seed: int) -> list[BenchRecord]:
    """One record per (algorithm, n), rows sorted the same way.

    Repetition r of every (algorithm, n) cell uses seed ``seed + r`` so the
    frontiers of different algorithms at equal n and seed are comparable.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be >= 1")
    records = []
    for algorithm in sorted(algorithms):
        run, profile = _runner(algorithm)
        for n in sorted(sizes):
            instances = [gen_random(n, seed + r, profile=profile) for r in range(repetitions)]
            times = []
            points = 0
            moves = 0
            for instance in instances:
                t0 = time.perf_counter()
                front = run(instance)
                times.append(time.perf_counter() - t0)
                points += len(front.points)
                moves += front.relocations
            records.append(
                BenchRecord(
                    algorithm=algorithm,
                    n=n,
                    repetitions=repetitions,
                    avg_seconds=sum(times) / len(times),
                    max_seconds=max(times),
                    points=points,
                    moves=moves,
                )
            )
    return records


def to_csv(records) -> str:
    return "\n".join([CSV_HEADER] + [r.csv_row() for r in records]) + "\n"


def loglog_slope(pairs) -> float:
    """Least-squares slope of log(seconds) against log(n)."""
    xs = [math.log(n) for n, _ in pairs]
    ys = [math.log(t) for _, t in pairs]
    mean_x = sum(xs) / len(xs)
    mean_y = sum(ys) / len(ys)
    var = sum((x - mean_x) ** 2 for x in xs)
    if var == 0:
        return 0.0
    cov = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    return cov / var


def summary_lines(records) -> list[str]:
    """Fitted log-log slope of average time per algorithm."""
    lines = []
    by_algorithm: dict[str, list[tuple[int, float]]] = {}
    for r in records:
        by_algorithm.setdefault(r.algorithm, []).append((r.n, r.avg_seconds))
    for algorithm in sorted(by_algorithm):
        pairs = by_algorithm[algorithm]
        if len(pairs) >= 2:
            lines.append(f"{algorithm}: fitted log-log slope {loglog_slope(pairs):.2f}")
        else:
            lines.append(f"{algorithm}: slope needs at least two sizes")
    return lines
