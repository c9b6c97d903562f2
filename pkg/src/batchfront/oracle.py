"""Exhaustive ground truth for small instances.

Every ordered partition of the job set into nonempty batches is generated
(each batch a sorted id set, so nothing is counted twice), filtered by
capacity and strict precedence, timetabled, and scored.  The Pareto filter
over all of them is the reference frontier the solvers are verified
against.  Deliberately unclever: correctness over speed, no pruning beyond
feasibility itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .model import Instance, Schedule, timetable


class OracleSizeError(ValueError):
    """Raised when an instance is too large to enumerate exhaustively."""


@dataclass(frozen=True)
class EnumerationLimits:
    max_jobs_bounded: int = 8
    max_jobs_precedence: int = 7
    max_schedules: int = 2_000_000


DEFAULT_LIMITS = EnumerationLimits()


def _guard_size(instance: Instance, limits: EnumerationLimits) -> None:
    cap = limits.max_jobs_precedence if instance.precedence else limits.max_jobs_bounded
    if instance.n > cap:
        raise OracleSizeError(
            f"{instance.n} jobs exceed the exhaustive limit of {cap}"
        )


def enumerate_feasible(
    instance: Instance, limits: EnumerationLimits = DEFAULT_LIMITS
) -> Iterator[Schedule]:
    """Yield every feasible schedule exactly once, timetabled.

    Batches are emitted earliest-first and placed as the nonempty suffix of
    the n slots.  Job order within a batch is immaterial and never
    distinguishes schedules.
    """
    _guard_size(instance, limits)
    n = instance.n
    for batches in _partitions(instance, limits):
        slots = [()] * (n - len(batches)) + batches
        yield timetable(slots, instance)


def _partitions(instance: Instance, limits: EnumerationLimits) -> Iterator[list[tuple[int, ...]]]:
    """Ordered partitions into nonempty capacity-respecting batches.

    With precedence, a job may only join the next batch once all its
    predecessors sit in strictly earlier batches.
    """
    n = instance.n
    cap = instance.effective_capacity
    preds: dict[int, frozenset[int]] = {j: frozenset() for j in range(1, n + 1)}
    for a, b in instance.precedence:
        preds[b] = preds[b] | {a}

    emitted = 0

    def rec(remaining: tuple[int, ...], placed: frozenset[int], acc: list[tuple[int, ...]]):
        nonlocal emitted
        if not remaining:
            emitted += 1
            if emitted > limits.max_schedules:
                raise OracleSizeError(
                    f"more than {limits.max_schedules} feasible schedules"
                )
            yield list(acc)
            return
        ready = tuple(j for j in remaining if preds[j] <= placed)
        for size in range(1, min(cap, len(ready)) + 1):
            for batch in combinations(ready, size):
                chosen = frozenset(batch)
                acc.append(batch)
                yield from rec(
                    tuple(j for j in remaining if j not in chosen),
                    placed | chosen,
                    acc,
                )
                acc.pop()

    yield from rec(tuple(range(1, n + 1)), frozenset(), [])


@dataclass(frozen=True)
class OracleFrontier:
    """Reference frontier: pairs sorted by makespan, one witness each."""

    points: tuple[tuple[int, int], ...]
    witnesses: dict[tuple[int, int], Schedule]
    schedules_seen: int

    @property
    def min_max_cost(self) -> int:
        return self.points[-1][1]


def oracle_pareto(
    instance: Instance, limits: EnumerationLimits = DEFAULT_LIMITS
) -> OracleFrontier:
    """Score every feasible schedule and keep the non-dominated pairs.

    A pair dominates another when it is <= on both objectives and < on at
    least one.  Witness schedules are rebuilt only for the surviving pairs.
    """
    _guard_size(instance, limits)
    n = instance.n
    cap = instance.effective_capacity
    setup = instance.setup
    proc = [0] * (n + 1)
    costf = [None] * (n + 1)
    for job in instance.jobs:
        proc[job.id] = job.p
        costf[job.id] = job.cost.value

    pred_mask = [0] * (n + 1)
    for a, b in instance.precedence:
        pred_mask[b] |= 1 << a
    has_prec = bool(instance.precedence)

    best: dict[tuple[int, int], list[tuple[int, ...]]] = {}
    seen = 0
    max_schedules = limits.max_schedules

    def rec(remaining: tuple[int, ...], placed_bits: int, t: int, worst, acc: list):
        nonlocal seen
        if not remaining:
            seen += 1
            if seen > max_schedules:
                raise OracleSizeError(f"more than {max_schedules} feasible schedules")
            key = (t, worst)
            if key not in best:
                best[key] = list(acc)
            return
        if has_prec:
            ready = tuple(j for j in remaining if pred_mask[j] & ~placed_bits == 0)
        else:
            ready = remaining
        for size in range(1, min(cap, len(ready)) + 1):
            for batch in combinations(ready, size):
                t2 = t + setup
                for j in batch:
                    t2 += proc[j]
                w2 = worst
                for j in batch:
                    c = costf[j](t2)
                    if w2 is None or c > w2:
                        w2 = c
                bits = placed_bits
                for j in batch:
                    bits |= 1 << j
                acc.append(batch)
                rec(tuple(j for j in remaining if not bits >> j & 1), bits, t2, w2, acc)
                acc.pop()

    rec(tuple(range(1, n + 1)), 0, 0, None, [])

    frontier: list[tuple[int, int]] = []
    running = None
    for c_max, f_max in sorted(best):
        if running is None or f_max < running:
            frontier.append((c_max, f_max))
            running = f_max

    witnesses = {}
    for pair in frontier:
        batches = best[pair]
        slots = [()] * (n - len(batches)) + batches
        witnesses[pair] = timetable(slots, instance)
    return OracleFrontier(tuple(frontier), witnesses, seen)
