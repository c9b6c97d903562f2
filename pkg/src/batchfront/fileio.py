"""JSON instance files.

Layout::

    {
      "setup": 2,
      "capacity": 2,            // or "unbounded"
      "jobs": [
        {"id": 1, "p": 3, "cost": {"type": "lateness", "due": 5}},
        ...
      ],
      "precedence": [[1, 2]]    // optional, unbounded only
    }

Cost objects by type: lateness/tardiness take ``due``, weighted_completion
takes ``w``, affine takes ``a`` and ``c``, step takes ``breakpoints`` (a
list of [time, value] pairs).  Parse errors carry the source name and, for
syntax errors, line and column.  ``parse_instance(emit_instance(x)) == x``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .model import (
    Affine,
    CostSpec,
    Instance,
    InstanceError,
    Job,
    Lateness,
    StepTable,
    Tardiness,
    WeightedCompletion,
)

_COST_TYPES = ("lateness", "tardiness", "weighted_completion", "affine", "step")


def _cost_from_obj(obj, where: str) -> CostSpec:
    if not isinstance(obj, dict) or "type" not in obj:
        raise InstanceError(f"{where}: cost must be an object with a \"type\" key")
    kind = obj["type"]
    try:
        if kind == "lateness":
            return Lateness(due=int(obj["due"]))
        if kind == "tardiness":
            return Tardiness(due=int(obj["due"]))
        if kind == "weighted_completion":
            return WeightedCompletion(w=int(obj["w"]))
        if kind == "affine":
            return Affine(a=int(obj["a"]), c=int(obj["c"]))
        if kind == "step":
            return StepTable(breakpoints=tuple((int(t), int(v)) for t, v in obj["breakpoints"]))
    except KeyError as missing:
        raise InstanceError(f"{where}: cost type {kind!r} is missing field {missing}") from None
    except (TypeError, ValueError) as bad:
        raise InstanceError(f"{where}: {bad}") from None
    raise InstanceError(f"{where}: unknown cost type {kind!r}, expected one of {_COST_TYPES}")


def _cost_to_obj(cost: CostSpec) -> dict:
    if isinstance(cost, Lateness):
        return {"type": "lateness", "due": cost.due}
    if isinstance(cost, Tardiness):
        return {"type": "tardiness", "due": cost.due}
    if isinstance(cost, WeightedCompletion):
        return {"type": "weighted_completion", "w": cost.w}
    if isinstance(cost, Affine):
        return {"type": "affine", "a": cost.a, "c": cost.c}
    if isinstance(cost, StepTable):
        return {"type": "step", "breakpoints": [[t, v] for t, v in cost.breakpoints]}
    raise TypeError(f"unknown cost spec {cost!r}")


def parse_instance(text: str, source: str = "<string>") -> Instance:
    """Parse instance JSON; InstanceError messages carry position context."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise InstanceError(f"{source}:{err.lineno}:{err.colno}: {err.msg}") from None
    if not isinstance(doc, dict):
        raise InstanceError(f"{source}: top level must be an object")

    unknown = set(doc) - {"setup", "capacity", "jobs", "precedence"}
    if unknown:
        raise InstanceError(f"{source}: unknown keys {sorted(unknown)}")
    for key in ("setup", "capacity", "jobs"):
        if key not in doc:
            raise InstanceError(f"{source}: missing key \"{key}\"")

    cap = doc["capacity"]
    if cap == "unbounded":
        capacity = None
    elif isinstance(cap, int) and not isinstance(cap, bool):
        capacity = cap
    else:
        raise InstanceError(f"{source}: capacity must be an integer or \"unbounded\"")

    if not isinstance(doc["jobs"], list) or not doc["jobs"]:
        raise InstanceError(f"{source}: \"jobs\" must be a non-empty array")
    jobs = []
    for idx, row in enumerate(doc["jobs"]):
        where = f"{source}: jobs[{idx}]"
        if not isinstance(row, dict):
            raise InstanceError(f"{where}: must be an object")
        try:
            jobs.append(Job(id=int(row["id"]), p=int(row["p"]), cost=_cost_from_obj(row.get("cost"), where)))
        except KeyError as missing:
            raise InstanceError(f"{where}: missing field {missing}") from None
        except (TypeError, ValueError) as bad:
            if isinstance(bad, InstanceError):
                raise
            raise InstanceError(f"{where}: {bad}") from None

    edges = doc.get("precedence", [])
    if not isinstance(edges, list):
        raise InstanceError(f"{source}: \"precedence\" must be an array of [pred, succ] pairs")
    parsed_edges = []
    for idx, pair in enumerate(edges):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise InstanceError(f"{source}: precedence[{idx}] must be a [pred, succ] pair")
        parsed_edges.append((int(pair[0]), int(pair[1])))

    try:
        return Instance(
            jobs=tuple(jobs),
            setup=int(doc["setup"]),
            capacity=capacity,
            precedence=tuple(parsed_edges),
        )
    except InstanceError as err:
        raise InstanceError(f"{source}: {err}") from None


def emit_instance(instance: Instance) -> str:
    """Canonical JSON for an instance; stable under parse/emit round trips."""
    doc = {
        "setup": instance.setup,
        "capacity": instance.capacity if instance.capacity is not None else "unbounded",
        "jobs": [
            {"id": job.id, "p": job.p, "cost": _cost_to_obj(job.cost)}
            for job in instance.jobs
        ],
    }
    if instance.precedence:
        doc["precedence"] = [[a, b] for a, b in instance.precedence]
    return json.dumps(doc, indent=2) + "\n"


def load_instance(path: str | Path) -> Instance:
    path = Path(path)
    return parse_instance(path.read_text(encoding="utf-8"), source=str(path))


def save_instance(instance: Instance, path: str | Path) -> None:
    Path(path).write_text(emit_instance(instance), encoding="utf-8")
