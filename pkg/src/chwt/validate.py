"""Independent checker for exported schedules.

Works only from the exported JSON document.  The task census, dependencies
and durations are recomputed here from first principles rather than taken
from :mod:`chwt.schedule`, so a bug in the simulator cannot hide itself.
"""
from __future__ import annotations

import json
import math

from .errors import StructureError

_DURATION = {
    "lemma-ops": lambda size: 2 * (size - 1),
    "unit": lambda size: 1,
    "linear": lambda size: size,
}


def _expected_slices(m: int) -> list[tuple[int, int, int]]:
    out = [(0, 0, 2**m)]
    for r in range(1, m):
        size = 2 ** (m - r)
        for q in range(2 ** (r - 1)):
            out.append((r, q * 2 * size + size, size))
    return out


def _band_ready(m: int, size: int, duration: int) -> int:
    # additions of the initial Haar transform up to and including the level
    # that writes the detail band of this length
    done = 0
    length = 2**m
    while length > size:
        done += length
        length //= 2
    total = 2 * (2**m - 1)
    return math.ceil(duration * done / total) if total else duration


def schedule_problems(doc: dict | str | bytes) -> list[str]:
    """Return a list of violations; an empty list means the schedule is valid."""
    if not isinstance(doc, dict):
        doc = json.loads(doc)
    problems: list[str] = []
    m = int(doc["m"])
    cost = doc["cost_model"]
    policy = doc.get("policy", "extra-node")
    pipelined = bool(doc.get("pipelined", False))
    if cost not in _DURATION:
        return [f"unknown cost model {cost!r}"]
    dur = _DURATION[cost]
    tasks = doc["tasks"]

    found = sorted((t["stage"], t["offset"], t["size"]) for t in tasks)
    if found != sorted(_expected_slices(m)):
        problems.append("task census does not match the cascade")
        return problems

    by_slice = {(t["offset"], t["size"]): t for t in tasks if t["stage"] > 0}
    initial = next(t for t in tasks if t["stage"] == 0)
    if initial.get("kind") != "initial":
        problems.append("stage-0 task is not marked initial")
    want_node = m if policy == "extra-node" else m - 1
    if initial["node"] != want_node:
        problems.append(f"initial task on node {initial['node']}, expected {want_node}")

    for t in tasks:
        if t["end"] - t["start"] != dur(t["size"]):
            problems.append(f"task {t['id']}: duration {t['end'] - t['start']} != {dur(t['size'])}")
        if t["start"] < 0:
            problems.append(f"task {t['id']}: negative start")
        if t["stage"] > 0 and t["node"] != t["size"].bit_length() - 1:
            problems.append(f"task {t['id']}: size {t['size']} on node {t['node']}")

    # prerequisite: smallest enclosing aligned slice written by a stage task
    earliest: dict[int, int] = {}
    for t in tasks:
        if t["stage"] == 0:
            earliest[t["id"]] = 0
            continue
        parent = None
        outer = t["size"] * 2
        while outer < 2**m and parent is None:
            parent = by_slice.get((t["offset"] - t["offset"] % outer, outer))
            outer *= 2
        if parent is None:
            if pipelined:
                need = initial["start"] + _band_ready(m, t["size"], initial["end"] - initial["start"])
            else:
                need = initial["end"]
        else:
            need = parent["end"]
        if t["start"] < need:
            problems.append(f"task {t['id']} starts at {t['start']} before its input is ready at {need}")

    per_node: dict[int, list] = {}
    for t in tasks:
        per_node.setdefault(t["node"], []).append((t["start"], t["end"], t["id"]))
    for node, spans in per_node.items():
        spans.sort()
        for (s0, e0, a), (s1, e1, b) in zip(spans, spans[1:]):
            if s1 < e0:
                problems.append(f"node {node}: tasks {a} and {b} overlap")

    makespan = doc["makespan"]
    if makespan != max(t["end"] for t in tasks):
        problems.append("makespan is not the latest end time")

    # longest dependency path under the declared cost model
    finish: dict[tuple[int, int], int] = {}
    init_dur = dur(2**m)
    longest = init_dur
    for stage, offset, size in sorted(_expected_slices(m))[1:]:
        base = None
        outer = size * 2
        while outer < 2**m and base is None:
            base = finish.get((offset - offset % outer, outer))
            outer *= 2
        if base is None:
            base = _band_ready(m, size, init_dur) if pipelined else init_dur
        finish[(offset, size)] = base + dur(size)
        longest = max(longest, finish[(offset, size)])
    if makespan < longest:
        problems.append(f"makespan {makespan} shorter than critical path {longest}")

    busy: dict[int, int] = {}
    for t in tasks:
        busy[t["node"]] = busy.get(t["node"], 0) + t["end"] - t["start"]
    occ = {int(k): v for k, v in doc.get("occupancy", {}).items()}
    if set(occ) != set(busy):
        problems.append("occupancy nodes do not match task nodes")
    else:
        for node, b in busy.items():
            if abs(occ[node] - b / makespan) > 1e-12:
                problems.append(f"node {node}: occupancy {occ[node]} != {b}/{makespan}")
            if not 0 < occ[node] <= 1:
                problems.append(f"node {node}: occupancy {occ[node]} outside (0, 1]")
    return problems


def check_schedule(doc) -> None:
    problems = schedule_problems(doc)
    if problems:
        raise StructureError("invalid schedule: " + "; ".join(problems))
