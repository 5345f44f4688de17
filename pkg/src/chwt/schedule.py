"""Task graph and node-per-scale schedule simulation for the cascade.

The cascade for a length-2**m signal is one full Haar transform followed by
2**(r-1) Haar transforms of size 2**(m-r) at each stage r = 1..m-1.  In the
parallel layout every scale s = 1..m-1 has its own node that only ever runs
size-2**s transforms; the initial full transform runs either on an extra node
(id m) or on the largest scale node (id m-1).

Time is measured in abstract integer units given by a :class:`CostModel`.
"""
from __future__ import annotations

import csv
import enum
import heapq
import io
import json
from dataclasses import asdict, dataclass, field

from .transforms import stage_blocks

INITIAL = "initial"
STAGE = "stage"


class InitialPolicy(str, enum.Enum):
    EXTRA_NODE = "extra-node"
    REUSE_LARGEST = "reuse-largest"


class CostModel(str, enum.Enum):
    LEMMA_OPS = "lemma-ops"   # 2(2**s - 1), the Haar addition count
    UNIT = "unit"             # 1 per task
    LINEAR = "linear"         # 2**s

    def duration(self, size: int) -> int:
        if self is CostModel.LEMMA_OPS:
            return 2 * (size - 1)
        if self is CostModel.UNIT:
            return 1
        return size


@dataclass(frozen=True)
class TaskSpec:
    id: int
    kind: str
    stage: int          # 0 for the initial task
    offset: int
    size: int
    prereq: int | None  # single prerequisite, None for the initial task

    @property
    def scale(self) -> int:
        return self.size.bit_length() - 1


@dataclass
class TaskGraph:
    m: int
    policy: InitialPolicy
    tasks: list[TaskSpec]

    @property
    def deps(self) -> dict[int, int]:
        return {t.id: t.prereq for t in self.tasks if t.prereq is not None}

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {t.id: [] for t in self.tasks}
        for t in self.tasks:
            if t.prereq is not None:
                kids[t.prereq].append(t.id)
        return kids

    def node_of(self, task: TaskSpec) -> int:
        if task.kind == INITIAL:
            return self.m if self.policy is InitialPolicy.EXTRA_NODE else self.m - 1
        return task.scale

    @property
    def nodes(self) -> list[int]:
        extra = [self.m] if self.policy is InitialPolicy.EXTRA_NODE else []
        return list(range(1, self.m)) + extra

    def total_work(self, cost: CostModel) -> int:
        return sum(CostModel(cost).duration(t.size) for t in self.tasks)


def build_task_graph(m: int, policy: InitialPolicy | str = InitialPolicy.EXTRA_NODE) -> TaskGraph:
    """Build the cascade's task graph.

    A stage task depends on the latest earlier task whose slice contains its
    own, or on the initial transform when no stage task does.  Slices are
    aligned dyadic intervals, so overlap implies containment and the rule
    yields exactly one prerequisite per task.
    """
    if m < 2:
        raise ValueError(f"a cascade needs m >= 2, got m={m}")
    policy = InitialPolicy(policy)
    tasks = [TaskSpec(0, INITIAL, 0, 0, 2**m, None)]
    writer: dict[tuple[int, int], int] = {}
    for r in range(1, m):
        for blk in stage_blocks(m, r):
            prereq = 0
            outer = 2 * blk.size
            while outer < 2**m:
                key = (blk.offset - blk.offset % outer, outer)
                if key in writer:
                    prereq = writer[key]
                    break
                outer *= 2
            task = TaskSpec(len(tasks), STAGE, r, blk.offset, blk.size, prereq)
            tasks.append(task)
            writer[(blk.offset, blk.size)] = task.id
    return TaskGraph(m, policy, tasks)


def level_ready_offset(m: int, size: int, initial_duration: int) -> int:
    """Time after the initial task starts at which a detail band is final.

    The band of length ``size`` is written by Haar level j = m - log2(size),
    after 2**(m+1) - 2**(m-j+1) of the 2**(m+1) - 2 additions.  Other cost
    models scale that fraction of the initial duration, rounded up.
    """
    j = m - (size.bit_length() - 1)
    done = 2 ** (m + 1) - 2 ** (m - j + 1)
    total = 2 ** (m + 1) - 2
    return -(-initial_duration * done // total)


@dataclass(frozen=True)
class ScheduledTask:
    id: int
    kind: str
    stage: int
    offset: int
    size: int
    node: int
    start: int
    end: int


@dataclass
class Schedule:
    m: int
    cost_model: CostModel
    policy: InitialPolicy
    pipelined: bool
    tasks: list[ScheduledTask]
    makespan: int
    occupancy: dict[int, float] = field(default_factory=dict)


def simulate(graph: TaskGraph, cost: CostModel | str = CostModel.LEMMA_OPS,
             pipelined_initial: bool = False) -> Schedule:
    """Deterministic list-scheduling simulation.

    Whenever a node is idle it starts its ready task with the lowest
    (stage, offset).  With ``pipelined_initial`` a task fed directly by the
    initial transform becomes ready as soon as the Haar level producing its
    slice has finished instead of when the whole transform ends.
    """
    cost = CostModel(cost)
    m = graph.m
    tasks = graph.tasks
    kids = graph.children()
    node_of = {t.id: graph.node_of(t) for t in tasks}
    free_at = {n: 0 for n in graph.nodes}
    ready: dict[int, list] = {n: [] for n in graph.nodes}
    pending = [(0, 0, 0, 0)]  # (ready time, stage, offset, id)
    placed: dict[int, ScheduledTask] = {}
    t = 0
    while len(placed) < len(tasks):
        while pending and pending[0][0] <= t:
            _, stage, offset, tid = heapq.heappop(pending)
            heapq.heappush(ready[node_of[tid]], (stage, offset, tid))
        for node in graph.nodes:
            if free_at[node] > t or not ready[node]:
                continue
            _, _, tid = heapq.heappop(ready[node])
            task = tasks[tid]
            end = t + cost.duration(task.size)
            placed[tid] = ScheduledTask(task.id, task.kind, task.stage, task.offset,
                                        task.size, node, t, end)
            free_at[node] = end
            for kid in kids[tid]:
                child = tasks[kid]
                at = end
                if pipelined_initial and task.kind == INITIAL:
                    at = t + level_ready_offset(m, child.size, end - t)
                heapq.heappush(pending, (at, child.stage, child.offset, kid))
        upcoming = [f for f in free_at.values() if f > t]
        if pending:
            upcoming.append(pending[0][0])
        if not upcoming:
            break
        t = min(upcoming)
    entries = [placed[task.id] for task in tasks]
    makespan = max(e.end for e in entries)
    sched = Schedule(m, cost, graph.policy, bool(pipelined_initial), entries, makespan)
    sched.occupancy = occupancy_report(sched).fraction
    return sched


@dataclass
class OccupancyReport:
    makespan: int
    busy: dict[int, int]
    fraction: dict[int, float]


def occupancy_report(s: Schedule) -> OccupancyReport:
    busy: dict[int, int] = {}
    for e in s.tasks:
        busy[e.node] = busy.get(e.node, 0) + (e.end - e.start)
    busy = dict(sorted(busy.items()))
    fraction = {n: b / s.makespan for n, b in busy.items()}
    return OccupancyReport(s.makespan, busy, fraction)


def format_occupancy_table(report: OccupancyReport, m: int | None = None) -> str:
    lines = [f"makespan={report.makespan}", "node  transform  busy  occupancy"]
    for node, busy in report.busy.items():
        label = f"2^{node}"
        if m is not None and node == m:
            label = f"2^{m} (extra)"
        lines.append(f"{node:>4}  {label:>9}  {busy:>4}  {report.fraction[node]:.4f}")
    return "\n".join(lines) + "\n"


# -- export / import ---------------------------------------------------------

FIELDS = ("id", "kind", "stage", "offset", "size", "node", "start", "end")


def schedule_to_dict(s: Schedule) -> dict:
    return {
        "m": s.m,
        "cost_model": s.cost_model.value,
        "policy": s.policy.value,
        "pipelined": s.pipelined,
        "tasks": [asdict(e) for e in s.tasks],
        "makespan": s.makespan,
        "occupancy": {str(n): f for n, f in s.occupancy.items()},
    }


def schedule_from_dict(doc: dict) -> Schedule:
    return Schedule(
        m=int(doc["m"]),
        cost_model=CostModel(doc["cost_model"]),
        policy=InitialPolicy(doc.get("policy", InitialPolicy.EXTRA_NODE.value)),
        pipelined=bool(doc.get("pipelined", False)),
        tasks=[ScheduledTask(**{k: e[k] for k in FIELDS}) for e in doc["tasks"]],
        makespan=int(doc["makespan"]),
        occupancy={int(n): float(f) for n, f in doc["occupancy"].items()},
    )


def export_schedule(s: Schedule, fmt: str = "json") -> bytes:
    fmt = fmt.lower()
    if fmt == "json":
        return (json.dumps(schedule_to_dict(s), indent=2) + "\n").encode()
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for e in s.tasks:
            writer.writerow([getattr(e, f) for f in FIELDS])
        return buf.getvalue().encode()
    raise ValueError(f"unknown schedule format {fmt!r}")


def load_schedule(data: bytes | str) -> Schedule:
    """Re-import a schedule exported as JSON."""
    return schedule_from_dict(json.loads(data))
