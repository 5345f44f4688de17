import copy
import csv
import io
import json
from collections import Counter

import pytest

from chwt.schedule import (CostModel, InitialPolicy, build_task_graph, export_schedule,
                           format_occupancy_table, level_ready_offset, load_schedule,
                           occupancy_report, schedule_to_dict, simulate)
from chwt.transforms import stage_blocks
from chwt.validate import check_schedule, schedule_problems
from chwt.errors import StructureError

COSTS = list(CostModel)
POLICIES = list(InitialPolicy)


def test_census_m4():
    g = build_task_graph(4)
    sizes = Counter(t.size for t in g.tasks)
    assert sizes == {16: 1, 8: 1, 4: 2, 2: 4}
    assert g.total_work(CostModel.LEMMA_OPS) == 30 + 14 + 12 + 8 == 64


def test_smallest_graph():
    g = build_task_graph(2)
    assert [(t.kind, t.offset, t.size, t.prereq) for t in g.tasks] == [
        ("initial", 0, 4, None), ("stage", 2, 2, 0)]


@pytest.mark.parametrize("m", [0, 1, -3])
def test_graph_needs_two_levels(m):
    with pytest.raises(ValueError):
        build_task_graph(m)


@pytest.mark.parametrize("m", range(2, 12))
def test_graph_structure(m):
    g = build_task_graph(m)
    for r in range(1, m):
        slices = [(t.offset, t.size) for t in g.tasks if t.stage == r]
        assert slices == [tuple(b) for b in stage_blocks(m, r)]
    by_id = {t.id: t for t in g.tasks}
    for t in g.tasks[1:]:
        parent = by_id[t.prereq]
        assert parent.id < t.id
        assert parent.offset <= t.offset and t.offset + t.size <= parent.offset + parent.size
    assert len(g.tasks) == 2 ** (m - 1)


def test_graph_dependencies_m4():
    g = build_task_graph(4)
    deps = {(t.offset, t.size): g.tasks[t.prereq].offset if t.prereq else None
            for t in g.tasks[1:]}
    # first-level blocks of each stage hang directly off the initial transform
    assert deps[(8, 8)] is None and deps[(4, 4)] is None and deps[(2, 2)] is None
    assert deps[(12, 4)] == 8
    assert deps[(6, 2)] == 4 and deps[(10, 2)] == 8 and deps[(14, 2)] == 12


def test_simulate_m2():
    s = simulate(build_task_graph(2), CostModel.LEMMA_OPS)
    assert [(e.start, e.end) for e in s.tasks] == [(0, 6), (6, 8)]
    assert s.makespan == 8


@pytest.mark.parametrize("m", range(2, 10))
@pytest.mark.parametrize("cost", COSTS)
def test_node_census(m, cost):
    s = simulate(build_task_graph(m), cost)
    per_node = Counter(e.node for e in s.tasks if e.kind == "stage")
    assert per_node == {n: 2 ** (m - 1 - n) for n in range(1, m)}
    if cost is CostModel.LEMMA_OPS:
        busy = occupancy_report(s).busy
        for n in range(1, m):
            assert busy[n] == 2**m - 2 ** (m - n)


@pytest.mark.parametrize("m", range(2, 12))
@pytest.mark.parametrize("pipelined", [False, True])
def test_unit_makespan_lower_bound(m, pipelined):
    s = simulate(build_task_graph(m), CostModel.UNIT, pipelined)
    assert s.makespan >= m


def test_occupancy_m4():
    rep = occupancy_report(simulate(build_task_graph(4), CostModel.LEMMA_OPS))
    assert {n: rep.busy[n] for n in (1, 2, 3)} == {1: 8, 2: 12, 3: 14}
    assert rep.busy[4] == 30
    assert all(0 < f <= 1 for f in rep.fraction.values())
    text = format_occupancy_table(rep, 4)
    assert "makespan=" in text and "extra" in text


def test_single_busy_node_is_fully_occupied():
    # m = 2 on the reuse policy puts both tasks on node 1 back to back
    s = simulate(build_task_graph(2, InitialPolicy.REUSE_LARGEST), CostModel.LEMMA_OPS)
    rep = occupancy_report(s)
    assert rep.fraction == {1: 1.0}
    assert rep.busy[1] == s.makespan == 8


def test_level_ready_offset_lemma_ops():
    # m = 4: levels cost 16, 8, 4, 2; bands of size 8, 4, 2 final after 16, 24, 28
    assert [level_ready_offset(4, s, 30) for s in (8, 4, 2)] == [16, 24, 28]
    assert level_ready_offset(4, 8, 1) == 1


@pytest.mark.parametrize("m", range(2, 11))
@pytest.mark.parametrize("cost", COSTS)
@pytest.mark.parametrize("policy", POLICIES)
def test_pipelining_never_hurts(m, cost, policy):
    g = build_task_graph(m, policy)
    assert simulate(g, cost, True).makespan <= simulate(g, cost, False).makespan


def test_pipelining_helps_m4():
    g = build_task_graph(4)
    assert simulate(g, CostModel.LEMMA_OPS, True).makespan < simulate(g, CostModel.LEMMA_OPS).makespan


def test_simulation_is_deterministic():
    g = build_task_graph(7, InitialPolicy.REUSE_LARGEST)
    a = export_schedule(simulate(g, CostModel.LINEAR, True))
    b = export_schedule(simulate(g, CostModel.LINEAR, True))
    assert a == b


@pytest.mark.parametrize("cost", COSTS)
@pytest.mark.parametrize("pipelined", [False, True])
def test_json_round_trip(cost, pipelined):
    s = simulate(build_task_graph(6, InitialPolicy.REUSE_LARGEST), cost, pipelined)
    data = export_schedule(s, "json")
    doc = json.loads(data)
    assert set(doc) >= {"m", "cost_model", "tasks", "makespan", "occupancy"}
    assert set(doc["tasks"][0]) == {"id", "kind", "stage", "offset", "size", "node", "start", "end"}
    assert all(isinstance(t["start"], int) for t in doc["tasks"])
    assert load_schedule(data) == s


def test_csv_export_m2():
    s = simulate(build_task_graph(2), CostModel.LEMMA_OPS)
    rows = list(csv.DictReader(io.StringIO(export_schedule(s, "csv").decode())))
    assert [(r["start"], r["end"]) for r in rows] == [("0", "6"), ("6", "8")]
    assert list(rows[0]) == ["id", "kind", "stage", "offset", "size", "node", "start", "end"]
    with pytest.raises(ValueError):
        export_schedule(s, "xml")


# -- independent validator ----------------------------------------------------------

def _doc(m=5, cost=CostModel.LEMMA_OPS, pipelined=False, policy=InitialPolicy.EXTRA_NODE):
    return schedule_to_dict(simulate(build_task_graph(m, policy), cost, pipelined))


def test_validator_accepts_simulated():
    check_schedule(_doc())
    check_schedule(json.dumps(_doc(pipelined=True)))


def test_validator_catches_overlap():
    doc = _doc()
    node1 = [t for t in doc["tasks"] if t["node"] == 1]
    node1[1]["start"] = node1[0]["start"]
    node1[1]["end"] = node1[1]["start"] + 2
    assert any("overlap" in p for p in schedule_problems(doc))


def test_validator_catches_early_start():
    doc = _doc()
    stage1 = next(t for t in doc["tasks"] if t["stage"] == 1)
    stage1["start"] -= 1
    stage1["end"] -= 1
    assert any("before its input" in p for p in schedule_problems(doc))


def test_validator_catches_wrong_makespan_and_census():
    doc = _doc()
    bad = copy.deepcopy(doc)
    bad["makespan"] += 1
    assert schedule_problems(bad)
    bad = copy.deepcopy(doc)
    bad["tasks"].pop()
    assert schedule_problems(bad) == ["task census does not match the cascade"]
    bad = copy.deepcopy(doc)
    bad["occupancy"]["1"] = 0.99
    assert schedule_problems(bad)
    with pytest.raises(StructureError):
        check_schedule(bad)


def test_validator_catches_pipelining_abuse():
    # a non-pipelined document cannot claim early starts
    doc = _doc(m=4, pipelined=True)
    doc["pipelined"] = False
    assert schedule_problems(doc)
