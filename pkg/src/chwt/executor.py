"""Multi-worker execution of the cascade task graph.

Tasks run on a thread pool (the numba kernels release the GIL).  A task is
submitted only after its prerequisite has finished, and concurrently running
tasks always write disjoint slices, so the result is bit-identical to the
serial transform regardless of worker count or completion order.

A stage task together with all of its descendants is exactly the cascade of
its own slice, so tasks no larger than ``grain`` run that whole sub-cascade
inline instead of fanning out into many tiny pool submissions.
"""
from __future__ import annotations

from concurrent.futures import FIRST_COMPLETED, ThreadPoolExecutor, wait
from functools import lru_cache

import numpy as np

from ._backend import kernels
from .errors import ResourceError
from .instrumentation import OpTally
from .oracle import Scaling
from .schedule import build_task_graph
from .transforms import as_signal, chw_forward_inplace, level_of

DEFAULT_GRAIN = 1024


@lru_cache(maxsize=32)
def _plan(m: int):
    graph = build_task_graph(m)
    kids = graph.children()
    return graph.tasks, {tid: tuple(c) for tid, c in kids.items()}


def parallel_execute(x, workers: int = 1, mode: Scaling = Scaling.UNNORMALIZED,
                     tally: OpTally | None = None, grain: int = DEFAULT_GRAIN) -> np.ndarray:
    """Cascade WHT of ``x`` computed by a pool of ``workers`` threads."""
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    mode = Scaling(mode)
    buf = as_signal(x, mode)
    m = level_of(buf.shape[0])
    if m < 2:
        return chw_forward_inplace(buf, mode, tally)

    tasks, children = _plan(m)

    def run(tid: int) -> tuple[list[int], OpTally]:
        task = tasks[tid]
        view = buf[task.offset:task.offset + task.size]
        local = OpTally()
        if task.size <= grain:
            local.add(kernels.chw_forward(view))
            return [], local
        local.add(kernels.haar_forward(view))
        return list(children[tid]), local

    total = OpTally()
    try:
        pool = ThreadPoolExecutor(max_workers=workers, thread_name_prefix="chwt")
    except (RuntimeError, OSError) as exc:  # pragma: no cover
        raise ResourceError(f"cannot start {workers} workers: {exc}") from exc
    with pool:
        running = {pool.submit(run, 0)}
        while running:
            done, running = wait(running, return_when=FIRST_COMPLETED)
            for fut in done:
                ready, local = fut.result()
                total.merge(local)
                running.update(pool.submit(run, tid) for tid in ready)

    if mode is Scaling.ORTHONORMAL:
        buf *= 2.0 ** (-m / 2)
        total.add(multiplications=buf.shape[0])
    if tally is not None:
        tally.merge(total)
    return buf
