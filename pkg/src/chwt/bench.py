"""Wall-clock timing helpers shared by ``chwt bench`` and benchmarks/."""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .executor import parallel_execute
from .instrumentation import OpTally
from .transforms import chw_forward, fwht_natural


@dataclass
class BenchRow:
    algo: str
    n: int
    reps: int
    ns_per_element: float
    additions: int

    def csv(self) -> str:
        return f"{self.algo},{self.n},{self.reps},{self.ns_per_element:.3f},{self.additions}"


CSV_HEADER = "algo,n,reps,ns_per_element,additions"


def time_call(fn: Callable[[], object], reps: int) -> float:
    """Median seconds per call after one warm-up call."""
    fn()
    samples = []
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        fn()
        samples.append(time.perf_counter_ns() - t0)
    return float(np.median(samples)) * 1e-9


def count_additions(fn: Callable[[OpTally], object]) -> int:
    tally = OpTally()
    fn(tally)
    return tally.additions


def algorithms(workers: list[int]) -> list[tuple[str, Callable]]:
    algos: list[tuple[str, Callable]] = [
        ("chw", lambda x, t=None: chw_forward(x, tally=t)),
        ("fwht-natural", lambda x, t=None: fwht_natural(x, tally=t)),
    ]
    for w in workers:
        algos.append((f"parallel-w{w}",
                      lambda x, t=None, w=w: parallel_execute(x, w, tally=t)))
    return algos


def run_bench(levels: list[int], reps: int, workers: list[int], seed: int = 0) -> list[BenchRow]:
    rng = np.random.default_rng(seed)
    rows = []
    for m in levels:
        n = 2**m
        x = rng.integers(-(2**20), 2**20, size=n, dtype=np.int64)
        for name, fn in algorithms(workers):
            seconds = time_call(lambda: fn(x), reps)
            adds = count_additions(lambda t: fn(x, t))
            rows.append(BenchRow(name, n, reps, seconds * 1e9 / n, adds))
    return rows
