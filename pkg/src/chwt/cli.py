"""Command-line interface.

Exit statuses: 0 success, 1 verification failure, 2 usage or capacity
error, 3 I/O error, 4 malformed signal file.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import _backend
from .bench import CSV_HEADER, run_bench
from .errors import CapacityError, SignalFormatError
from .executor import parallel_execute
from .instrumentation import OpTally
from .io import SignalFormat, format_text, parse_text, read_signal, write_signal
from .oracle import MAX_DENSE_LEVEL, Scaling, hadamard_dyadic_dense, mat_vec
from .orderings import reorder
from .schedule import (CostModel, InitialPolicy, build_task_graph, export_schedule,
                       format_occupancy_table, occupancy_report, schedule_to_dict,
                       simulate)
from .transforms import (chw_forward, fwht_natural, haar_forward, haar_walsh_forward,
                         level_of)
from .validate import schedule_problems

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO, EXIT_FORMAT = 0, 1, 2, 3, 4
MAX_BENCH_LEVEL = 24

ALGOS = ("chw", "fwht", "haar", "haar-walsh")
ORDERS = ("natural", "dyadic", "sequency")


def _format_for(path, explicit):
    if explicit:
        return SignalFormat(explicit)
    if path not in (None, "-") and Path(path).suffix in (".bin", ".f64"):
        return SignalFormat.BINARY
    return SignalFormat.TEXT


def _read_input(path, fmt):
    if path in (None, "-"):
        if fmt is SignalFormat.BINARY:
            raise SignalFormatError("binary input cannot be read from stdin")
        return parse_text(sys.stdin.read(), source="<stdin>")
    return read_signal(path, fmt)


def _write_output(x, path, fmt):
    if path in (None, "-"):
        if fmt is SignalFormat.BINARY:
            sys.stdout.buffer.write(np.ascontiguousarray(x, dtype="<f8").tobytes())
        else:
            sys.stdout.write(format_text(x))
        sys.stdout.flush()
        return
    write_signal(x, path, fmt)


def cmd_transform(args) -> int:
    mode = Scaling(args.mode)
    if args.algo == "haar" and args.order is not None:
        args.parser.error("--order applies only to Walsh-Hadamard outputs, not --algo haar")
    if args.workers > 1 and args.algo != "chw":
        args.parser.error("--workers applies only to --algo chw")
    x = _read_input(args.input, _format_for(args.input, args.in_format))
    m = level_of(x.shape[0])
    tally = OpTally()
    order = args.order or "dyadic"
    if args.algo == "chw":
        if args.workers > 1:
            y = parallel_execute(x, args.workers, mode, tally)
        else:
            y = chw_forward(x, mode, tally)
        y = reorder(y, m, "dyadic", order)
    elif args.algo == "fwht":
        y = reorder(fwht_natural(x, mode, tally), m, "natural", order)
    elif args.algo == "haar-walsh":
        y = reorder(haar_walsh_forward(x, mode, tally), m, "dyadic", order)
    else:
        y = haar_forward(x, mode, tally)
    _write_output(y, args.output, _format_for(args.output, args.out_format))
    if args.count_ops:
        print(tally, file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    m = args.m
    if m > MAX_DENSE_LEVEL:
        raise CapacityError(f"verify needs the dense oracle, limited to m <= {MAX_DENSE_LEVEL} (got m={m})")
    if m < 0:
        args.parser.error("--m must be non-negative")
    mode = Scaling(args.mode)
    oracle = hadamard_dyadic_dense(m, mode)
    integer = mode is Scaling.UNNORMALIZED
    worst = 0 if integer else 0.0
    print(f"m={m} mode={mode.value} trials={args.trials} seed={args.seed}")
    for trial in range(args.trials):
        rng = np.random.default_rng([args.seed, trial])
        if integer:
            x = rng.integers(-(2**20), 2**20, size=2**m, dtype=np.int64)
        else:
            x = rng.standard_normal(2**m)
        if args.workers > 1:
            fast = parallel_execute(x, args.workers, mode)
        else:
            fast = chw_forward(x, mode)
        err = np.abs(fast - mat_vec(oracle, x)).max()
        err = int(err) if integer else float(err)
        worst = max(worst, err)
        if (integer and err != 0) or (not integer and err > 1e-10):
            print(f"max_discrepancy={worst}")
            print(f"FAIL seed={args.seed} trial={trial} discrepancy={err}")
            return EXIT_FAIL
    print(f"max_discrepancy={worst if integer else f'{worst:.3e}'}")
    return EXIT_OK


def cmd_simulate(args) -> int:
    if args.m < 2:
        args.parser.error("simulate needs --m >= 2 (no cascade stages below that)")
    graph = build_task_graph(args.m, InitialPolicy(args.policy))
    sched = simulate(graph, CostModel(args.cost), args.pipelined)
    data = export_schedule(sched, args.format)
    if args.output in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(args.output).write_bytes(data)
    sys.stderr.write(format_occupancy_table(occupancy_report(sched), args.m))
    problems = schedule_problems(schedule_to_dict(sched))
    if problems:
        for p in problems:
            print(f"invalid schedule: {p}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_bench(args) -> int:
    if not 0 <= args.min_m <= args.max_m <= MAX_BENCH_LEVEL:
        args.parser.error(f"need 0 <= --min-m <= --max-m <= {MAX_BENCH_LEVEL}")
    if args.reps < 1 or any(w < 1 for w in args.workers):
        args.parser.error("--reps and --workers must be positive")
    print(f"backend={_backend.BACKEND}", file=sys.stderr)
    levels = list(range(args.min_m, args.max_m + 1))
    print(CSV_HEADER)
    for row in run_bench(levels, args.reps, args.workers, args.seed):
        print(row.csv(), flush=True)
    return EXIT_OK


def cmd_generate(args) -> int:
    if not 0 <= args.m <= MAX_BENCH_LEVEL:
        args.parser.error(f"--m must be in [0, {MAX_BENCH_LEVEL}]")
    rng = np.random.default_rng(args.seed)
    if args.kind == "int":
        x = rng.integers(-args.bound, args.bound + 1, size=2**args.m, dtype=np.int64)
    else:
        x = rng.standard_normal(2**args.m)
    _write_output(x, args.output, _format_for(args.output, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chwt", description="Cascading Haar wavelet Walsh-Hadamard transforms")
    sub = parser.add_subparsers(dest="command", required=True)
    modes = [s.value for s in Scaling]
    formats = [f.value for f in SignalFormat]

    p = sub.add_parser("transform", help="transform a signal file")
    p.add_argument("input", nargs="?", default="-", help="input signal file ('-' for stdin)")
    p.add_argument("-o", "--output", default="-")
    p.add_argument("--in-format", choices=formats)
    p.add_argument("--out-format", choices=formats)
    p.add_argument("--algo", choices=ALGOS, default="chw")
    p.add_argument("--mode", choices=modes, default=Scaling.UNNORMALIZED.value)
    p.add_argument("--order", choices=ORDERS, default=None,
                   help="output coefficient order (default: dyadic)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--count-ops", action="store_true",
                   help="print 'additions=A multiplications=M' to stderr")
    p.set_defaults(func=cmd_transform, parser=p)

    p = sub.add_parser("verify", help="check the cascade against the dense oracle")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=modes, default=Scaling.UNNORMALIZED.value)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify, parser=p)

    p = sub.add_parser("simulate", help="simulate the node-per-scale schedule")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cost", choices=[c.value for c in CostModel], default=CostModel.LEMMA_OPS.value)
    p.add_argument("--policy", choices=[q.value for q in InitialPolicy],
                   default=InitialPolicy.EXTRA_NODE.value)
    p.add_argument("--pipelined", action="store_true")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_simulate, parser=p)

    p = sub.add_parser("bench", help="time the transforms (CSV on stdout)")
    p.add_argument("--min-m", type=int, default=10)
    p.add_argument("--max-m", type=int, default=16)
    p.add_argument("--reps", type=int, default=5)
    p.add_argument("--workers", type=int, nargs="+", default=[1, 2, 4])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench, parser=p)

    p = sub.add_parser("generate", help="write a random test signal")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("int", "float"), default="int")
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--format", choices=formats)
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(func=cmd_generate, parser=p)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SignalFormatError as exc:
        print(f"format error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
