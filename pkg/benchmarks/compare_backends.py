"""Compare the numba kernels with the pure-numpy fallback.

Both kernel sets are imported directly, so the CHWT_DISABLE_NUMBA flag does
not matter here.  Prints CSV: backend,algo,n,reps,ns_per_element,speedup
(speedup is numpy time / numba time on the same row pair).

    python benchmarks/compare_backends.py --min-m 8 --max-m 20 --reps 7
"""
import argparse

import numpy as np

from chwt import _kernels_numba, _kernels_numpy
from chwt.bench import time_call

KERNELS = ("haar_forward", "chw_forward", "fwht_natural")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-m", type=int, default=8)
    ap.add_argument("--max-m", type=int, default=20)
    ap.add_argument("--reps", type=int, default=7)
    ap.add_argument("--dtype", choices=("int64", "float64"), default="int64")
    args = ap.parse_args(argv)

    rng = np.random.default_rng(0)
    print("backend,algo,n,reps,ns_per_element,speedup")
    for m in range(args.min_m, args.max_m + 1):
        n = 2**m
        x = rng.integers(-(2**20), 2**20, n).astype(args.dtype)
        for name in KERNELS:
            per = {}
            for mod in (_kernels_numpy, _kernels_numba):
                kernel = getattr(mod, name)
                buf = x.copy()

                def call(kernel=kernel, buf=buf):
                    # refresh the input so repeated transforms don't grow the values
                    np.copyto(buf, x)
                    kernel(buf)

                per[mod.NAME] = time_call(call, args.reps)
            for backend, sec in per.items():
                speedup = per["numpy"] / sec
                print(f"{backend},{name},{n},{args.reps},{sec * 1e9 / n:.3f},{speedup:.2f}")


if __name__ == "__main__":
    main()
