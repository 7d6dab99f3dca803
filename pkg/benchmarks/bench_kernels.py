"""Time the oracle kernels under both backends on the same finite modules.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Each backend enumerates every submodule and runs the definitional primality
scan; the numba timings exclude the first (compiling) call.  The two
backends must produce identical scan results, which is checked as well.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from pradical.fgmod import FinPresModule
from pradical.oracle import FiniteOracle
from pradical.rings import integers

CASES = {
    "Z/2^6": [2] * 6,
    "Z/4 + Z/8 + Z/8": [4, 8, 8],
    "Z/6 + Z/12 + Z/36": [6, 12, 36],
    "Z/11^4": [11] * 4,
}


def run(orders, backend: str):
    m = FinPresModule.direct_sum(integers(), orders)
    t0 = time.perf_counter()
    o = FiniteOracle(m, bound=10**6, backend=backend)
    res = o.scan()
    return time.perf_counter() - t0, o.count, res


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--cases", nargs="*", default=list(CASES), choices=list(CASES))
    args = ap.parse_args()
    run([2, 2], "numba")  # compile
    print(f"{'module':<20} {'subgroups':>9} {'numpy s':>9} {'numba s':>9} {'speedup':>8}")
    for name in args.cases:
        best = {}
        out = {}
        for backend in ("numpy", "numba"):
            times = []
            for _ in range(args.repeat):
                t, count, res = run(CASES[name], backend)
                times.append(t)
            best[backend] = min(times)
            out[backend] = res
        same = all(np.array_equal(a, b) for a, b in zip(out["numpy"], out["numba"]))
        if not same:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<20} {count:>9} {best['numpy']:>9.3f} {best['numba']:>9.3f} {best['numpy'] / best['numba']:>7.1f}x")


if __name__ == "__main__":
    main()
