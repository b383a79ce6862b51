"""Numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

Both backends are timed in one process (the env flag only picks the default).
The first numba call per kernel is reported separately as compile time.
"""

import argparse
import time

import numpy as np

from catnerve import _kernels
from catnerve.fincat import cyclic_group, thin


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def bench_catalan(repeat):
    rows = []
    for n in (6, 8, 10, 11):
        if _kernels.numba is not None:
            t0 = time.perf_counter()
            _kernels.catalan_rows(2, use_numba=True)
            warm = time.perf_counter() - t0
            tn, a = best_of(lambda: _kernels.catalan_rows(n, use_numba=True), repeat)
        else:
            warm, tn, a = float("nan"), float("nan"), None
        tp, b = best_of(lambda: _kernels.catalan_rows(n, use_numba=False), repeat)
        same = a is None or np.array_equal(a, b)
        rows.append(("catalan_rows", n, len(b), warm, tn, tp, same))
    return rows


def bench_assoc(repeat):
    rows = []
    for label, C in (("Z/12", cyclic_group(12)), ("Z/40", cyclic_group(40)),
                     ("chain 30", thin(range(30), lambda a, b: int(a) <= int(b)))):
        tp, b = best_of(lambda: _kernels.associativity_violations(C.table, use_numba=False), repeat)
        if _kernels.numba is not None:
            t0 = time.perf_counter()
            _kernels.associativity_violations(C.table, use_numba=True)
            warm = time.perf_counter() - t0
            tn, a = best_of(lambda: _kernels.associativity_violations(C.table, use_numba=True), repeat)
            same = sorted(map(tuple, a)) == sorted(map(tuple, b))
        else:
            warm, tn, same = float("nan"), float("nan"), True
        rows.append(("associativity", label, C.n_mor, warm, tn, tp, same))
    return rows


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print("numba available: %s" % (_kernels.numba is not None))
    print("%-14s %-9s %8s %10s %10s %10s %7s %s" % ("kernel", "size", "items", "first(s)", "numba(s)",
                                                   "numpy(s)", "ratio", "agree"))
    for row in bench_catalan(args.repeat) + bench_assoc(args.repeat):
        name, size, items, warm, tn, tp, same = row
        print("%-14s %-9s %8d %10.4f %10.5f %10.5f %7.1f %s" % (name, size, items, warm, tn, tp, tp / tn, same))


if __name__ == "__main__":
    main()
