#!/usr/bin/env python3
"""Side-by-side timing of the compiled and pure-Python enumeration kernels.

Run:  python3 benchmarks/bench_kernels.py [--quick]
"""

import argparse
import sys
import time
from itertools import combinations

import numpy as np

from monocomp import _kernels_py

try:
    from monocomp import _fastkern
except ImportError:
    _fastkern = None


def time_call(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return time.perf_counter() - t0, out


def random_adj(n, p, seed):
    rng = np.random.Generator(np.random.Philox(seed))
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.uniform() < p:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true", help="skip the slowest cases")
    args = ap.parse_args()

    if _fastkern is None:
        print("compiled backend not built; nothing to compare", file=sys.stderr)
        return 1

    rows = []

    def add(name, py_args, fn_name):
        tp, outp = time_call(getattr(_kernels_py, fn_name), *py_args)
        tc, outc = time_call(getattr(_fastkern, fn_name), *py_args)
        if outp != outc:
            print(f"MISMATCH in {name}: {outp} vs {outc}", file=sys.stderr)
            sys.exit(1)
        rows.append((name, tp, tc, tp / tc if tc > 0 else float("inf")))

    k5 = sorted(combinations(range(5), 2))
    k6 = sorted(combinations(range(6), 2))
    k53 = sorted(combinations(range(5), 3))
    k63 = sorted(combinations(range(6), 3))
    add("mc K5 r=2", (5, k5, 2, 10**9), "mc_min_max")
    add("mc K5 r=3", (5, k5, 3, 10**9), "mc_min_max")
    add("mc K6 r=2", (6, k6, 2, 10**9), "mc_min_max")
    add("mc K5^3 r=3", (5, k53, 3, 10**9), "mc_min_max")
    add("mc K6^3 r=2", (6, k63, 2, 10**9), "mc_min_max")
    if not args.quick:
        # 2.4e6 leaves: a couple of seconds on the pure side
        add("mc K6 r=3", (6, k6, 3, 10**9), "mc_min_max")

    for d in (4, 8, 16):
        adj = random_adj(40, d / 40, d)
        add(f"cross-pair n=40 d={d}", (40, adj, 0), "best_cross_pair")

    print(f"{'case':<24}{'python':>10}{'compiled':>10}{'speedup':>9}")
    for name, tp, tc, sp in rows:
        print(f"{name:<24}{tp:>9.3f}s{tc:>9.3f}s{sp:>8.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
