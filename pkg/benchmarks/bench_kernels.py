#!/usr/bin/env python3
"""Benchmark the numba-compiled kernels against the interpreted fallback.

The fallback is the same source executed by CPython (selected by setting
CLIQUECOVER_NO_NUMBA=1 before import), so this measures the JIT win, not an
algorithmic difference.  Workloads are sized so the interpreted path stays
tolerable; the real searches (n = 8) are only practical compiled.

Usage:
  python benchmarks/bench_kernels.py            # both modes, speedup table
  python benchmarks/bench_kernels.py --inner    # current mode only (internal)
"""

import json
import os
import random
import subprocess
import sys
import time


def _workloads():
    import numpy as np

    from cliquecover import Graph, canonical_form
    from cliquecover import _kernels
    from cliquecover.oracle import (SearchSpec, _slot_arrays,
                                    enumerate_connected, min_edges_bruteforce)

    rng = random.Random(0)

    def random_graph(n, p=0.5):
        return Graph.from_edges(n, [(u, v) for u in range(n)
                                    for v in range(u + 1, n)
                                    if rng.random() < p])

    graphs7 = [random_graph(7) for _ in range(30)]

    def bench_canonical():
        for g in graphs7:
            canonical_form(g)

    def bench_sweep():
        min_edges_bruteforce(SearchSpec(6, 3, 1))

    def bench_scan():
        _, eu, ev = _slot_arrays(6)
        bad = np.zeros(4, np.int64)
        _kernels.scan_cover_implication(6, 3, eu, ev, bad)

    def bench_enumerate():
        list(enumerate_connected(5))

    return [
        ("canonical_form x30 (n=7)", bench_canonical),
        ("oracle sweep (n=6, k=3)", bench_sweep),
        ("implication scan (n=6)", bench_scan),
        ("enumerate_connected(5)", bench_enumerate),
    ]


def run_inner():
    from cliquecover import using_numba

    results = {}
    for name, fn in _workloads():
        fn()  # warm up (JIT compile when applicable)
        t0 = time.perf_counter()
        fn()
        results[name] = time.perf_counter() - t0
    print(json.dumps({"numba": using_numba(), "times": results}))


def main():
    if "--inner" in sys.argv:
        run_inner()
        return

    def spawn(no_numba):
        env = dict(os.environ)
        if no_numba:
            env["CLIQUECOVER_NO_NUMBA"] = "1"
        else:
            env.pop("CLIQUECOVER_NO_NUMBA", None)
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--inner"],
            env=env, capture_output=True, text=True, check=True)
        return json.loads(out.stdout.strip().splitlines()[-1])

    print("timing compiled kernels...")
    compiled = spawn(no_numba=False)
    print("timing interpreted fallback (CLIQUECOVER_NO_NUMBA=1)...")
    fallback = spawn(no_numba=True)

    if not compiled["numba"]:
        print("warning: numba unavailable; both columns are interpreted")

    width = max(len(k) for k in compiled["times"])
    print(f"\n{'workload':<{width}}  {'compiled':>10}  {'fallback':>10}  {'speedup':>8}")
    for name, t_c in compiled["times"].items():
        t_f = fallback["times"][name]
        ratio = t_f / t_c if t_c > 0 else float("inf")
        print(f"{name:<{width}}  {t_c:>9.4f}s  {t_f:>9.4f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
