#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-numpy fallbacks.

Times the two hot kernels (all-pairs BFS and cyclic Jacobi sweeps) under
both backends and prints a comparison table. The compiled path is skipped
with a note if numba is unavailable.

Usage:
    python3 benchmarks/bench_kernels.py [--repeats 5]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

import eccbounds._kernels as kernels
from eccbounds.graphs import erdos_renyi

BFS_CASES = ((100, 0.05), (300, 0.02), (600, 0.01))
JACOBI_SIZES = (20, 50, 100, 150)


def best_of(fn, prepare, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        args = prepare()
        start = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - start)
    return best


def bench_bfs(repeats: int) -> list[tuple[str, float, float | None]]:
    rows = []
    for n, p in BFS_CASES:
        g = erdos_renyi(n, p, seed=n)
        prepare = lambda g=g: (g.indptr, g.indices, g.n)
        t_numpy = best_of(kernels.bfs_all_pairs_numpy, prepare, repeats)
        t_numba = None
        if kernels.bfs_all_pairs_numba is not None:
            kernels.bfs_all_pairs_numba(*prepare())  # warm the JIT
            t_numba = best_of(kernels.bfs_all_pairs_numba, prepare, repeats)
        rows.append((f"bfs n={n} p={p}", t_numpy, t_numba))
    return rows


def bench_jacobi(repeats: int) -> list[tuple[str, float, float | None]]:
    rng = np.random.default_rng(2024)
    rows = []
    for n in JACOBI_SIZES:
        base = rng.normal(size=(n, n))
        base = (base + base.T) / 2.0
        off_tol = 1e-12 * float(np.linalg.norm(base))

        def prepare(base=base, off_tol=off_tol):
            return base.copy(), np.eye(base.shape[0]), off_tol, 100

        t_numpy = best_of(kernels.jacobi_sweeps_numpy, prepare, repeats)
        t_numba = None
        if kernels.jacobi_sweeps_numba is not None:
            kernels.jacobi_sweeps_numba(*prepare())  # warm the JIT
            t_numba = best_of(kernels.jacobi_sweeps_numba, prepare, repeats)
        rows.append((f"jacobi n={n}", t_numpy, t_numba))
    return rows


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5, help="timing repeats, best kept")
    args = parser.parse_args()

    print(f"selected backend: {kernels.BACKEND}")
    if kernels.bfs_all_pairs_numba is None:
        print("numba unavailable: timing the numpy fallback only")
    header = f"{'case':<22}{'numpy (s)':>12}{'numba (s)':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, t_numpy, t_numba in bench_bfs(args.repeats) + bench_jacobi(args.repeats):
        if t_numba is None:
            print(f"{label:<22}{t_numpy:>12.6f}{'-':>12}{'-':>10}")
        else:
            print(f"{label:<22}{t_numpy:>12.6f}{t_numba:>12.6f}{t_numpy / t_numba:>9.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
