#!/usr/bin/env python3
"""Benchmark the JIT search kernels against the pure-Python fallback.

Runs the three hot searches on seeded random triangle-free graphs under
RAINBOWPATH_BACKEND=pure and =numba and prints a timing table. The first
JIT call pays compilation cost, so a warmup round runs before timing.

Usage: python benchmarks/bench_search.py [--sizes 14 18 22] [--repeats 3]
"""

import argparse
import os
import time

from rainbowpath import (
    ColoredGraph,
    SearchBudget,
    dsatur_coloring,
    longest_induced_path,
    longest_induced_rainbow_path,
    max_colorful_induced_path_from,
    random_triangle_free,
)
from rainbowpath.backend import ENV_VAR


def workload(n: int, seed: int):
    g = random_triangle_free(n, 0.35, seed=seed)
    cg = ColoredGraph(g, dsatur_coloring(g))
    budget = SearchBudget(max_vertices=max(25, n), on_exceed="flag")

    def run():
        orders = (
            longest_induced_path(g, budget).path.order,
            longest_induced_rainbow_path(cg, budget).path.order,
            max_colorful_induced_path_from(cg, 0, budget).path.order,
        )
        return orders

    return run


def time_backend(backend: str, runs, repeats: int) -> tuple[float, list]:
    os.environ[ENV_VAR] = backend
    for run in runs:  # warmup (JIT compilation, caches)
        run()
    best = float("inf")
    results = []
    for _ in range(repeats):
        start = time.perf_counter()
        results = [run() for run in runs]
        best = min(best, time.perf_counter() - start)
    return best, results


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[14, 18, 22])
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--graphs-per-size", type=int, default=5)
    args = parser.parse_args()

    print(f"{'n':>4} {'pure (s)':>12} {'numba (s)':>12} {'speedup':>9}")
    for n in args.sizes:
        runs = [workload(n, seed) for seed in range(args.graphs_per_size)]
        pure_t, pure_r = time_backend("pure", runs, args.repeats)
        numba_t, numba_r = time_backend("numba", runs, args.repeats)
        assert pure_r == numba_r, "backends disagree!"
        print(f"{n:>4} {pure_t:>12.4f} {numba_t:>12.4f} {pure_t / numba_t:>8.1f}x")
    os.environ.pop(ENV_VAR, None)


if __name__ == "__main__":
    main()
