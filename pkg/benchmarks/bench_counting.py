#!/usr/bin/env python3
"""Benchmark the crossing-counter backends against each other.

Runs the pruned counter with every available kernel backend (numba and
numpy), optionally the pure-Python naive oracle, over layered bipartite
drawings of increasing size, and prints one table row per (k, backend).

    python3 benchmarks/bench_counting.py --k-values 3,4,5,6 --repeat 3 --naive
"""

import argparse
import time

from gridcross import _kernels
from gridcross.constructions import layered_complete_bipartite
from gridcross.counting import count_crossings_naive, count_crossings_pruned


def best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return result, best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--k-values", default="3,4,5,6")
    parser.add_argument("--dim", type=int, default=3)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--naive", action="store_true", help="also time the pure-Python oracle")
    args = parser.parse_args()

    backends = _kernels.available_backends()
    print(f"available kernel backends: {', '.join(backends)} "
          f"(default: {_kernels.DEFAULT_BACKEND})")
    header = f"{'k':>3} {'edges':>7} {'pairs':>10} {'backend':>8} {'best_s':>10} {'crossings':>10}"
    print(header)
    print("-" * len(header))
    for k in (int(x) for x in args.k_values.split(",")):
        g = layered_complete_bipartite(k, args.dim)
        m = len(g.edges)
        pairs = m * (m - 1) // 2
        reference = None
        for backend in backends:
            # warm up once so numba's compile time is not measured
            count_crossings_pruned(g, backend=backend, check_proper=False)
            rep, secs = best_of(
                lambda b=backend: count_crossings_pruned(g, backend=b, check_proper=False),
                args.repeat)
            print(f"{k:>3} {m:>7} {pairs:>10} {backend:>8} {secs:>10.4f} {rep.total:>10}")
            if reference is None:
                reference = rep
            assert rep.total == reference.total and rep.per_edge == reference.per_edge
        if args.naive:
            rep, secs = best_of(
                lambda: count_crossings_naive(g, check_proper=False), args.repeat)
            print(f"{k:>3} {m:>7} {pairs:>10} {'naive':>8} {secs:>10.4f} {rep.total:>10}")
            assert rep.total == reference.total


if __name__ == "__main__":
    main()
