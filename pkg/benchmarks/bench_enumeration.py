"""Benchmark the compiled enumeration kernel against the pure fallback.

Runs count_levels on a few stress tables and on the workloads behind
the shipped examples, and prints best-of-N timings per kernel.  Works
without the compiled extension (that column is skipped).

Usage: python benchmarks/bench_enumeration.py [--repeat N]
"""

import argparse
import time

from hldecomp import _enumeration_py
from hldecomp.decomposition import graded_decomposition
from hldecomp.hl_category import DrinfeldWord

try:
    from hldecomp import _enumeration
except ImportError:
    _enumeration = None

# (name, sizes, caps, pair_sets, max_level)
TABLES = [
    ("narrow deep",
     [2, 2, 2, 2, 2], [3, 3, 3, 3, 3], [[0, 2], [4, 6], [6, 8]], 18),
    ("wide shallow",
     [5, 5, 5], [4, 4, 4], [[0, 5], [5, 10]], 14),
    ("many pairs",
     [3, 3, 3, 3], [4, 4, 4, 4], [[0, 3], [3, 6], [6, 9], [9, 11], [2, 7]], 16),
    ("unconstrained",
     [4, 4, 4], [6, 6, 6], [], 20),
]


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def bench_tables(repeat):
    print("%-14s %12s %12s %8s" % ("table", "pure", "compiled", "speedup"))
    for name, sizes, caps, pair_sets, max_level in TABLES:
        t_pure, h_pure = best_of(
            lambda: _enumeration_py.count_levels(sizes, caps, pair_sets, max_level),
            repeat)
        if _enumeration is None:
            print("%-14s %10.3fms %12s %8s" % (name, t_pure * 1e3, "n/a", ""))
            continue
        t_c, h_c = best_of(
            lambda: _enumeration.count_levels(sizes, caps, pair_sets, max_level),
            repeat)
        assert list(h_c) == list(h_pure), "kernels disagree on %s" % name
        print("%-14s %10.3fms %10.3fms %7.1fx"
              % (name, t_pure * 1e3, t_c * 1e3, t_pure / t_c))


def bench_end_to_end(repeat):
    # full decomposition of the rank 8 example; kernel choice follows
    # the import, so this reflects whichever backend is active
    word = DrinfeldWord(8, [(2, 0), (3, 3), (4, 0), (5, 3), (7, -1)])
    t, dec = best_of(lambda: graded_decomposition(word), repeat)
    print("\nrank 8 example, full decomposition: %.3fs "
          "(%d nonzero gamma, active kernel: see HLDECOMP_PURE)"
          % (t, len(dec.entries)))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if _enumeration is None:
        print("compiled extension not importable; timing the pure kernel only\n")
    bench_tables(args.repeat)
    bench_end_to_end(max(1, args.repeat // 2))


if __name__ == "__main__":
    main()
