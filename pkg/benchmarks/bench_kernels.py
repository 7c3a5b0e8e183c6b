#!/usr/bin/env python3
"""Benchmark the compiled search kernel against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--full] [--repeat N]

Both backends run the same workloads through the public engine; results
are checked for equality before timings are reported, so a speedup
never comes from diverging output.
"""

from __future__ import annotations

import argparse
import time

from bolforge import SearchSpec, enumerate_loops
from bolforge.search import get_kernel

WORKLOADS = [
    ("enumerate n=5 (all loops)", SearchSpec(order=5)),
    ("enumerate n=6 (all loops)", SearchSpec(order=6)),
    ("enumerate n=7 left Bol", SearchSpec(order=7, constraint="left-bol")),
    ("enumerate n=8 left Bol", SearchSpec(order=8, constraint="left-bol")),
]

FULL_WORKLOADS = [
    ("enumerate n=8 right Bol", SearchSpec(order=8, constraint="right-bol")),
    ("enumerate n=9 left Bol", SearchSpec(order=9, constraint="left-bol")),
    ("enumerate n=8 associative", SearchSpec(order=8, constraint="associative")),
]


def time_workload(spec: SearchSpec, backend: str, repeat: int) -> tuple[float, tuple]:
    best = float("inf")
    tables = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = enumerate_loops(SearchSpec(**{**spec.__dict__, "backend": backend}))
        best = min(best, time.perf_counter() - t0)
        tables = tuple(t.rows for t in result.representatives)
    return best, tables


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include the heavier workloads")
    parser.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = parser.parse_args()

    try:
        get_kernel("cython")
    except ImportError:
        print("compiled kernel not built; nothing to compare (pure Python only)")
        return 1

    workloads = WORKLOADS + (FULL_WORKLOADS if args.full else [])
    header = f"{'workload':<30} {'cython':>10} {'python':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for label, spec in workloads:
        t_cy, out_cy = time_workload(spec, "cython", args.repeat)
        t_py, out_py = time_workload(spec, "python", max(1, args.repeat // 3))
        assert out_cy == out_py, f"backend outputs diverge on {label}"
        print(f"{label:<30} {t_cy * 1e3:>8.1f}ms {t_py * 1e3:>8.1f}ms {t_py / t_cy:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
