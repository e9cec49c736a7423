#!/usr/bin/env python3
"""Compare the compiled kernels against the pure-Python fallback.

Runs the closure / fixed-point-statistics kernel and the pair-orbit kernel
on a few representative groups with both backends and prints the timings.

    python benchmarks/bench_kernels.py
"""

from __future__ import annotations

import time

from tschirn import _speedups_py, families

try:
    from tschirn import _speedups
except ImportError:
    _speedups = None


def _best_of(fn, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    stats_jobs = [
        ("stats alt(7)", families.alternating_group(7), 10**6),
        ("stats alt(8)", families.alternating_group(8), 10**6),
        ("stats pgl2(11)", families.pgl2(11), 10**6),
    ]
    orbit_jobs = [
        ("pairs cyclic(400)", families.cyclic_group(400)),
        ("pairs sym(200)", families.symmetric_group(200)),
    ]

    print(f"{'workload':<22}{'pure (s)':>12}{'compiled (s)':>14}{'speedup':>10}")
    for name, group, limit in stats_jobs:
        raw, n = group.raw_generators(), group.degree
        t_pure, r_pure = _best_of(lambda: _speedups_py.fixed_point_stats(raw, n, limit))
        if _speedups is None:
            print(f"{name:<22}{t_pure:>12.4f}{'n/a':>14}{'':>10}")
            continue
        t_fast, r_fast = _best_of(lambda: _speedups.fixed_point_stats(raw, n, limit))
        assert r_pure == r_fast, f"{name}: backends disagree"
        print(f"{name:<22}{t_pure:>12.4f}{t_fast:>14.4f}{t_pure / t_fast:>9.1f}x")
    for name, group in orbit_jobs:
        raw, n = group.raw_generators(), group.degree
        t_pure, r_pure = _best_of(lambda: _speedups_py.pair_orbit_count(raw, n))
        if _speedups is None:
            print(f"{name:<22}{t_pure:>12.4f}{'n/a':>14}{'':>10}")
            continue
        t_fast, r_fast = _best_of(lambda: _speedups.pair_orbit_count(raw, n))
        assert r_pure == r_fast, f"{name}: backends disagree"
        print(f"{name:<22}{t_pure:>12.4f}{t_fast:>14.4f}{t_pure / t_fast:>9.1f}x")


if __name__ == "__main__":
    main()
