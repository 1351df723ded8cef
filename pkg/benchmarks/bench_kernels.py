#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times the hot inner loops on representative workloads: backtracking
containment, the composition scan behind the layered search, the
permutation scan behind the unrestricted search, and the candidate-list
scan behind the av-class runs.  Run after an in-place build:

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

from __future__ import annotations

import argparse
import math
import random
import time

from superpatterns import _kernels_py

try:
    from superpatterns import _kernels
except ImportError:
    _kernels = None

from superpatterns.classes import ClassTag, class_tuples
from superpatterns.search import _ordered_pattern_profiles, _ordered_pattern_tuples


def _containment_workload():
    rng = random.Random(2024)
    cases = []
    for _ in range(2000):
        m = rng.randint(16, 24)
        k = rng.randint(6, 9)
        host = tuple(rng.sample(range(1, m + 1), m))
        pattern = tuple(rng.sample(range(1, k + 1), k))
        cases.append((pattern, host))

    def work(mod):
        hits = 0
        for pattern, host in cases:
            if mod.lex_min_embedding(pattern, host) is not None:
                hits += 1
        return hits

    return "containment DFS (2000 queries, hosts 16-24)", work


def _layered_scan_workload():
    # length 16 < a(7) = 17, so the scan must exhaust all 2^15 compositions,
    # which is exactly the nonexistence half of a search run
    patterns = _ordered_pattern_profiles(7)

    def work(mod):
        return mod.scan_layered(16, patterns, 0, 1 << 15)

    return "layered nonexistence scan (2^15 candidates, n=7 patterns)", work


def _all_perm_scan_workload():
    patterns = _ordered_pattern_tuples(ClassTag.AV321, 4)

    def work(mod):
        return mod.scan_all_perms(8, patterns, 0, math.factorial(8))

    return "unrestricted permutation scan (8!, av321 n=4 patterns)", work


def _candidate_list_workload():
    candidates = list(class_tuples(ClassTag.AV231, 10))
    patterns = _ordered_pattern_tuples(ClassTag.AV231, 5)

    def work(mod):
        return mod.scan_perm_list(candidates, patterns, 0, len(candidates))

    return "av231 candidate scan (16796 candidates, n=5 patterns)", work


def _time(work, mod, repeat):
    best = math.inf
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = work(mod)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    workloads = [
        _containment_workload(),
        _layered_scan_workload(),
        _all_perm_scan_workload(),
        _candidate_list_workload(),
    ]
    print(f"{'workload':58s} {'python':>10s} {'cython':>10s} {'speedup':>8s}")
    for name, work in workloads:
        py_time, py_result = _time(work, _kernels_py, args.repeat)
        if _kernels is None:
            print(f"{name:58s} {py_time * 1e3:9.1f}ms {'n/a':>10s} {'n/a':>8s}")
            continue
        cy_time, cy_result = _time(work, _kernels, args.repeat)
        if py_result != cy_result:
            raise AssertionError(f"backend mismatch on {name!r}")
        print(
            f"{name:58s} {py_time * 1e3:9.1f}ms {cy_time * 1e3:9.1f}ms "
            f"{py_time / cy_time:7.1f}x"
        )


if __name__ == "__main__":
    main()
