"""Compare the compiled and pure-Python component counters.

    python3 benchmarks/bench_kernel.py [--d 30] [--limit 300] [--repeat 3]
"""

import argparse
import itertools
import time

import numpy as np

from staircase import kernel
from staircase.census import enumerate_strongly_stable
from staircase.families import SPECIAL_39
from staircase.tangent import box_degrees, candidate_degrees, graded_counts


def workload(d, limit):
    ideals = list(itertools.islice(enumerate_strongly_stable(d), limit))
    return [(I, candidate_degrees(I)) for I in ideals] + [(SPECIAL_39, box_degrees(SPECIAL_39))]


def timed(jobs, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = [graded_counts(I, a, backend=backend)[0] for I, a in jobs]
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--d", type=int, default=30)
    ap.add_argument("--limit", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    jobs = workload(args.d, args.limit)
    degrees = sum(len(a) for _, a in jobs)
    print(f"{len(jobs)} ideals, {degrees} degrees, default backend: {kernel.BACKEND}")
    t_py, ref = timed(jobs, kernel.python_graded_counts, args.repeat)
    print(f"python  {t_py:8.3f}s")
    if kernel.BACKEND == "cython":
        t_cy, out = timed(jobs, kernel.graded_counts, args.repeat)
        assert all(np.array_equal(a, b) for a, b in zip(ref, out)), "backends disagree"
        print(f"cython  {t_cy:8.3f}s   speedup {t_py / t_cy:.1f}x")


if __name__ == "__main__":
    main()
