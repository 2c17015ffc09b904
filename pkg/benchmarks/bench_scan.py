"""Benchmark the compiled lattice-scan kernel against the pure-Python twin.

Runs the same workload through hopfact._scan_core (if built) and
hopfact._scan_py and reports per-spec timing plus the speedup.  The two
backends must return identical results; the benchmark asserts that too.

Usage:
    python3 benchmarks/bench_scan.py [--specs 200] [--samples 10] [--repeat 3]
"""

import argparse
import itertools
import time

import numpy as np

from hopfact import _scan_py
from hopfact.action import ActionKind

try:
    from hopfact import _scan_core
except ImportError:
    _scan_core = None


def workload(spec_count, samples, seed=515):
    rng = np.random.Generator(np.random.Philox(seed))
    pool = list(itertools.product(
        (2, 3, 4), (1, 2, 3, 4), ActionKind,
        range(-3, 4), range(-3, 4), (-3, -2, -1, 1, 2, 3),
        (4 + 0j, 0.5 + 0j, -2 + 0j, 1 + 2j)))
    picks = rng.choice(len(pool), size=min(spec_count, len(pool)), replace=False)
    jobs = []
    for pick in picks:
        n, m, kind, p, q, r, d = pool[pick]
        z = rng.standard_normal((samples, n)) + 1j * rng.standard_normal((samples, n))
        jobs.append((kind.eps, n, m, p, q, r, d, z, z.copy(), 1e-9))
    return jobs


def run(backend, jobs, repeat):
    best = float("inf")
    results = None
    for _ in range(repeat):
        start = time.perf_counter()
        results = [backend.scan_lattice(*job) for job in jobs]
        best = min(best, time.perf_counter() - start)
    return best, results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--specs", type=int, default=200)
    parser.add_argument("--samples", type=int, default=10)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    jobs = workload(args.specs, args.samples)
    py_time, py_results = run(_scan_py, jobs, args.repeat)
    print(f"python   backend: {py_time:.3f}s total, "
          f"{1e3 * py_time / len(jobs):.3f} ms/spec")

    if _scan_core is None:
        print("compiled backend: not built (pip install -e . rebuilds it)")
        return

    c_time, c_results = run(_scan_core, jobs, args.repeat)
    print(f"compiled backend: {c_time:.3f}s total, "
          f"{1e3 * c_time / len(jobs):.3f} ms/spec")
    print(f"speedup: {py_time / c_time:.1f}x")

    mismatches = sum(a != b for a, b in zip(py_results, c_results))
    assert mismatches == 0, f"{mismatches} result mismatches between backends"
    print(f"results identical on all {len(jobs)} specs")


if __name__ == "__main__":
    main()
