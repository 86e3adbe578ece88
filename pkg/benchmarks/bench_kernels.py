"""Compiled vs numpy kernels on workloads taken from the test suites.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from srgkit import kernels
from srgkit import srgcore as sc


def workloads():
    rng = np.random.default_rng(0)
    boundary = sc.composition_region(0.5, 0.5, 256).boundary.vertices
    pts = rng.uniform(-0.5, 1.2, 2000) + 1j * rng.uniform(-0.8, 0.8, 2000)
    grid_pts = pts[:200]
    return {
        "polyline_distances": lambda: kernels.polyline_distances(boundary, pts[:500]),
        "winding_sums": lambda: kernels.winding_sums(boundary, pts[:500]),
        "product_grid_margin": lambda: kernels.product_grid_margin(grid_pts, 0.3, 0.7, 64, 64, 2, 8),
    }


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    backends = kernels.available_backends()
    work = workloads()
    print(f"{'kernel':<22}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    previous = kernels.backend_name()
    try:
        for name, fn in work.items():
            row = {}
            for b in backends:
                kernels.use_backend(b)
                fn()  # warm up
                row[b] = best_of(fn, args.repeat)
            speed = row["python"] / row["compiled"] if "compiled" in row else float("nan")
            print(f"{name:<22}" + "".join(f"{row[b] * 1e3:>10.2f}ms" for b in backends) + f"{speed:>9.1f}x")
    finally:
        kernels.use_backend(previous)


if __name__ == "__main__":
    main()
