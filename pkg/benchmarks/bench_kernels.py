#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure NumPy/SciPy fallback.

Usage: python benchmarks/bench_kernels.py [--nx 201] [--nt 2000] [--repeats 5]

Times the two hot loops (regularized trajectory, coupled trajectory) on
the desk-scale preset for both backends and reports the speedup, after
checking the trajectories agree to rounding.
"""

import argparse
import time

import numpy as np

from qlt_pme import SpatialGrid, TimeGrid
from qlt_pme import _kernels_py
from qlt_pme.presets import bump_on_tail_kinetic, problem_preset

try:
    from qlt_pme import _kernels_cy
except ImportError:
    _kernels_cy = None


def best_of(repeats, fn, *args):
    best, result = np.inf, None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nx", type=int, default=201)
    ap.add_argument("--nt", type=int, default=2000)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    grid = SpatialGrid(1.0, 2.0, args.nx)
    tgrid = TimeGrid(0.5, args.nt)
    prob = problem_preset("bump_on_tail", grid, tgrid)
    kin = bump_on_tail_kinetic(grid)

    sn_args = (grid.nodes, grid.h, prob.phi0.values, prob.g0.values, 1.0 / 64, tgrid.dt, tgrid.nt)
    cp_args = (grid.nodes, grid.h, kin.f0.values, kin.w0.values, tgrid.dt, tgrid.nt, 1e-14)

    print(f"grid {args.nx} x {args.nt} steps, best of {args.repeats}")
    header = f"{'kernel':<22}{'python':>12}{'cython':>12}{'speedup':>10}"
    print(header)
    print("-" * len(header))

    for name, fn_name, call_args in (
        ("regularized solve", "sn_trajectory", sn_args),
        ("coupled solve", "coupled_trajectory", cp_args),
    ):
        t_py, res_py = best_of(args.repeats, getattr(_kernels_py, fn_name), *call_args)
        if _kernels_cy is None:
            print(f"{name:<22}{t_py * 1e3:>10.1f}ms{'n/a':>12}{'n/a':>10}")
            continue
        t_cy, res_cy = best_of(args.repeats, getattr(_kernels_cy, fn_name), *call_args)
        gap = max(np.abs(a - b).max() for a, b in zip(res_py[:-1], res_cy[:-1]))
        assert gap <= 1e-12, f"backends disagree by {gap:g}"
        print(f"{name:<22}{t_py * 1e3:>10.1f}ms{t_cy * 1e3:>10.1f}ms{t_py / t_cy:>9.1f}x")

    if _kernels_cy is None:
        print("\ncompiled extension not built; install with `pip install -e .` to compare")


if __name__ == "__main__":
    main()
