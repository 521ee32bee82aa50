"""Compare the numba and pure-numpy backends on the spectral-kernel tables
and the closed-form scalar curvature.

Run from the repository root:

    python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

import gaussgeom
from gaussgeom import backend_name, kernels, scalar_curvature

SIZES = (10, 50, 100, 200)
REPEATS = 5


def time_backend(monkey_env, label):
    import os

    os.environ["GAUSSGEOM_BACKEND"] = monkey_env
    print(f"\nbackend = {label} (resolved: {backend_name()})")
    print(f"{'N':>6} {'kernel tables [ms]':>20} {'scalar curvature [ms]':>22}")
    rng = np.random.default_rng(0)
    for n in SIZES:
        nu = np.sort(rng.uniform(0.6, 10.0, size=n))
        # warm-up (includes JIT compilation on the numba path)
        kernels(nu)
        scalar_curvature(nu)
        t_k = min(_timed(kernels, nu) for _ in range(REPEATS))
        t_s = min(_timed(scalar_curvature, nu) for _ in range(REPEATS))
        print(f"{n:>6} {1e3 * t_k:>20.3f} {1e3 * t_s:>22.3f}")


def _timed(fn, *args):
    t0 = time.perf_counter()
    fn(*args)
    return time.perf_counter() - t0


def main():
    print(f"gaussgeom {gaussgeom.__version__}")
    time_backend("numpy", "numpy")
    time_backend("numba", "numba")


if __name__ == "__main__":
    main()
