#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Times each kernel on representative workloads and prints a table with the
speedup of the compiled extension.  Run from the repository root:

    python benchmarks/bench_backends.py
"""

import timeit

import numpy as np

from circle_uncertainty._kernels import _pykernels

try:
    from circle_uncertainty._kernels import _core
except ImportError:
    _core = None

rng = np.random.default_rng(1)

COEFFS_SMALL = rng.standard_normal(33) + 1j * rng.standard_normal(33)
COEFFS_LARGE = rng.standard_normal(513) + 1j * rng.standard_normal(513)
GRID = rng.standard_normal(1024) + 1j * rng.standard_normal(1024)

CASES = [
    ("bessel_i(3, 2.5)        [series]", lambda m: m.bessel_i(3, 2.5), 20000),
    ("bessel_i(5, 120)        [miller]", lambda m: m.bessel_i(5, 120.0), 5000),
    ("synthesize 33 -> 256", lambda m: m.synthesize(COEFFS_SMALL, -16, 256), 500),
    ("synthesize 513 -> 4096", lambda m: m.synthesize(COEFFS_LARGE, -256, 4096), 5),
    ("analyze 256 -> 33", lambda m: m.analyze(GRID[:256], -16, 16), 500),
    ("analyze 1024 -> 513", lambda m: m.analyze(GRID, -256, 256), 10),
    ("coeff_moments (513)", lambda m: m.coeff_moments(COEFFS_LARGE, -256), 5000),
    ("grid_e_moments (1024)", lambda m: m.grid_e_moments(GRID), 5000),
]


def best_of(fn, number, repeats=5):
    return min(timeit.repeat(fn, number=number, repeat=repeats)) / number


def main():
    if _core is None:
        print("compiled extension not available; timing the fallback only\n")
    header = f"{'kernel':<34s} {'python':>12s} {'cython':>12s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))
    for name, call, number in CASES:
        t_py = best_of(lambda: call(_pykernels), number)
        if _core is not None:
            t_cy = best_of(lambda: call(_core), number)
            print(f"{name:<34s} {t_py * 1e6:>10.1f}us {t_cy * 1e6:>10.1f}us "
                  f"{t_py / t_cy:>8.1f}x")
        else:
            print(f"{name:<34s} {t_py * 1e6:>10.1f}us {'-':>12s} {'-':>9s}")


if __name__ == "__main__":
    main()
