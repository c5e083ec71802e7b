"""Timing comparison of the all-forms enumeration kernels.

Runs the Gauss-sum and zero-count sweeps over every quadratic form of a
given genus through both backends (numba jit and blocked numpy), checks
that the outputs agree, and reports the best-of-N wall times.  The jit
path is warmed up once before timing so compilation is not measured.

Usage: python bench/benchmark_kernels.py [--g 6] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from spincalc import _kernels


def best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--g", type=int, default=6, help="genus (default 6)")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    g = args.g
    n_forms = 1 << (2 * g)
    print(f"genus {g}: {n_forms} forms x {n_forms} vectors per sweep")

    if not _kernels.USING_NUMBA:
        print(
            "numba backend unavailable (not importable or disabled via "
            f"{_kernels._ENV_FLAG}); timing numpy only"
        )

    par = _kernels.parity_table(2 * g)
    q0 = _kernels.pair_part_table(g)
    sweeps = [
        ("gauss sums", _kernels._gauss_sums_numpy, "_gauss_sums_jit"),
        ("zero counts", _kernels._zero_counts_numpy, "_zero_counts_jit"),
    ]
    for label, numpy_fn, jit_name in sweeps:
        t_numpy = best_time(lambda: numpy_fn(g), args.repeats)
        line = f"{label:<12} numpy {t_numpy:8.4f} s"
        if _kernels.USING_NUMBA:
            jit_fn = getattr(_kernels, jit_name)
            jit_fn(n_forms, par, q0)
            t_jit = best_time(lambda: jit_fn(n_forms, par, q0), args.repeats)
            equal = np.array_equal(numpy_fn(g), jit_fn(n_forms, par, q0))
            line += (
                f"   numba {t_jit:8.4f} s"
                f"   speedup {t_numpy / t_jit:5.2f}x"
                f"   results equal: {'yes' if equal else 'NO'}"
            )
        print(line)


if __name__ == "__main__":
    main()
