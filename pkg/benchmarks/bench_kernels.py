"""Benchmark the numba kernels against the pure-numpy fallback.

Times the two DP kernels (LCS length, edit distance) on random code-point
arrays at several sentence-like sizes and prints the per-call latency and
speedup. The plain-Python reference is included at the small sizes for
scale.

Usage:
    python benchmarks/bench_kernels.py
"""

import random
import time

import numpy as np

from orthosyl.metrics import kernels


def random_codes(rng, length):
    return np.array([rng.randint(0x0905, 0x0939) for _ in range(length)], np.int32)


def time_calls(fn, pairs, repeat=3):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for a, b in pairs:
            fn(a, b)
        best = min(best, time.perf_counter() - start)
    return best / len(pairs)


def main():
    rng = random.Random(12345)
    print(f"selected backend: {kernels.BACKEND}")
    print(f"{'kernel':13s} {'size':>6s} {'numba':>12s} {'numpy':>12s} "
          f"{'python':>12s} {'numba speedup':>14s}")
    for size in (10, 40, 160, 640):
        pairs = [(random_codes(rng, size), random_codes(rng, size)) for _ in range(30)]
        for name, numba_fn, numpy_fn, py_fn in (
            ("lcs_length", kernels._lcs_len_numba, kernels.lcs_len_numpy,
             kernels._lcs_len_py),
            ("edit_distance", kernels._edit_distance_numba,
             kernels.edit_distance_numpy, kernels._edit_distance_py),
        ):
            if numba_fn is not None:
                numba_fn(*pairs[0])  # warm the JIT outside the timing
                t_numba = time_calls(numba_fn, pairs)
            else:
                t_numba = float("nan")
            t_numpy = time_calls(numpy_fn, pairs)
            t_py = time_calls(py_fn, pairs) if size <= 160 else float("nan")
            speedup = t_numpy / t_numba if t_numba == t_numba else float("nan")
            print(
                f"{name:13s} {size:6d} {t_numba * 1e6:10.1f}us "
                f"{t_numpy * 1e6:10.1f}us {t_py * 1e6:10.1f}us {speedup:13.1f}x"
            )


if __name__ == "__main__":
    main()
