#!/usr/bin/env python3
"""Benchmark the two mod-p rank kernels against each other.

The rank computation over F_p is the hot path of every mod-p homology run.
It ships in two interchangeable implementations (see ``extbar.modp``): a
numba ``@njit`` elimination loop and a vectorized pure-numpy fallback.  This
script times both on seeded random matrices, checks that they agree, and
prints a comparison table.

Usage::

    python3 benchmarks/bench_modp.py [--p 2] [--sizes 64,128,256,512]
                                     [--repeats 5] [--seed 7] [--density 0.3]
"""

import argparse
import statistics
import sys
import time

import numpy as np

from extbar.modp import _rank_kernel_numpy, as_modp_array, jit_enabled

if jit_enabled():
    from extbar.modp import _rank_kernel_jit
else:  # pragma: no cover - informational fallback path
    _rank_kernel_jit = None


def random_matrix(rng: np.random.Generator, size: int, p: int, density: float) -> np.ndarray:
    """A seeded rectangular test matrix with the given fill ratio."""
    rows, cols = size, size + size // 4
    a = rng.integers(0, p, size=(rows, cols), dtype=np.int64)
    mask = rng.random((rows, cols)) < density
    return a * mask


def time_kernel(kernel, a: np.ndarray, p: int, repeats: int) -> tuple:
    """Median wall time in milliseconds and the computed rank.

    The kernels reduce their input in place, so each repetition gets a fresh
    copy; copying happens outside the timed region.
    """
    times = []
    rank = None
    for _ in range(repeats):
        work = a.copy()
        start = time.perf_counter()
        rank = int(kernel(work, p))
        times.append((time.perf_counter() - start) * 1000.0)
    return statistics.median(times), rank


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--p", type=int, default=2, help="prime modulus")
    parser.add_argument(
        "--sizes",
        default="64,128,256,512",
        help="comma-separated row counts (columns are 1.25x rows)",
    )
    parser.add_argument("--repeats", type=int, default=5)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--density", type=float, default=0.3)
    args = parser.parse_args()

    sizes = [int(s) for s in args.sizes.split(",") if s]
    rng = np.random.default_rng(args.seed)

    if _rank_kernel_jit is None:
        print("numba kernel unavailable (not installed or EXTBAR_NO_JIT=1);")
        print("timing the numpy fallback only.")
    else:
        # absorb one-time JIT compilation before timing
        warmup = as_modp_array([[1, 0], [0, 1]], args.p)
        _rank_kernel_jit(warmup, args.p)

    header = f"{'size':>10} {'rank':>6} {'numpy (ms)':>12}"
    if _rank_kernel_jit is not None:
        header += f" {'jit (ms)':>10} {'speedup':>8}"
    print(f"p = {args.p}, density = {args.density}, median of {args.repeats} runs")
    print(header)

    mismatched = False
    for size in sizes:
        a = random_matrix(rng, size, args.p, args.density)
        np_ms, np_rank = time_kernel(_rank_kernel_numpy, a, args.p, args.repeats)
        label = f"{size}x{a.shape[1]}"
        line = f"{label:>10} {np_rank:>6} {np_ms:>12.2f}"
        if _rank_kernel_jit is not None:
            jit_ms, jit_rank = time_kernel(_rank_kernel_jit, a, args.p, args.repeats)
            if jit_rank != np_rank:
                mismatched = True
                line += f"  RANK MISMATCH: jit={jit_rank} numpy={np_rank}"
            else:
                speedup = np_ms / jit_ms if jit_ms > 0 else float("inf")
                line += f" {jit_ms:>10.2f} {speedup:>7.1f}x"
        print(line)

    if mismatched:
        print("FAIL: kernels disagree")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
