#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py [--repeat N]

Each case reports the best wall time over N repeats (default 3), with one
untimed warmup call so jit compilation never lands in the numbers.  When
numba is unavailable, or GRAPHCODES_NO_NUMBA=1 is set, the compiled column
is skipped and only the fallback is measured.
"""

import argparse
import time

import numpy as np

from graphcodes import build_k4_unique, build_k8_odd, kernels, trivial


def _best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _full_scan(block_fn, ec, n, t, prop):
    for v0 in range(n - t + 1):
        hit = block_fn(ec, n, t, v0, prop)
        if hit.size:
            return hit
    return None


def _sampled_copies(n, t, count, seed):
    rng = np.random.default_rng(seed)
    part = np.argpartition(rng.random((count, n)), t - 1, axis=1)[:, :t]
    return np.ascontiguousarray(np.sort(part, axis=1).astype(np.int64))


def _cases():
    k4_48 = build_k4_unique(48)
    k8_24 = build_k8_odd(24)
    batch = _sampled_copies(96, 8, 200_000, 12345)
    k8_96 = build_k8_odd(96)
    amal_c = build_k4_unique(24)
    amal_d = trivial(7)

    yield (
        "scan k4(48) t=4 h-unique",
        lambda fn: _full_scan(fn, k4_48.colours, 48, 4, kernels.PROP_UNIQUE),
        kernels.scan_block_numba,
        kernels.scan_block_numpy,
    )
    yield (
        "scan k8(24) t=8 h-odd",
        lambda fn: _full_scan(fn, k8_24.colours, 24, 8, kernels.PROP_ODD),
        kernels.scan_block_numba,
        kernels.scan_block_numpy,
    )
    yield (
        "batch 2e5 samples n=96 t=8",
        lambda fn: fn(k8_96.colours, 96, batch, kernels.PROP_ODD),
        kernels.check_copies_numba,
        kernels.check_copies_numpy,
    )
    yield (
        "amalgam raw 24x7 -> K_168",
        lambda fn: fn(amal_c.colours, amal_d.colours, 24, 7, amal_c.k, amal_d.k),
        kernels.amalgam_raw_numba,
        kernels.amalgam_raw_numpy,
    )


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3, help="timed repeats per case")
    args = ap.parse_args()

    print(f"backend selected at import: {kernels.BACKEND}")
    header = f"{'case':<30} {'numba':>10} {'numpy':>10} {'speedup':>9}"
    print(header)
    print("-" * len(header))
    for label, runner, compiled, fallback in _cases():
        times = {}
        for name, fn in (("numba", compiled), ("numpy", fallback)):
            if fn is None:
                continue
            runner(fn)  # warmup; first numba call may compile
            times[name] = _best_of(args.repeat, lambda: runner(fn))
        numba_s = f"{times['numba']:>9.4f}s" if "numba" in times else f"{'-':>10}"
        numpy_s = f"{times['numpy']:>9.4f}s"
        if "numba" in times and times["numba"] > 0:
            ratio = f"{times['numpy'] / times['numba']:>8.1f}x"
        else:
            ratio = f"{'-':>9}"
        print(f"{label:<30} {numba_s} {numpy_s} {ratio}")


if __name__ == "__main__":
    main()
