#!/usr/bin/env python3
"""Benchmark the jitted kernels against the pure-numpy fallbacks.

Run as `python benchmarks/bench_kernels.py`.  Set CHARDEG_JIT=0 to check
that the fallback selection works end to end; this script always times
both implementations directly, whatever the flag says.
"""

from __future__ import annotations

import time

import numpy as np

from chardeg import kernels
from chardeg.fields import field_make
from chardeg.linalg import mat_inv


def random_invertible(rng, F, n):
    while True:
        A = rng.integers(0, F.order, size=(n, n)).astype(np.int64)
        try:
            mat_inv(F, A)
            return A
        except ZeroDivisionError:
            continue


def time_call(fn, *args, repeat=3):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_orbit_sweep():
    rng = np.random.default_rng(42)
    print(f"{'orbit sweep':<28} {'space':>10} {'jit':>10} {'numpy':>10} {'speedup':>8}")
    for r, dim in ((2, 14), (3, 10), (3, 12), (5, 7)):
        F = field_make(r)
        gens = np.stack([random_invertible(rng, F, dim) for _ in range(4)])
        nvec = r**dim
        kernels._orbit_sweep_jit(gens, r, dim, nvec)  # compile outside the clock
        tj, out_j = time_call(kernels._orbit_sweep_jit, gens, r, dim, nvec)
        tn, out_n = time_call(kernels._orbit_sweep_numpy, gens, r, dim, nvec, repeat=1)
        assert all(np.array_equal(a, b) for a, b in zip(out_j, out_n))
        print(f"{f'r={r} dim={dim}':<28} {nvec:>10} {tj*1e3:>8.1f}ms {tn*1e3:>8.1f}ms {tn/tj:>7.1f}x")


def bench_rref():
    rng = np.random.default_rng(7)
    print(f"\n{'rref mod p':<28} {'shape':>10} {'jit':>10} {'numpy':>10} {'speedup':>8}")
    for p, n in ((2, 128), (3, 168), (3, 256), (13, 96)):
        A = rng.integers(0, p, size=(n, n)).astype(np.int64)
        kernels._rref_prime_jit(A, p)
        tj, out_j = time_call(kernels._rref_prime_jit, A, p)
        tn, out_n = time_call(kernels._rref_prime_numpy, A, p)
        assert np.array_equal(out_j[0], out_n[0])
        print(f"{f'p={p}':<28} {f'{n}x{n}':>10} {tj*1e3:>8.1f}ms {tn*1e3:>8.1f}ms {tn/tj:>7.1f}x")


if __name__ == "__main__":
    print(f"JIT_ENABLED={kernels.JIT_ENABLED} (CHARDEG_JIT controls the dispatch)")
    bench_orbit_sweep()
    bench_rref()
