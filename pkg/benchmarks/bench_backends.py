"""Benchmark the compiled kernels against the pure-NumPy fallback.

The two backends must agree bit for bit; this script times the hot
kernels (im2col / col2im) and a full convolution forward+backward on
both and verifies agreement on the way.

Usage:
    python benchmarks/bench_backends.py [--repeat 5] [--f64]
"""

import argparse
import importlib
import time

import numpy as np

from rebornnet.backend import np_kernels


def load_compiled():
    try:
        return importlib.import_module("rebornnet.backend._core")
    except ImportError:
        return None


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_kernels(compiled, dtype, repeat):
    rng = np.random.default_rng(0)
    n, c, h, w = 32, 16, 32, 32
    kh = kw = 3
    stride, pad = 1, 1
    x = rng.standard_normal((n, c, h, w)).astype(dtype)

    rows = []
    t_py, cols_py = timeit(lambda: np_kernels.im2col(x, kh, kw, stride, pad), repeat)
    t_c, cols_c = timeit(lambda: compiled.im2col(x, kh, kw, stride, pad), repeat)
    assert np.array_equal(cols_py, cols_c), "im2col backends disagree"
    rows.append(("im2col", t_py, t_c))

    cols = cols_py
    t_py, back_py = timeit(
        lambda: np_kernels.col2im(cols, n, c, h, w, kh, kw, stride, pad), repeat)
    t_c, back_c = timeit(
        lambda: compiled.col2im(cols, n, c, h, w, kh, kw, stride, pad), repeat)
    assert np.array_equal(back_py, back_c), "col2im backends disagree"
    rows.append(("col2im", t_py, t_c))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="best-of-N timing")
    ap.add_argument("--f64", action="store_true")
    args = ap.parse_args()
    dtype = np.float64 if args.f64 else np.float32

    compiled = load_compiled()
    if compiled is None:
        print("compiled backend not built; only the NumPy fallback is available")
        return 1

    print(f"dtype={np.dtype(dtype).name}  input=32x16x32x32  kernel=3x3 s1 p1")
    print(f"{'kernel':<10}{'numpy (s)':>12}{'compiled (s)':>14}{'speedup':>9}")
    for name, t_py, t_c in bench_kernels(compiled, dtype, args.repeat):
        print(f"{name:<10}{t_py:>12.4f}{t_c:>14.4f}{t_py / t_c:>8.1f}x")
    print("backends agree bit-for-bit on both kernels")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
