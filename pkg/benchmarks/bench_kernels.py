"""Benchmark the compiled kernel extension against the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [repeats]

Times the two hot kernels (regularized incomplete gamma and incomplete
beta) over a mixed workload representative of CDF evaluation during the
Monte Carlo suites, then prints per-call latency and the speedup ratio.
"""

import sys
import time

import numpy as np

from pwreject import _kernels_py

try:
    from pwreject import _ckernels
except ImportError:
    _ckernels = None


def workload(rng, size=20_000):
    s = rng.uniform(0.5, 25.0, size)
    x = rng.uniform(0.0, 50.0, size)
    a = rng.uniform(0.5, 10.0, size)
    b = rng.uniform(0.5, 10.0, size)
    z = rng.uniform(0.0, 1.0, size)
    return s, x, a, b, z


def time_backend(mod, args, repeats):
    s, x, a, b, z = args
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        acc = 0.0
        for i in range(s.size):
            acc += mod.reg_lower_gamma(s[i], x[i])
            acc += mod.reg_inc_beta(a[i], b[i], z[i])
        best = min(best, time.perf_counter() - t0)
    return best, acc


def main():
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    args = workload(np.random.default_rng(0))
    calls = 2 * args[0].size

    py_time, py_acc = time_backend(_kernels_py, args, repeats)
    print("pure python : %.3f s  (%.2f us/call)" % (py_time, 1e6 * py_time / calls))

    if _ckernels is None:
        print("compiled    : extension not built; skipping comparison")
        return

    cy_time, cy_acc = time_backend(_ckernels, args, repeats)
    print("cython      : %.3f s  (%.2f us/call)" % (cy_time, 1e6 * cy_time / calls))
    print("speedup     : %.1fx" % (py_time / cy_time))
    if abs(py_acc - cy_acc) > 1e-6 * calls:
        raise SystemExit("backends disagree: %r vs %r" % (py_acc, cy_acc))
    print("checksums agree (%.6f)" % (py_acc,))


if __name__ == "__main__":
    main()
