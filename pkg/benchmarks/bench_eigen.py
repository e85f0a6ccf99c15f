"""Benchmark the compiled Jacobi kernels against the pure-numpy fallback.

Runs the eigendecomposition and SVD kernels on random symmetric matrices /
random rectangular matrices of growing size and reports wall time per call
for both backends. The compiled path is warmed up before timing so JIT
compilation is excluded.

Usage: python benchmarks/bench_eigen.py [--sizes 20,40,80] [--repeats 5]
"""

import argparse
import time

import numpy as np

from speclap import _kernels


def time_backend(fn, make_args, repeats):
    best = float("inf")
    for _ in range(repeats):
        args = make_args()
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="10,20,40,80,120")
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rng = np.random.default_rng(0)

    if not _kernels.USE_NUMBA:
        print("note: compiled backend unavailable "
              "(SPECLAP_NO_NUMBA set or numba missing); timing fallback only")
        backends = [("numpy", _kernels._jacobi_eigen_impl, _kernels._jacobi_svd_impl)]
    else:
        # warm up the JIT
        _kernels.jacobi_eigen(np.eye(3), np.eye(3), 1e-12, 100)
        _kernels.jacobi_svd(np.eye(3), np.eye(3), 1e-12, 100)
        backends = [
            ("numba", _kernels.jacobi_eigen, _kernels.jacobi_svd),
            ("numpy", _kernels._jacobi_eigen_impl, _kernels._jacobi_svd_impl),
        ]

    print(f"{'n':>5} {'kernel':>6} " + " ".join(f"{name:>12}" for name, *_ in backends)
          + ("      speedup" if len(backends) == 2 else ""))
    for n in sizes:
        S = rng.standard_normal((n, n))
        S = 0.5 * (S + S.T)
        M = rng.standard_normal((n + 5, n))
        rows = {"eigen": [], "svd": []}
        for _, eig_fn, svd_fn in backends:
            rows["eigen"].append(time_backend(
                eig_fn, lambda: (S.copy(), np.eye(n), 1e-12, 100), args.repeats))
            rows["svd"].append(time_backend(
                svd_fn, lambda: (M.copy(), np.eye(n), 1e-12, 100), args.repeats))
        for kernel, times in rows.items():
            line = f"{n:>5} {kernel:>6} " + " ".join(f"{t * 1e3:>10.2f}ms" for t in times)
            if len(times) == 2:
                line += f"  {times[1] / times[0]:>10.1f}x"
            print(line)


if __name__ == "__main__":
    main()
