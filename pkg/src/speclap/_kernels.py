"""Hot numerical kernels: cyclic Jacobi eigensolver and one-sided Jacobi SVD.

Both kernels are compiled with numba's @njit when available. Setting the
environment variable SPECLAP_NO_NUMBA=1 (or importing without numba installed)
selects the pure-numpy fallback, which runs the exact same code uncompiled.
"""

import os

import numpy as np

_DISABLED = os.environ.get("SPECLAP_NO_NUMBA", "").strip() in ("1", "true", "yes")

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is an install-time dependency
    HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and not _DISABLED


def _jacobi_eigen_impl(A, V, tol, max_sweeps):
    """Cyclic Jacobi diagonalization of the symmetric matrix A, in place.

    V accumulates the rotations (must start as the identity). Returns the
    number of sweeps used, or -1 if the off-diagonal mass did not drop below
    tol * ||A||_F within max_sweeps.
    """
    n = A.shape[0]
    norm = 0.0
    for i in range(n):
        for j in range(n):
            norm += A[i, j] * A[i, j]
    norm = np.sqrt(norm)
    if norm == 0.0 or n == 1:
        return 0
    thresh = tol * norm
    for sweep in range(max_sweeps):
        off = 0.0
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(A[p, q]) > off:
                    off = abs(A[p, q])
        if off <= thresh:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) <= thresh * 1e-4:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if theta >= 0.0:
                    t = 1.0 / (theta + np.sqrt(theta * theta + 1.0))
                else:
                    t = -1.0 / (-theta + np.sqrt(theta * theta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(n):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = c * akp - s * akq
                    A[k, q] = s * akp + c * akq
                for k in range(n):
                    apk = A[p, k]
                    aqk = A[q, k]
                    A[p, k] = c * apk - s * aqk
                    A[q, k] = s * apk + c * aqk
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = c * vkp - s * vkq
                    V[k, q] = s * vkp + c * vkq
    # final check after the last sweep
    off = 0.0
    for p in range(n - 1):
        for q in range(p + 1, n):
            if abs(A[p, q]) > off:
                off = abs(A[p, q])
    if off <= thresh:
        return max_sweeps
    return -1


def _jacobi_svd_impl(A, V, tol, max_sweeps):
    """One-sided Jacobi SVD on the columns of A (m x n, m >= n), in place.

    Columns of A are rotated until pairwise orthogonal; V (n x n, starts as
    identity) accumulates the right rotations so that input = A_out * V^T
    with A_out having orthogonal columns. Returns sweeps used or -1.
    """
    m, n = A.shape
    norm = 0.0
    for i in range(m):
        for j in range(n):
            norm += A[i, j] * A[i, j]
    if norm == 0.0 or n == 1:
        return 0
    thresh = tol * tol * norm * norm  # compare against squared quantities
    for sweep in range(max_sweeps):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0
                for k in range(m):
                    alpha += A[k, p] * A[k, p]
                    beta += A[k, q] * A[k, q]
                    gamma += A[k, p] * A[k, q]
                if gamma * gamma <= thresh * 1e-12 or gamma * gamma <= tol * tol * alpha * beta:
                    continue
                rotated = True
                zeta = (beta - alpha) / (2.0 * gamma)
                if zeta >= 0.0:
                    t = 1.0 / (zeta + np.sqrt(zeta * zeta + 1.0))
                else:
                    t = -1.0 / (-zeta + np.sqrt(zeta * zeta + 1.0))
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                for k in range(m):
                    akp = A[k, p]
                    akq = A[k, q]
                    A[k, p] = c * akp - s * akq
                    A[k, q] = s * akp + c * akq
                for k in range(n):
                    vkp = V[k, p]
                    vkq = V[k, q]
                    V[k, p] = c * vkp - s * vkq
                    V[k, q] = s * vkp + c * vkq
        if not rotated:
            return sweep
    return -1


if USE_NUMBA:
    jacobi_eigen = njit(cache=True)(_jacobi_eigen_impl)
    jacobi_svd = njit(cache=True)(_jacobi_svd_impl)
else:
    jacobi_eigen = _jacobi_eigen_impl
    jacobi_svd = _jacobi_svd_impl
