"""K-way clustering by normalized, signed-normalized, ratio, and signed-ratio
cuts: the continuous relaxation, initialization heuristics, and the
alternating discretization (per-row argmax rounding vs. Procrustes refit)."""

from dataclasses import dataclass

import numpy as np

from . import eigen
from .errors import (
    Disconnected,
    EmptyBlock,
    RankDeficient,
    ZeroVector,
    ZeroVolume,
)
from .graph import NodeSubset, connected_components, cut, degree_vector, links
from .laplacian import laplacian

MODES = ("ncut", "rcut", "signed_ncut", "signed_rcut")
TARGET_FROBENIUS = 100.0
RESCALE_METHODS = ("row_sum_ls", "row_norm_ls", "row_normalize")


@dataclass(frozen=True)
class IndicatorMatrix:
    X: np.ndarray  # N x K, one nonzero per row, no zero column
    scales: np.ndarray  # per-column nonzero value

    @property
    def assignment(self):
        return np.argmax(self.X != 0, axis=1)

    def blocks(self, m=None):
        N, K = self.X.shape
        asg = self.assignment
        return tuple(
            NodeSubset((np.nonzero(asg == j)[0] + 1).tolist(), m=m or N)
            for j in range(K)
        )


@dataclass(frozen=True)
class ContinuousSolution:
    Z: np.ndarray
    mode: str
    frobenius_norm: float


@dataclass(frozen=True)
class TransformQ:
    R: np.ndarray  # K x K orthogonal (or near-orthogonal for the greedy init)
    Lambda: np.ndarray  # K x K diagonal invertible

    @property
    def Q(self):
        return self.R @ self.Lambda


@dataclass(frozen=True)
class KWayResult:
    partition: tuple
    objective: float
    X: IndicatorMatrix
    Z: ContinuousSolution
    Q: TransformQ
    iterations: int
    residual: float
    relaxation_value: float
    constraints_deformed: bool  # True when the init rescale left (*_1)


def _partition_blocks(g, partition):
    blocks = [p if isinstance(p, NodeSubset) else NodeSubset(p, m=g.m) for p in partition]
    seen = set()
    for b in blocks:
        if len(b) == 0:
            raise EmptyBlock("every block must be nonempty")
        if seen & b.members:
            raise ValueError("blocks must be disjoint")
        seen |= b.members
    if seen != set(range(1, g.m + 1)):
        raise ValueError("blocks must cover all nodes")
    return blocks


def objective(g, partition, mode="ncut"):
    """Discrete clustering objective for the given partition."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    blocks = _partition_blocks(g, partition)
    signed = mode.startswith("signed")
    total = 0.0
    for A in blocks:
        num = cut(g, A)
        if signed:
            num += 2.0 * links(g, A, A, "negative_only")
        if mode.endswith("ncut"):
            denom = volume_for_mode(g, A, signed)
            if denom <= 0:
                raise ZeroVolume(f"block {sorted(A.members)} has zero volume")
        else:
            denom = float(len(A))
        total += num / denom
    return total


def volume_for_mode(g, A, signed):
    d = degree_vector(g, signed=signed)
    return float(d[A.indices0()].sum())


def rayleigh_sum(g, X, mode="ncut"):
    """Sum of per-column Rayleigh quotients of the indicator columns."""
    Xm = X.X if isinstance(X, IndicatorMatrix) else np.asarray(X, dtype=float)
    L, D = _mode_matrices(g, mode)
    total = 0.0
    for j in range(Xm.shape[1]):
        col = Xm[:, j]
        total += float(col @ (L @ col)) / float(col @ (D @ col))
    return total


def _mode_matrices(g, mode):
    if mode == "ncut":
        lap = laplacian(g, "unnormalized")
        return lap.M, np.diag(lap.degree)
    if mode == "signed_ncut":
        lap = laplacian(g, "signed_unnormalized")
        return lap.M, np.diag(lap.degree)
    if mode == "rcut":
        return laplacian(g, "unnormalized").M, np.eye(g.m)
    if mode == "signed_rcut":
        return laplacian(g, "signed_unnormalized").M, np.eye(g.m)
    raise ValueError(f"unknown mode {mode!r}")


def solve_relaxed(g, K, mode="ncut"):
    """Continuous solution: K smallest eigenvectors of the mode's Laplacian,
    unnormalized by D^{-1/2} where applicable, rescaled to ||Z||_F = 100."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if not 2 <= K <= g.m:
        raise ValueError(f"K={K} out of range")
    if mode == "ncut":
        _, c = connected_components(g)
        if c != 1:
            raise Disconnected(f"graph has {c} components")
    if mode == "ncut":
        lap = laplacian(g, "sym")
        _, Y = eigen.smallest_k(lap.M, K)
        Z = Y / np.sqrt(lap.degree)[:, None]
    elif mode == "signed_ncut":
        lap = laplacian(g, "signed_sym")
        _, Y = eigen.smallest_k(lap.M, K)
        Z = Y / np.sqrt(lap.degree)[:, None]
    elif mode == "rcut":
        _, Z = eigen.smallest_k(laplacian(g, "unnormalized").M, K)
    else:
        _, Z = eigen.smallest_k(laplacian(g, "signed_unnormalized").M, K)
    Z = Z * (TARGET_FROBENIUS / np.linalg.norm(Z))
    return ContinuousSolution(Z=Z, mode=mode, frobenius_norm=TARGET_FROBENIUS)


def init_rotation_R1(Z):
    """Rotation making the columns of Z R1 simultaneously orthogonal and
    D-orthogonal: the eigenvector matrix of Z^T Z."""
    Z = _as_z(Z)
    G = Z.T @ Z
    eig = eigen.sym_eigen(G)
    if eig.values[0] <= 1e-12 * max(eig.values[-1], 1e-300):
        raise RankDeficient("Z does not have full column rank")
    return TransformQ(R=eig.vectors, Lambda=np.eye(Z.shape[1]))


def init_rotation_R2(Z, first_row=0):
    """Greedy pick of K rows of Z that are as mutually orthogonal as
    possible; the chosen rows, unit-normalized, become the columns of R."""
    Z = _as_z(Z)
    N, K = Z.shape
    available = list(range(N))
    cols = [Z[first_row].copy()]
    available.remove(first_row)
    c = np.zeros(N)
    for _ in range(1, K):
        c = c + np.abs(Z @ cols[-1])
        pick = min(available, key=lambda i: c[i])
        cols.append(Z[pick].copy())
        available.remove(pick)
    R = np.column_stack(cols)
    norms = np.linalg.norm(R, axis=0)
    norms[norms == 0] = 1.0
    return TransformQ(R=R / norms, Lambda=np.eye(K))


def rescale_variant(Z, method="row_normalize"):
    """Deform Z to sit closer to a discrete solution. Returns (Z', deformed)
    where deformed is True when Z' may no longer satisfy the relaxed
    constraints (row normalization does not preserve them)."""
    Z = _as_z(Z)
    if method == "row_sum_ls":
        lam = np.linalg.solve(Z.T @ Z, Z.T @ np.ones(Z.shape[0]))
        if np.any(np.abs(lam) < 1e-6):
            return Z.copy(), False
        return Z * lam[None, :], False
    if method == "row_norm_ls":
        sq = Z * Z
        lam2 = _pinv(sq) @ np.ones(Z.shape[0])
        if np.any(lam2 <= 1e-12):
            return Z.copy(), False
        return Z * np.sqrt(lam2)[None, :], False
    if method == "row_normalize":
        norms = np.linalg.norm(Z, axis=1, keepdims=True)
        norms[norms == 0] = 1.0
        return Z / norms, True
    raise ValueError(f"unknown rescale method {method!r}")


def _pinv(M, tol=1e-10):
    res = eigen.svd(M)
    m, n = M.shape
    r = min(m, n)
    cutoff = tol * (res.S[0] if res.S.size else 0.0)
    Sinv = np.zeros((n, m))
    for i in range(r):
        if res.S[i] > cutoff:
            Sinv[i, i] = 1.0 / res.S[i]
    return res.V @ Sinv @ res.U.T


def flip_columns(ZR):
    """Negate every column with a strictly negative mean."""
    ZR = np.asarray(ZR, dtype=float)
    signs = np.where(ZR.mean(axis=0) < 0, -1.0, 1.0)
    return ZR * signs[None, :], np.diag(signs)


def podx(Z, Q=None):
    """Round Z Q to an indicator: per row keep the leftmost largest entry;
    repair empty columns by migrating a 1 from the most populated column;
    rescale so ||X||_F = ||Z||_F."""
    Z = _as_z(Z)
    if Q is None:
        Y = Z
    else:
        Qm = Q.Q if isinstance(Q, TransformQ) else np.asarray(Q, dtype=float)
        Y = Z @ Qm
    N, K = Y.shape
    pattern = np.zeros((N, K))
    for i in range(N):
        pattern[i, int(np.argmax(Y[i]))] = 1.0
    counts = pattern.sum(axis=0)
    while np.any(counts == 0):
        k_from = int(np.argmax(counts))  # leftmost column with the most ones
        row = int(np.nonzero(pattern[:, k_from])[0][0])  # smallest such row
        k_to = int(np.nonzero(counts == 0)[0][0])  # leftmost zero column
        pattern[row, k_from] = 0.0
        pattern[row, k_to] = 1.0
        counts[k_from] -= 1
        counts[k_to] += 1
    a = float(np.linalg.norm(Z) / np.sqrt(N))
    return IndicatorMatrix(X=pattern * a, scales=np.full(K, a))


def podr(X, Z):
    """Best transform Q = R Lambda for fixed X: R from the SVD of Z^T X
    (orthogonal Procrustes), then the per-column least-squares diagonal
    evaluated against Z R, falling back to Lambda = I when singular."""
    Xm = X.X if isinstance(X, IndicatorMatrix) else np.asarray(X, dtype=float)
    Z = _as_z(Z)
    res = eigen.svd(Z.T @ Xm)
    R = res.U @ res.V.T
    ZR = Z @ R
    K = Xm.shape[1]
    if res.S[-1] < 1e-9 * max(res.S[0], 1.0):
        # Z^T X is rank deficient: the rotation is not unique and the
        # diagonal stage is singular, so skip it
        return TransformQ(R=R, Lambda=np.eye(K))
    lam = np.zeros(K)
    for j in range(K):
        denom = float(ZR[:, j] @ ZR[:, j])
        lam[j] = float(ZR[:, j] @ Xm[:, j]) / denom if denom > 0 else 0.0
    if np.any(np.abs(lam) < 1e-9):
        lam = np.ones(K)
    return TransformQ(R=R, Lambda=np.diag(lam))


def projective_distance(x, y):
    """Angle between the lines spanned by x and y (antipodal points equal)."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    nx = np.linalg.norm(x)
    ny = np.linalg.norm(y)
    if nx == 0 or ny == 0:
        raise ZeroVector("projective distance of the zero vector")
    return float(np.arccos(min(1.0, abs(float(x @ y)) / (nx * ny))))


def first_column_rotation(g, X):
    """Orthogonal R whose first column is (sqrt(vol(A_j)/d))_j, so that the
    first column of X R is constant; completed by Gram-Schmidt over
    (R^1, e_2, ..., e_K)."""
    Xm = X.X if isinstance(X, IndicatorMatrix) else np.asarray(X, dtype=float)
    N, K = Xm.shape
    D = degree_vector(g)
    d = float(D.sum())
    vols = np.zeros(K)
    c2 = None
    for j in range(K):
        nz = np.nonzero(Xm[:, j])[0]
        if nz.size == 0:
            raise ValueError("indicator has an empty column")
        vals = Xm[nz, j]
        if np.max(np.abs(vals - vals[0])) > 1e-10 * abs(vals[0]):
            raise ValueError("column entries must be equal")
        vols[j] = float(D[nz].sum())
        form = float(vals[0] ** 2 * vols[j])
        if c2 is None:
            c2 = form
        elif abs(form - c2) > 1e-8 * max(c2, 1.0):
            raise ValueError("columns must be D-normalized to a common value")
    r1 = np.sqrt(vols / d)
    cols = [r1]
    for k in range(1, K):
        v = np.zeros(K)
        v[k] = 1.0
        for u in cols:
            v -= (u @ v) * u
        nrm = np.linalg.norm(v)
        if nrm < 1e-12:
            raise ValueError("Gram-Schmidt breakdown")
        v = v / nrm
        nz = np.nonzero(np.abs(v) > 1e-12)[0]
        if nz.size and v[nz[0]] < 0:  # deterministic column orientation
            v = -v
        cols.append(v)
    return TransformQ(R=np.column_stack(cols), Lambda=np.eye(K))


def _as_z(Z):
    if isinstance(Z, ContinuousSolution):
        return Z.Z
    return np.asarray(Z, dtype=float)


def _pattern_key(X):
    return tuple(int(v) for v in X.assignment)


def cluster(g, K, mode="ncut", rescale="row_normalize", max_iters=100,
            r2_first_row=0):
    """Full pipeline: relaxation, candidate initialization, and the rounding/
    refit alternation. Returns the discrete partition with diagnostics."""
    sol = solve_relaxed(g, K, mode)
    Z1 = sol.Z
    relax_value = rayleigh_sum(g, Z1, mode)
    R1 = init_rotation_R1(Z1).R
    Z2 = Z1 @ R1
    Zinit1, deformed1 = rescale_variant(Z1, rescale)
    Zinit2, deformed2 = rescale_variant(Z2, rescale)
    deformed = deformed1 or deformed2

    # candidate initial (X, Q): Q is expressed against the original Z1 so the
    # iteration proper always runs on the undeformed relaxed solution
    candidates = []
    for Zc, base_R in ((Zinit1, np.eye(K)), (Zinit2, R1)):
        for Rc in (np.eye(K), init_rotation_R2(Zc, first_row=r2_first_row).R):
            ZR = Zc @ Rc
            X_plain = podx(Zc, Rc)
            res_plain = float(np.linalg.norm(X_plain.X - ZR))
            ZQp, Rp = flip_columns(ZR)
            X_flip = podx(ZQp)
            res_flip = float(np.linalg.norm(X_flip.X - ZQp))
            if res_flip < res_plain:
                candidates.append((res_flip, base_R @ Rc @ Rp))
            else:
                candidates.append((res_plain, base_R @ Rc))
    _, Q0 = min(candidates, key=lambda t: t[0])

    Q = TransformQ(R=Q0, Lambda=np.eye(K))
    prev_key = None
    prev_phi = np.inf
    iterations = 0
    X = None
    for it in range(1, max_iters + 1):
        X = podx(Z1, Q)
        key = _pattern_key(X)
        Q = podr(X, Z1)
        phi = float(np.linalg.norm(X.X - Z1 @ Q.Q))
        assert phi <= prev_phi + 1e-9  # alternation must not increase the fit
        iterations = it
        if key == prev_key or prev_phi - phi < 1e-12:
            break
        prev_key = key
        prev_phi = phi

    blocks = X.blocks(m=g.m)
    return KWayResult(
        partition=blocks,
        objective=objective(g, blocks, mode),
        X=X,
        Z=sol,
        Q=Q,
        iterations=iterations,
        residual=float(np.linalg.norm(X.X - Z1 @ Q.Q)),
        relaxation_value=relax_value,
        constraints_deformed=deformed,
    )
