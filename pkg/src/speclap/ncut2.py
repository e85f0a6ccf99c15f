"""Two-way normalized cut: objective, relaxation, sign orientation, and the
exact rounding of zero entries in the continuous solution."""

from dataclasses import dataclass

import numpy as np

from . import eigen
from .errors import AllOneSide, DegenerateSubset, Disconnected
from .graph import NodeSubset, connected_components, cut, degree_vector, volume
from .laplacian import laplacian


@dataclass(frozen=True)
class TwoWayIndicator:
    a: float
    beta: float
    assignment: np.ndarray  # True where the node is in A

    def vector(self):
        return np.where(self.assignment, self.a, -self.beta * self.a)


@dataclass(frozen=True)
class TwoWayResult:
    partition: tuple  # (NodeSubset A, NodeSubset A-bar)
    ncut: float
    Z: np.ndarray
    X: TwoWayIndicator
    residual: float


def ncut2_value(g, A):
    """cut(A) * (1/vol(A) + 1/vol(A-bar))."""
    A = A if isinstance(A, NodeSubset) else NodeSubset(A, m=g.m)
    comp = NodeSubset(set(range(1, g.m + 1)) - A.members, m=g.m)
    if len(A) == 0 or len(comp) == 0:
        raise DegenerateSubset("A must be a nonempty proper subset")
    va = volume(g, A)
    vb = volume(g, comp)
    if va <= 0 or vb <= 0:
        raise DegenerateSubset("both sides must have positive volume")
    return cut(g, A) * (1.0 / va + 1.0 / vb)


def solve_relaxed_2way(g):
    """Z = D^{-1/2} Y with Y the unit eigenvector of L_sym for nu_2."""
    _, c = connected_components(g)
    if c != 1:
        raise Disconnected(f"graph has {c} components")
    lap = laplacian(g, "sym")
    _, vecs = eigen.smallest_k(lap.M, 2)
    Y = vecs[:, 1]
    Z = Y / np.sqrt(lap.degree)
    return Z


def orient_sign(Z):
    """Flip Z when its positive side is more spread out than its negative
    side (compare each side against its own mean)."""
    Z = np.asarray(Z, dtype=float)
    pos = Z > 0
    neg = Z < 0
    res_pos = 0.0
    if pos.any():
        res_pos = float(np.linalg.norm(Z[pos] - Z[pos].mean()))
    res_neg = 0.0
    if neg.any():
        res_neg = float(np.linalg.norm(Z[neg] - Z[neg].mean()))
    if res_pos > res_neg:
        return -Z
    return Z


def round_2way(g, Z):
    """Discretize Z into a two-level indicator, deciding each zero entry by
    whether moving it to the positive side strictly reduces ||X - Z||."""
    Z = np.asarray(Z, dtype=float)
    d_vec = degree_vector(g)
    d = float(d_vec.sum())
    N = g.m
    norm_z = float(np.linalg.norm(Z))
    pos = Z > 0
    zero = np.nonzero(Z == 0)[0]
    if not pos.any() or not (Z < 0).any():
        raise AllOneSide("Z must take both signs")

    def build(mask):
        n_a = int(mask.sum())
        alpha = float(d_vec[mask].sum())
        beta = alpha / (d - alpha)
        a = norm_z / np.sqrt(n_a + beta * beta * (N - n_a))
        return a, beta, np.where(mask, a, -beta * a)

    a, beta, X = build(pos)
    for i in zero:
        trial = pos.copy()
        trial[i] = True
        ta, tbeta, tX = build(trial)
        if np.linalg.norm(tX - Z) < np.linalg.norm(X - Z):
            pos, a, beta, X = trial, ta, tbeta, tX

    A = NodeSubset((np.nonzero(pos)[0] + 1).tolist(), m=N)
    comp = NodeSubset(set(range(1, N + 1)) - A.members, m=N)
    ind = TwoWayIndicator(a=float(a), beta=float(beta), assignment=pos)
    return TwoWayResult(
        partition=(A, comp),
        ncut=ncut2_value(g, A),
        Z=Z,
        X=ind,
        residual=float(np.linalg.norm(X - Z)),
    )
