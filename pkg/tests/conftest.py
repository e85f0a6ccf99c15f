"""Shared fixtures: reference matrices and random graph generators."""

import numpy as np
import pytest

from speclap import Graph

# 5-node example graph: adjacency and unnormalized Laplacian.
A5 = np.array([
    [0, 1, 1, 0, 0],
    [1, 0, 1, 1, 1],
    [1, 1, 0, 1, 0],
    [0, 1, 1, 0, 1],
    [0, 1, 0, 1, 0],
], dtype=float)

L5 = np.array([
    [2, -1, -1, 0, 0],
    [-1, 4, -1, -1, -1],
    [-1, -1, 3, -1, 0],
    [0, -1, -1, 3, -1],
    [0, -1, 0, -1, 2],
], dtype=float)

# 4-node weighted example and the incidence matrix of its canonical
# orientation (edge (i, j) oriented i -> j for i < j, lexicographic order).
W4 = np.array([
    [0, 3, 6, 3],
    [3, 0, 0, 3],
    [6, 0, 0, 3],
    [3, 3, 3, 0],
], dtype=float)

B4 = np.array([
    [1.7321, 2.4495, 1.7321, 0, 0],
    [-1.7321, 0, 0, 1.7321, 0],
    [0, -2.4495, 0, 0, 1.7321],
    [0, 0, -1.7321, -1.7321, -1.7321],
])

# 9-node unit-weight clustering benchmark graph.
W1_EDGES = [(1, 2), (1, 4), (2, 5), (3, 6), (4, 5), (5, 9), (6, 9), (7, 8), (8, 9)]

# Signed Laplacian of the balanced 9-node signed graph and its spectrum.
L1BAR = np.array([
    [2, -1, 0, -1, 0, 0, 0, 0, 0],
    [-1, 5, 1, -1, 1, 0, 0, -1, 0],
    [0, 1, 3, 0, -1, -1, 0, 0, 0],
    [-1, -1, 0, 5, 1, 0, -1, -1, 0],
    [0, 1, -1, 1, 6, -1, 0, 1, -1],
    [0, 0, -1, 0, -1, 4, 0, 1, -1],
    [0, 0, 0, -1, 0, 0, 2, -1, 0],
    [0, -1, 0, -1, 1, 1, -1, 6, 1],
    [0, 0, 0, 0, -1, -1, 0, 1, 3],
], dtype=float)

L1BAR_EIGENVALUES = np.array(
    [0.0, 1.4790, 1.7513, 2.7883, 4.3570, 4.8815, 6.2158, 7.2159, 7.3112])

# Signed Laplacian of the unbalanced variant (two edge signs differ).
L2BAR = np.array([
    [2, -1, 0, -1, 0, 0, 0, 0, 0],
    [-1, 5, 1, 1, -1, 0, 0, -1, 0],
    [0, 1, 3, 0, -1, -1, 0, 0, 0],
    [-1, 1, 0, 5, 1, 0, -1, -1, 0],
    [0, -1, -1, 1, 6, -1, 0, 1, -1],
    [0, 0, -1, 0, -1, 4, 0, 1, -1],
    [0, 0, 0, -1, 0, 0, 2, -1, 0],
    [0, -1, 0, -1, 1, 1, -1, 6, 1],
    [0, 0, 0, 0, -1, -1, 0, 1, 3],
], dtype=float)

L2BAR_EIGENVALUES = np.array(
    [0.5175, 1.5016, 1.7029, 2.7058, 3.7284, 4.9604, 5.6026, 7.0888, 8.1921])

G1_BIPARTITION = ({1, 2, 4, 7, 8}, {3, 5, 6, 9})


def signed_weights_from_laplacian(Lbar):
    """Recover the signed weight matrix: w_ij = -Lbar_ij off the diagonal."""
    W = -Lbar.copy()
    np.fill_diagonal(W, 0.0)
    return W


def w1_graph():
    W = np.zeros((9, 9))
    for i, j in W1_EDGES:
        W[i - 1, j - 1] = W[j - 1, i - 1] = 1.0
    return Graph(W)


def g1_signed():
    return Graph(signed_weights_from_laplacian(L1BAR))


def g2_signed():
    return Graph(signed_weights_from_laplacian(L2BAR))


def ring(n, weight=1.0):
    W = np.zeros((n, n))
    for i in range(n):
        j = (i + 1) % n
        W[i, j] = W[j, i] = weight
    return Graph(W)


def path(n, weight=1.0):
    W = np.zeros((n, n))
    for i in range(n - 1):
        W[i, i + 1] = W[i + 1, i] = weight
    return Graph(W)


def complete(n, weight=1.0):
    W = np.full((n, n), weight)
    np.fill_diagonal(W, 0.0)
    return Graph(W)


def random_connected(rng, n, signed=False, extra_edge_prob=0.3):
    """Random connected graph: spanning tree plus random extra edges."""
    W = np.zeros((n, n))
    order = rng.permutation(n)
    for k in range(1, n):
        i = order[k]
        j = order[rng.integers(0, k)]
        W[i, j] = W[j, i] = rng.uniform(0.2, 2.0)
    for i in range(n):
        for j in range(i + 1, n):
            if W[i, j] == 0 and rng.random() < extra_edge_prob:
                W[i, j] = W[j, i] = rng.uniform(0.2, 2.0)
    if signed:
        for i in range(n):
            for j in range(i + 1, n):
                if W[i, j] != 0 and rng.random() < 0.4:
                    W[i, j] = W[j, i] = -W[i, j]
    return Graph(W)


def random_orthonormal(rng, m, n):
    Q, _ = np.linalg.qr(rng.standard_normal((m, n)))
    return Q[:, :n]


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20260824)
