"""
Independent reference computations used to freeze expected values.

Nothing here imports the code under test except plain state containers.
Dense operators use the coin (x) position ordering: index ``c * n + (j + T)``.
"""

import math

import numpy as np


def expm_series(A, terms=20):
    """Truncated Taylor series ``sum_k A^k / k!``."""
    out = np.eye(A.shape[0], dtype=complex)
    term = np.eye(A.shape[0], dtype=complex)
    for k in range(1, terms + 1):
        term = term @ A / k
        out = out + term
    return out


def expm_eig(A):
    """Matrix exponential by eigendecomposition (diagonalizable ``A``)."""
    w, V = np.linalg.eig(A)
    return V @ np.diag(np.exp(w)) @ np.linalg.inv(V)


def shift_matrix(T):
    n = 2 * T + 1
    left = np.eye(n, k=1)    # |j-1><j|
    right = np.eye(n, k=-1)  # |j+1><j|
    P0 = np.diag([1.0, 0.0])
    P1 = np.diag([0.0, 1.0])
    return np.kron(P0, left) + np.kron(P1, right)


def walk_matrix(coin, T, order="coin-shift"):
    n = 2 * T + 1
    C = np.kron(np.asarray(coin), np.eye(n))
    S = shift_matrix(T)
    return S @ C if order == "coin-shift" else C @ S


def localized_vector(a0, a1, T):
    n = 2 * T + 1
    v = np.zeros(2 * n, dtype=complex)
    v[T] = a0
    v[n + T] = a1
    return v


def dense_distribution(coin, a0, a1, t, order="coin-shift"):
    """Position distribution after ``t`` dense matrix-vector products."""
    T = t
    n = 2 * T + 1
    W = walk_matrix(coin, T, order)
    v = localized_vector(a0, a1, T)
    for _ in range(t):
        v = W @ v
    return np.abs(v[:n]) ** 2 + np.abs(v[n:]) ** 2


def binomial_walk(t):
    """Classical symmetric walk after ``t`` steps from the origin, on ``[-t, t]``."""
    p = np.zeros(2 * t + 1)
    for k in range(t + 1):
        p[2 * k] = math.comb(t, k) / 2**t
    return p
