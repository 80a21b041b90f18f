"""
Continuous-time quantum walk on graphs, with the classical continuous- and
discrete-time random walk baselines.

Evolution uses the full eigendecomposition of the real symmetric generator,
so ``exp(-iHt)`` and ``exp(-Ht)`` are exact to roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from pathlib import Path

import numpy as np
import scipy.linalg
from numpy.typing import NDArray

from .state import CapacityError, ProbDist

__all__ = [
    "GeneratorMatrix",
    "line_generator",
    "graph_generator",
    "read_edge_list",
    "evolve_ctqw",
    "evolve_classical_ctrw",
    "classical_dtrw_step",
]

MAX_DIM = 4096


@dataclass(frozen=True, eq=False)
class GeneratorMatrix:
    """``H[j, j] = d_j gamma``, ``H[j, k] = -gamma`` on edges, zero elsewhere."""

    H: NDArray[np.float64]
    gamma: float

    @property
    def n(self) -> int:
        return self.H.shape[0]

    @cached_property
    def _eigh(self) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        return scipy.linalg.eigh(self.H)

    def propagator(self, t: float) -> NDArray[np.complex128]:
        """``exp(-i H t)``."""
        w, V = self._eigh
        return (V * np.exp(-1j * w * t)) @ V.T

    def heat_kernel(self, t: float) -> NDArray[np.float64]:
        """``exp(-H t)``."""
        w, V = self._eigh
        return (V * np.exp(-w * t)) @ V.T


def graph_generator(adjacency, gamma: float) -> GeneratorMatrix:
    """
    Generator matrix of an unweighted simple graph.

    Raises
    ------
    ValueError
        If the adjacency matrix is not square, 0/1, symmetric with zero
        diagonal, or ``gamma <= 0``.
    """
    A = np.asarray(adjacency)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ValueError(f"adjacency must be square, got shape {A.shape}")
    if A.shape[0] > MAX_DIM:
        raise ValueError(f"graphs are limited to {MAX_DIM} vertices")
    if not np.isin(A, (0, 1)).all():
        raise ValueError("adjacency entries must be 0 or 1")
    if not np.array_equal(A, A.T):
        raise ValueError("adjacency must be symmetric")
    if np.any(np.diag(A)):
        raise ValueError("adjacency must have a zero diagonal (no self-loops)")
    if not gamma > 0:
        raise ValueError(f"gamma must be > 0, got {gamma}")
    A = A.astype(float)
    H = gamma * (np.diag(A.sum(axis=1)) - A)
    return GeneratorMatrix(H, float(gamma))


def line_generator(gamma: float, n_sites: int) -> GeneratorMatrix:
    """Path graph on ``n_sites`` vertices: tridiagonal ``(-gamma, 2 gamma, -gamma)``, degree-1 ends."""
    if n_sites < 2:
        raise ValueError(f"n_sites must be >= 2, got {n_sites}")
    A = np.eye(n_sites, k=1, dtype=int) + np.eye(n_sites, k=-1, dtype=int)
    return graph_generator(A, gamma)


def read_edge_list(path: str | Path, n: int | None = None):
    """Adjacency matrix from a ``u v`` per line, 0-indexed edge list."""
    edges = []
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        u, v = (int(x) for x in line.split())
        edges.append((u, v))
    size = max((max(e) for e in edges), default=-1) + 1
    n = size if n is None else n
    if size > n:
        raise ValueError(f"edge list references vertex {size - 1} but n = {n}")
    A = np.zeros((n, n), dtype=int)
    for u, v in edges:
        A[u, v] = A[v, u] = 1
    return A


def evolve_ctqw(H: GeneratorMatrix, psi0, t: float) -> NDArray[np.complex128]:
    psi0 = np.asarray(psi0, dtype=np.complex128)
    if psi0.shape != (H.n,):
        raise ValueError(f"psi0 has shape {psi0.shape}, expected ({H.n},)")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if abs(np.linalg.norm(psi0) - 1.0) > 1e-9:
        raise ValueError("psi0 must have unit norm")
    return H.propagator(t) @ psi0


def evolve_classical_ctrw(H: GeneratorMatrix, p0, t: float) -> NDArray[np.float64]:
    p0 = np.asarray(p0, dtype=float)
    if p0.shape != (H.n,):
        raise ValueError(f"p0 has shape {p0.shape}, expected ({H.n},)")
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if np.any(p0 < 0) or abs(p0.sum() - 1.0) > 1e-9:
        raise ValueError("p0 must be a probability vector")
    p = H.heat_kernel(t) @ p0
    # roundoff can leave tiny negatives where the exact kernel is ~0
    return np.clip(p, 0.0, None)


def classical_dtrw_step(p: ProbDist) -> ProbDist:
    """
    Symmetric classical walk: ``p(j, t+1) = (p(j-1, t) + p(j+1, t)) / 2``.

    Raises
    ------
    CapacityError
        If mass on an edge site would leave the lattice.
    """
    if p.ndim != 1:
        raise ValueError("classical_dtrw_step needs a 1D distribution")
    q = p.p
    if q[0] != 0 or q[-1] != 0:
        raise CapacityError("mass on the lattice edge would leave the lattice")
    out = np.zeros_like(q)
    out[1:] += 0.5 * q[:-1]
    out[:-1] += 0.5 * q[1:]
    return ProbDist(p.support, out)
