"""
Spreading and causality checks for the 1D walk.

The unbiased coin ``su2_coin(0, theta, 0)`` spreads ballistically with
variance close to ``(1 - sin(theta)) t^2``; probability is concentrated on
``[-t cos(theta), t cos(theta)]`` and is exactly zero beyond ``|j| = t``.
:func:`commutator_scan` measures the Heisenberg-picture spreading of a
single-site projector under the walk unitary.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .coins import su2_coin
from .dtqw import evolve
from .state import CapacityError, new_localized, probability_distribution

__all__ = [
    "ConeReport",
    "CommutatorScan",
    "TailFit",
    "variance_scaling",
    "variance_loglog_slope",
    "cone_leakage",
    "walk_unitary",
    "spectral_norm",
    "trace_norm",
    "commutator_scan",
    "position_squared_commutator",
    "fit_exponential_tail",
]

SYMMETRIC = (np.pi / 4, np.pi / 2)
MAX_DIM = 4096


@dataclass(frozen=True)
class ConeReport:
    theta: float
    t: int
    variance: float
    mass_outside_cone: float
    mass_outside_lattice_cone: float

    @property
    def cone_radius(self) -> float:
        return self.t * np.cos(self.theta)

    @property
    def kg_radius(self) -> float:
        """Radius implied by the Klein-Gordon speed ``sqrt(cos(theta))``."""
        return self.t * np.sqrt(np.cos(self.theta))

    @property
    def variance_ratio(self) -> float:
        return self.variance / self.t**2

    @property
    def predicted_ratio(self) -> float:
        return 1.0 - np.sin(self.theta)


def _final_dist(theta, t, xi=0.0, zeta=0.0, initial=SYMMETRIC):
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    state = new_localized(*initial, half_width=t)
    traj = evolve(state, su2_coin(xi, theta, zeta), t)
    return probability_distribution(traj.final)


def _report(theta, t, dist) -> ConeReport:
    x = np.abs(dist.sites)
    return ConeReport(
        theta=float(theta),
        t=int(t),
        variance=dist.variance(),
        mass_outside_cone=float(dist.p[x > t * np.cos(theta)].sum()),
        mass_outside_lattice_cone=float(dist.p[x > t].sum()),
    )


def variance_scaling(theta, t, xi=0.0, zeta=0.0, initial=SYMMETRIC) -> ConeReport:
    """Position variance after ``t`` steps of ``su2_coin(xi, theta, zeta)``."""
    return _report(theta, t, _final_dist(theta, t, xi, zeta, initial))


def variance_loglog_slope(theta, times, initial=SYMMETRIC) -> float:
    """Least-squares slope of ``log variance`` against ``log t``."""
    times = np.asarray(times)
    v = [variance_scaling(theta, int(t), initial=initial).variance for t in times]
    return float(np.polyfit(np.log(times), np.log(v), 1)[0])


def cone_leakage(theta, t, initial=SYMMETRIC) -> ConeReport:
    """Probability at ``|j| > t cos(theta)`` after ``t`` steps of ``su2_coin(0, theta, 0)``."""
    return _report(theta, t, _final_dist(theta, t, initial=initial))


def walk_unitary(coin, half_width: int) -> NDArray[np.complex128]:
    """
    Dense one-step operator ``S (B x 1)`` on a ring of ``2T + 1`` sites.

    Basis index is ``2 (j + T) + c``.  The ring closes the lattice so the
    matrix is exactly unitary; callers keep the region of interest far
    enough from the seam that it is never reached.
    """
    n = 2 * half_width + 1
    S = np.zeros((2 * n, 2 * n))
    for i in range(n):
        S[2 * ((i - 1) % n), 2 * i] = 1.0
        S[2 * ((i + 1) % n) + 1, 2 * i + 1] = 1.0
    return S @ np.kron(np.eye(n), np.asarray(coin))


def spectral_norm(A: NDArray, tol: float = 1e-8, max_iter: int = 10_000, seed: int = 0) -> float:
    """
    Largest singular value by power iteration on ``A^H A``.

    Stops when successive estimates differ by less than ``tol`` relative;
    with a slow spectral gap the true error can be several times ``tol``.
    """
    if not np.any(A):
        return 0.0
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(A.shape[1]) + 1j * rng.standard_normal(A.shape[1])
    v /= np.linalg.norm(v)
    sigma = 0.0
    for _ in range(max_iter):
        w = A.conj().T @ (A @ v)
        nw = np.linalg.norm(w)
        if nw == 0.0:
            return 0.0
        v = w / nw
        new = np.sqrt(nw)
        if abs(new - sigma) <= tol * max(new, 1e-300):
            return float(new)
        sigma = new
    return float(sigma)


def trace_norm(A: NDArray) -> float:
    return float(np.linalg.svd(A, compute_uv=False).sum())


@dataclass(frozen=True)
class CommutatorScan:
    theta: float
    t: int
    distances: NDArray[np.int64]
    norms: NDArray[np.float64]
    norm_kind: str = "spectral"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d", "norm"])
        for d, x in zip(self.distances, self.norms):
            w.writerow([int(d), repr(float(x))])
        return buf.getvalue()


def _norm(A, kind):
    if kind == "spectral":
        return spectral_norm(A)
    if kind == "trace":
        return trace_norm(A)
    raise ValueError(f"norm must be 'spectral' or 'trace', got {kind!r}")


def commutator_scan(
    theta: float,
    t: int,
    site_A: int = 0,
    distances=range(1, 31),
    *,
    half_width: int | None = None,
    norm: str = "spectral",
    coin=None,
) -> CommutatorScan:
    """
    ``||[W^-t O_B W^t, O_A]||`` for single-site projectors.

    ``O_A`` projects onto ``site_A`` and ``O_B`` onto ``site_A + d``, both
    tensored with the coin identity.  ``W`` is the ``su2_coin(0, theta, 0)``
    step unless ``coin`` is given.

    Raises
    ------
    CapacityError
        If ``half_width < |site_A| + max(d) + t`` or the matrix dimension
        exceeds 4096.
    """
    distances = np.asarray(list(distances), dtype=int)
    need = abs(site_A) + int(np.max(np.abs(distances), initial=0)) + t
    T = need if half_width is None else half_width
    if T < need:
        raise CapacityError(f"half_width {T} < |site_A| + max distance + t = {need}")
    dim = 2 * (2 * T + 1)
    if dim > MAX_DIM:
        raise CapacityError(f"matrix dimension {dim} exceeds {MAX_DIM}")
    B = su2_coin(0.0, theta, 0.0) if coin is None else np.asarray(coin)
    U = np.linalg.matrix_power(walk_unitary(B, T), t)
    Ud = U.conj().T

    a = [2 * (site_A + T), 2 * (site_A + T) + 1]
    norms = np.empty(len(distances))
    for i, d in enumerate(distances):
        b = [2 * (site_A + d + T), 2 * (site_A + d + T) + 1]
        OB = Ud[:, b] @ U[b, :]
        C = np.zeros_like(OB)
        C[:, a] += OB[:, a]
        C[a, :] -= OB[a, :]
        norms[i] = _norm(C, norm)
    return CommutatorScan(float(theta), int(t), distances, norms, norm)


def position_squared_commutator(theta: float, t: int, half_width: int | None = None,
                                norm: str = "spectral") -> float:
    """``||[W^-t X^2 W^t, X^2]||`` with ``X`` the position operator on the truncated ring."""
    T = 2 * t + 1 if half_width is None else half_width
    if 2 * (2 * T + 1) > MAX_DIM:
        raise CapacityError("matrix dimension exceeds 4096")
    U = np.linalg.matrix_power(walk_unitary(su2_coin(0.0, theta, 0.0), T), t)
    x2 = np.repeat(np.arange(-T, T + 1) ** 2, 2).astype(float)
    Ot = U.conj().T @ (x2[:, None] * U)
    C = Ot * x2[None, :] - x2[:, None] * Ot
    return _norm(C, norm)


@dataclass(frozen=True)
class TailFit:
    """``log norm ~ slope * d + intercept`` on ``t cos(theta) < d <= t``."""

    slope: float
    intercept: float
    n_points: int
    distances: NDArray[np.int64] = field(repr=False)

    @property
    def kappa(self) -> float:
        return -1.0 / self.slope

    def velocity(self, t: int) -> float:
        """Front speed assuming unit prefactor: the fitted line reaches 1 at ``d = v t``."""
        return self.intercept * self.kappa / t

    def summary(self, t: int) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "kappa": self.kappa,
            "v": self.velocity(t),
            "n_points": self.n_points,
        }

    def to_json(self, t: int) -> str:
        return json.dumps(self.summary(t))


def fit_exponential_tail(scan: CommutatorScan, floor: float = 1e-13) -> TailFit:
    """
    Fit the outside-cone tail of a scan.

    Sites of the wrong parity are never connected to ``site_A`` in ``t``
    steps and carry exact zeros; they are dropped together with anything
    below ``floor``.
    """
    d, x = scan.distances, scan.norms
    sel = (d > scan.t * np.cos(scan.theta)) & (d <= scan.t) & (x > floor)
    if sel.sum() < 2:
        raise ValueError("fewer than two nonzero tail points to fit")
    slope, intercept = np.polyfit(d[sel], np.log(x[sel]), 1)
    return TailFit(float(slope), float(intercept), int(sel.sum()), d[sel])
