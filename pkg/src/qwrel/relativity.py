"""
Executable Klein-Gordon, Schroedinger and Dirac forms of the 1D walk.

All checks run on a :class:`~qwrel.dtqw.Trajectory1D` driven by the
symmetric coin ``[[cos, -i sin], [-i sin, cos]]`` and evaluate lattice
identities with unit time and space steps:

    grad2_t Psi(j, t) = Psi(j, t+1) - 2 Psi(j, t) + Psi(j, t-1)
    grad2_j Psi(j, t) = Psi(j+1, t) - 2 Psi(j, t) + Psi(j-1, t)

Amplitudes off the lattice are zero by construction (the walk never reaches
the edge), so stencils are evaluated on a zero-padded copy and every lattice
site is checked.  hbar = 1 throughout.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .coins import IDENTITY, SIGMA_X, SIGMA_Y, SIGMA_Z, symmetric_coin_angle
from .dtqw import Trajectory1D

__all__ = [
    "SIGMA_1",
    "SIGMA_2",
    "SIGMA_3",
    "RelativisticParams",
    "ResidualReport",
    "SchrodingerSplit",
    "DiracReport",
    "effective_params",
    "decouple_check",
    "kg_residual",
    "schrodinger_split",
    "hamiltonian_HR",
    "dirac_residual",
]

SIGMA_1, SIGMA_2, SIGMA_3 = SIGMA_X, SIGMA_Y, SIGMA_Z
_COMPONENTS = {"L": 0, "R": 1}


@dataclass(frozen=True)
class RelativisticParams:
    theta: float
    c_eff: float
    mu: float
    mass: float


def effective_params(theta: float) -> RelativisticParams:
    """
    Speed ``sqrt(cos)``, ``mu = sqrt(2 (sec - 1))`` and mass ``sqrt(2 (sec - 1) / cos)``.

    Raises
    ------
    ValueError
        Outside ``0 <= theta < pi/2``.
    """
    if not 0.0 <= theta < np.pi / 2:
        raise ValueError(f"theta must lie in [0, pi/2), got {theta!r}")
    c = np.cos(theta)
    sec_m1 = 1.0 / c - 1.0
    return RelativisticParams(
        theta=float(theta),
        c_eff=float(np.sqrt(c)),
        mu=float(np.sqrt(2.0 * sec_m1)),
        mass=float(np.sqrt(2.0 * sec_m1 / c)),
    )


@dataclass(frozen=True)
class ResidualReport:
    """
    Pointwise residuals of a named identity.

    ``values`` has shape ``(len(times), len(sites), n_components)``.
    """

    identity: str
    values: NDArray[np.complex128]
    times: NDArray[np.int64]
    sites: NDArray[np.int64]

    @property
    def magnitudes(self) -> NDArray[np.float64]:
        """Largest component modulus at each ``(t, j)``."""
        if self.values.size == 0:
            return np.zeros(self.values.shape[:2])
        return np.max(np.abs(self.values), axis=-1)

    @property
    def n_points(self) -> int:
        return int(self.values.shape[0] * self.values.shape[1])

    @property
    def max_abs(self) -> float:
        m = self.magnitudes
        return float(m.max()) if m.size else 0.0

    @property
    def mean_abs(self) -> float:
        m = self.magnitudes
        return float(m.mean()) if m.size else 0.0

    def passed(self, tol: float) -> bool:
        return self.max_abs <= tol

    def summary(self) -> dict:
        return {
            "identity": self.identity,
            "max_abs": self.max_abs,
            "mean_abs": self.mean_abs,
            "n_points": self.n_points,
        }

    def to_json(self) -> str:
        return json.dumps(self.summary())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "j", "residual"])
        m = self.magnitudes
        for a, t in enumerate(self.times):
            for b, j in enumerate(self.sites):
                w.writerow([int(t), int(j), repr(float(m[a, b]))])
        return buf.getvalue()


def _theta(traj: Trajectory1D) -> float:
    return symmetric_coin_angle(traj.coin)


def _padded(traj: Trajectory1D) -> NDArray[np.complex128]:
    # one zero site on each side: index j + T + 1
    return np.pad(traj.amps, ((0, 0), (1, 1), (0, 0)))


def _interior_times(traj: Trajectory1D) -> NDArray[np.int64]:
    if len(traj) < 3:
        raise ValueError("trajectory needs at least 3 snapshots (t-1, t, t+1)")
    return traj.t0 + np.arange(1, traj.n_steps)


def decouple_check(traj: Trajectory1D) -> ResidualReport:
    """
    Residual of ``Psi(j,t+1) + Psi(j,t-1) - cos(theta) [Psi(j+1,t) + Psi(j-1,t)]``
    for both components at every site and every interior time.
    """
    c = np.cos(_theta(traj))
    times = _interior_times(traj)
    P = _padded(traj)
    r = P[2:, 1:-1] + P[:-2, 1:-1] - c * (P[1:-1, 2:] + P[1:-1, :-2])
    return ResidualReport("decoupled-recurrence", r, times, traj.sites)


def kg_residual(traj: Trajectory1D) -> ResidualReport:
    """
    Residual of the lattice Klein-Gordon equation
    ``cos(theta) grad2_j Psi - grad2_t Psi - 2 (1 - cos(theta)) Psi`` for both components.
    """
    c = np.cos(_theta(traj))
    times = _interior_times(traj)
    P = _padded(traj)
    psi = P[1:-1, 1:-1]
    d2t = P[2:, 1:-1] - 2.0 * psi + P[:-2, 1:-1]
    d2j = P[1:-1, 2:] - 2.0 * psi + P[1:-1, :-2]
    r = c * d2j - d2t - 2.0 * (1.0 - c) * psi
    return ResidualReport("klein-gordon", r, times, traj.sites)


@dataclass(frozen=True)
class SchrodingerSplit:
    """
    ``Psi = phi + chi`` with ``i dPsi/dt = sqrt(2 (1 - cos)) (phi - chi)``.

    ``phi`` and ``chi`` have shape ``(len(times), n_sites)``; the time
    derivative of ``Psi`` at ``t`` is the forward difference
    ``Psi(t+1) - Psi(t)``.  The coupled equations are evaluated with the
    backward difference, so inner and outer differences compose to
    ``grad2_t`` exactly.
    """

    component: str
    theta: float
    times: NDArray[np.int64]
    sites: NDArray[np.int64]
    phi: NDArray[np.complex128]
    chi: NDArray[np.complex128]
    reconstruction: ResidualReport
    phi_equation: ResidualReport
    chi_equation: ResidualReport
    recombined: ResidualReport


def schrodinger_split(
    traj: Trajectory1D, component: str = "R"
) -> tuple[SchrodingerSplit, ResidualReport]:
    """
    Split one walk component into the two first-order fields and check them.

    Returns
    -------
    (SchrodingerSplit, ResidualReport)
        The split, and the pointwise difference between the recombined
        coupled-equation residual ``m_tilde (r_phi - r_chi)`` and the
        Klein-Gordon residual on the same points.

    Raises
    ------
    ValueError
        For ``theta = 0`` (the split prefactor vanishes), an unknown
        component, or a trajectory shorter than 3 snapshots.
    """
    if component not in _COMPONENTS:
        raise ValueError(f"component must be 'L' or 'R', got {component!r}")
    theta = _theta(traj)
    c = np.cos(theta)
    if np.isclose(c, 1.0, rtol=0.0, atol=1e-15):
        raise ValueError("theta = 0: the splitting prefactor sqrt(2(1 - cos)) vanishes")
    times = _interior_times(traj)
    mt = np.sqrt(2.0 * (1.0 - c))
    mass = np.sqrt(2.0 * (1.0 / c - 1.0) / c)

    P = np.pad(traj.amps[:, :, _COMPONENTS[component]], ((0, 0), (1, 1)))
    psi = P[:, 1:-1]
    dpsi = psi[1:] - psi[:-1]
    phi = 0.5 * (psi[:-1] + 1j * dpsi / mt)
    chi = 0.5 * (psi[:-1] - 1j * dpsi / mt)

    d2j = P[1:-1, 2:] - 2.0 * P[1:-1, 1:-1] + P[1:-1, :-2]
    kin = d2j / (2.0 * mass)
    r_phi = 1j * (phi[1:] - phi[:-1]) - (-kin + mt * phi[1:])
    r_chi = 1j * (chi[1:] - chi[:-1]) - (kin - mt * chi[1:])
    recombined = mt * (r_phi - r_chi)

    kg = kg_residual(traj).values[:, :, _COMPONENTS[component]]
    all_t = traj.t0 + np.arange(traj.n_steps)
    sites = traj.sites

    def rep(name, v, ts):
        return ResidualReport(name, v[:, :, None], ts, sites)

    split = SchrodingerSplit(
        component=component,
        theta=float(theta),
        times=all_t,
        sites=sites,
        phi=phi,
        chi=chi,
        reconstruction=rep("phi+chi-psi", phi + chi - psi[:-1], all_t),
        phi_equation=rep("phi-equation", r_phi, times),
        chi_equation=rep("chi-equation", r_chi, times),
        recombined=rep("recombined-klein-gordon", recombined, times),
    )
    return split, rep("recombination-minus-klein-gordon", recombined - kg, times)


def hamiltonian_HR(theta: float, p: float) -> NDArray[np.complex128]:
    """
    ``(s3 + i s2) p^2 sqrt(cos) / (2 sqrt(2 (sec - 1))) + s3 sqrt(2 (1 - cos))``.

    Not Hermitian: ``s3 + i s2 = [[1, 1], [-1, -1]]``.
    """
    if not 0.0 < theta < np.pi / 2:
        raise ValueError(f"theta must lie in (0, pi/2), got {theta!r}")
    c = np.cos(theta)
    kinetic = p**2 * np.sqrt(c) / (2.0 * np.sqrt(2.0 * (1.0 / c - 1.0)))
    return (SIGMA_3 + 1j * SIGMA_2) * kinetic + SIGMA_3 * np.sqrt(2.0 * (1.0 - c))


@dataclass(frozen=True)
class DiracReport:
    """
    ``exact_step`` and ``difference_form`` are exact lattice identities;
    ``massless`` is only computed at ``theta = 0``.  ``differential_form``
    replaces the one-sided differences with central ones and is a
    diagnostic with no pass threshold.
    """

    theta: float
    exact_step: ResidualReport
    difference_form: ResidualReport
    massless: ResidualReport | None
    differential_form: ResidualReport

    def passed(self, tol: float) -> bool:
        checks = [self.exact_step, self.difference_form]
        if self.massless is not None:
            checks.append(self.massless)
        return all(r.passed(tol) for r in checks)


def dirac_residual(traj: Trajectory1D) -> DiracReport:
    """
    Coupled (Dirac-like) form of the walk.

    ``Psi(j, t+1) = [cos 1 + sin s3 s2] (Psi_L(j+1, t), Psi_R(j-1, t))``,
    which holds for ``shift-coin`` trajectories.

    Raises
    ------
    ValueError
        If the coin is not symmetric or the trajectory is ``coin-shift``
        ordered (the identity is then false; see :mod:`qwrel.dtqw`).
    """
    theta = _theta(traj)
    if traj.order != "shift-coin":
        raise ValueError(
            "the exact Dirac step identity holds for shift-coin trajectories; "
            "evolve with order='shift-coin'"
        )
    c, s = np.cos(theta), np.sin(theta)
    M = c * IDENTITY + s * (SIGMA_3 @ SIGMA_2)
    P = _padded(traj)
    now, nxt = P[:-1, 1:-1], P[1:, 1:-1]
    moved = np.stack([P[:-1, 2:, 0], P[:-1, :-2, 1]], axis=-1)
    times = traj.t0 + np.arange(traj.n_steps)
    sites = traj.sites

    exact = nxt - moved @ M.T
    grad = moved - now  # (L(j+1) - L(j), R(j-1) - R(j))
    diff_form = (nxt - now) - (grad @ M.T - now + now @ M.T)

    massless = None
    if s == 0.0:
        dL = (nxt[..., 0] - now[..., 0]) - (P[:-1, 2:, 0] - now[..., 0])
        dR = (nxt[..., 1] - now[..., 1]) + (now[..., 1] - P[:-1, :-2, 1])
        massless = ResidualReport("massless-dirac", np.stack([dL, dR], -1), times, sites)

    inner = _interior_times(traj)
    A = c * SIGMA_3 - s * SIGMA_2
    dt = 0.5 * (P[2:, 1:-1] - P[:-2, 1:-1])
    dj = 0.5 * (P[1:-1, 2:] - P[1:-1, :-2])
    differential = dt - (dj @ A.T + P[1:-1, 1:-1] @ (M - IDENTITY).T)

    return DiracReport(
        theta=float(theta),
        exact_step=ResidualReport("dirac-exact-step", exact, times, sites),
        difference_form=ResidualReport("dirac-difference-form", diff_form, times, sites),
        massless=massless,
        differential_form=ResidualReport("dirac-differential-form", differential, inner, sites),
    )
