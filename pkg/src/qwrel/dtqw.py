"""
One-dimensional discrete-time walk engine.

The conditional shift moves the ``|0>`` amplitude one site left and the
``|1>`` amplitude one site right.  A step is ``W = S (B x 1)`` (coin, then
shift) unless ``order="shift-coin"`` is requested, which applies
``(B x 1) S``.  The two orderings are unitarily conjugate,
``(B x 1) S = (B x 1) [S (B x 1)] (B x 1)^-1``, but do not coincide; the
component recurrences written as

    Psi_L(j, t+1) = cos(theta) Psi_L(j+1, t) - i sin(theta) Psi_R(j-1, t)
    Psi_R(j, t+1) = cos(theta) Psi_R(j-1, t) - i sin(theta) Psi_L(j+1, t)

are the ``shift-coin`` ordering with the symmetric coin.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.typing import NDArray

from .state import CapacityError, WalkState1D

__all__ = [
    "Order",
    "Trajectory1D",
    "apply_coin",
    "shift",
    "inverse_shift",
    "step",
    "inverse_step",
    "evolve",
    "component_recurrence_rhs",
]

Order = Literal["coin-shift", "shift-coin"]
_ORDERS = ("coin-shift", "shift-coin")


def _check_order(order: str) -> None:
    if order not in _ORDERS:
        raise ValueError(f"order must be one of {_ORDERS}, got {order!r}")


EDGE_ATOL = 1e-12


def _shift_amps(amps: NDArray[np.complex128], sign: int) -> NDArray[np.complex128]:
    # sign=+1 is S, sign=-1 is S^-1.  Column 0 moves by -sign, column 1 by +sign.
    # Backward steps leave roundoff residue (~1e-17) where the exact amplitude
    # is zero, so the edge test allows EDGE_ATOL and drops what falls off.
    lead0, lead1 = (0, -1) if sign > 0 else (-1, 0)
    if abs(amps[lead0, 0]) > EDGE_ATOL or abs(amps[lead1, 1]) > EDGE_ATOL:
        raise CapacityError("shift would move amplitude past the lattice edge")
    out = np.zeros_like(amps)
    if sign > 0:
        out[:-1, 0] = amps[1:, 0]
        out[1:, 1] = amps[:-1, 1]
    else:
        out[1:, 0] = amps[:-1, 0]
        out[:-1, 1] = amps[1:, 1]
    return out


def apply_coin(state: WalkState1D, coin: NDArray[np.complex128]) -> WalkState1D:
    """``(B x 1)``: the same coin at every site; time is unchanged."""
    return state.with_amps(state.amps @ np.asarray(coin).T)


def shift(state: WalkState1D) -> WalkState1D:
    """
    Conditional shift: ``a0'(j) = a0(j+1)``, ``a1'(j) = a1(j-1)``.

    Raises
    ------
    CapacityError
        If nonzero amplitude sits on the edge site it would leave through.
    """
    return state.with_amps(_shift_amps(state.amps, +1))


def inverse_shift(state: WalkState1D) -> WalkState1D:
    return state.with_amps(_shift_amps(state.amps, -1))


def step(
    state: WalkState1D, coin: NDArray[np.complex128], order: Order = "coin-shift"
) -> WalkState1D:
    """One walk step; increments ``time`` by one."""
    _check_order(order)
    if order == "coin-shift":
        out = shift(apply_coin(state, coin))
    else:
        out = apply_coin(shift(state), coin)
    return out.with_amps(out.amps, state.time + 1)


def inverse_step(
    state: WalkState1D, coin: NDArray[np.complex128], order: Order = "coin-shift"
) -> WalkState1D:
    """Exact inverse of :func:`step`; decrements ``time`` by one."""
    _check_order(order)
    coin_inv = np.asarray(coin).conj().T
    if order == "coin-shift":
        out = apply_coin(inverse_shift(state), coin_inv)
    else:
        out = inverse_shift(apply_coin(state, coin_inv))
    return out.with_amps(out.amps, state.time - 1)


@dataclass(frozen=True)
class Trajectory1D:
    """
    Snapshots at times ``t0, t0 + 1, ..., t0 + n_steps``.

    ``amps[t]`` is the ``(2T + 1, 2)`` amplitude array after ``t`` steps.
    """

    half_width: int
    amps: NDArray[np.complex128]
    coin: NDArray[np.complex128]
    order: str = "coin-shift"
    t0: int = 0

    @property
    def n_steps(self) -> int:
        return self.amps.shape[0] - 1

    @property
    def sites(self) -> NDArray[np.int64]:
        return np.arange(-self.half_width, self.half_width + 1)

    def __len__(self) -> int:
        return self.amps.shape[0]

    def state(self, t: int) -> WalkState1D:
        return WalkState1D(self.half_width, self.amps[t].copy(), self.t0 + t)

    @property
    def states(self) -> list[WalkState1D]:
        return [self.state(t) for t in range(len(self))]

    @property
    def final(self) -> WalkState1D:
        return self.state(self.n_steps)

    def psi(self, j: int, t: int) -> NDArray[np.complex128]:
        """Spinor ``(Psi_L, Psi_R)`` at site ``j``, snapshot ``t``; zero off-lattice."""
        if abs(j) > self.half_width:
            return np.zeros(2, dtype=np.complex128)
        return self.amps[t, j + self.half_width].copy()

    def probabilities(self) -> NDArray[np.float64]:
        return np.sum(np.abs(self.amps) ** 2, axis=-1)

    def verify(self, atol: float = 1e-12) -> bool:
        """Re-apply the step between every consecutive pair of snapshots."""
        for t in range(self.n_steps):
            nxt = step(self.state(t), self.coin, self.order)
            if np.max(np.abs(nxt.amps - self.amps[t + 1])) > atol:
                return False
        return True

    def amplitudes_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "j", "re0", "im0", "re1", "im1"])
        for t in range(len(self)):
            for j, (a0, a1) in zip(self.sites, self.amps[t]):
                w.writerow([self.t0 + t, int(j), repr(float(a0.real)), repr(float(a0.imag)),
                            repr(float(a1.real)), repr(float(a1.imag))])
        return buf.getvalue()

    def probabilities_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "j", "p"])
        p = self.probabilities()
        for t in range(len(self)):
            for j, pj in zip(self.sites, p[t]):
                w.writerow([self.t0 + t, int(j), repr(float(pj))])
        return buf.getvalue()


def evolve(
    state: WalkState1D,
    coin: NDArray[np.complex128],
    t: int,
    order: Order = "coin-shift",
) -> Trajectory1D:
    """
    Apply ``t`` steps and keep every snapshot.

    Raises
    ------
    CapacityError
        If ``half_width < state.time + t``.
    """
    _check_order(order)
    if t < 0:
        raise ValueError(f"t must be >= 0, got {t}")
    if state.half_width < state.time + t:
        raise CapacityError(
            f"half_width {state.half_width} cannot hold {t} more steps from time {state.time}"
        )
    coin = np.asarray(coin, dtype=np.complex128)
    out = np.empty((t + 1,) + state.amps.shape, dtype=np.complex128)
    out[0] = state.amps
    cur = state
    for k in range(1, t + 1):
        cur = step(cur, coin, order)
        out[k] = cur.amps
    return Trajectory1D(state.half_width, out, coin, order, state.time)


def component_recurrence_rhs(traj: Trajectory1D, j: int, t: int) -> NDArray[np.complex128]:
    """
    Right-hand side of the component recurrence for ``Psi(j, t + 1)``.

    For ``shift-coin`` trajectories this is ``B (Psi_L(j+1, t), Psi_R(j-1, t))``;
    for ``coin-shift`` the coin acts before the move, giving
    ``([B Psi(j+1, t)]_L, [B Psi(j-1, t)]_R)``.
    """
    if not 0 <= t < traj.n_steps:
        raise IndexError(f"t must be in [0, {traj.n_steps}), got {t}")
    if abs(j) > traj.half_width:
        raise IndexError(f"site {j} outside lattice of half-width {traj.half_width}")
    B = traj.coin
    right, left = traj.psi(j + 1, t), traj.psi(j - 1, t)
    if traj.order == "shift-coin":
        return B @ np.array([right[0], left[1]])
    return np.array([(B @ right)[0], (B @ left)[1]])
