"""
Two-dimensional walk of a two-state particle.

``S_x`` moves ``|0>`` to ``j - 1`` and ``|1>`` to ``j + 1``.  ``S_y`` acts
in the ``|up>, |down>`` basis related to the coin basis by

    |0> = (|up> + |down>) / 2,     |1> = (|up> - |down>) / 2,
    |up> = |0> + |1>,              |down> = |0> - |1>.

so the ``up``/``down`` coordinates of ``a0|0> + a1|1>`` are
``((a0 + a1)/2, (a0 - a1)/2)``.  ``S_y`` moves the ``up`` coordinate to
``k + 1`` and ``down`` to ``k - 1``, which reproduces the symmetric-state
evolution ``S_y S_x (|0> + i|1>)/sqrt(2)`` term by term.  Conjugating a
shift by this coordinate map equals conjugating it by the Hadamard, so
``S_y`` is unitary even though ``|up>`` and ``|down>`` are not unit vectors.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import NDArray

from .state import CapacityError, WalkState2D

__all__ = ["TO_UPDOWN", "FROM_UPDOWN", "to_updown", "from_updown", "shift_x", "shift_y", "step2d"]

TO_UPDOWN = 0.5 * np.array([[1, 1], [1, -1]], dtype=np.complex128)
FROM_UPDOWN = np.array([[1, 1], [1, -1]], dtype=np.complex128)


def to_updown(amps: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """``(a0, a1) -> (b_up, b_down)`` on the last axis."""
    return amps @ TO_UPDOWN.T


def from_updown(amps: NDArray[np.complex128]) -> NDArray[np.complex128]:
    return amps @ FROM_UPDOWN.T


def _move(x: NDArray, axis: int, by: int) -> NDArray:
    """Move a 2D field by ``by`` = +/-1 along ``axis``; refuses to drop mass."""
    edge = [slice(None), slice(None)]
    edge[axis] = -1 if by > 0 else 0
    if np.any(x[tuple(edge)] != 0):
        raise CapacityError("shift would move amplitude past the lattice edge")
    return np.roll(x, by, axis=axis)


def shift_x(state: WalkState2D) -> WalkState2D:
    a = state.amps
    out = np.stack([_move(a[..., 0], 0, -1), _move(a[..., 1], 0, +1)], axis=-1)
    return state.with_amps(out)


def shift_y(state: WalkState2D) -> WalkState2D:
    b = to_updown(state.amps)
    moved = np.stack([_move(b[..., 0], 1, +1), _move(b[..., 1], 1, -1)], axis=-1)
    return state.with_amps(from_updown(moved))


def _coin(state: WalkState2D, coin) -> WalkState2D:
    return state.with_amps(state.amps @ np.asarray(coin).T)


def step2d(state: WalkState2D, coin=None, *, y_shift: bool = True) -> WalkState2D:
    """
    ``[coin] S_x [coin] S_y``, applied left to right; ``time += 1``.

    ``y_shift=False`` skips ``S_y`` (the second coin is still applied).
    """
    cur = state
    if coin is not None:
        cur = _coin(cur, coin)
    cur = shift_x(cur)
    if coin is not None:
        cur = _coin(cur, coin)
    if y_shift:
        cur = shift_y(cur)
    return cur.with_amps(cur.amps, state.time + 1)
