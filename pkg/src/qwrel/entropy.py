"""Position measurement and the Shannon entropy of the walker's position."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from .dtqw import step
from .state import ProbDist, WalkState1D, probability_distribution

__all__ = ["EntropySeries", "shannon_entropy", "measure_position", "entropy_series"]

CHECKPOINTS = (10, 50, 100, 200, 500)


def _log(base) -> float:
    if base == 2:
        return np.log(2.0)
    if base == "e" or base == np.e:
        return 1.0
    raise ValueError(f"base must be 2 or 'e', got {base!r}")


def shannon_entropy(dist: ProbDist, base=2) -> float:
    """``-sum p log p`` with ``0 log 0 = 0``."""
    p = np.asarray(dist.p, dtype=float).ravel()
    if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-9:
        raise ValueError("not a probability distribution")
    nz = p[p > 0]
    h = -np.sum(nz * np.log(nz)) / _log(base)
    return float(max(h, 0.0))


def measure_position(state: WalkState1D, rng_seed=None) -> tuple[int, WalkState1D]:
    """
    Projective position measurement.

    Samples ``j`` from the coin-traced distribution and returns the state
    collapsed onto site ``j`` with its coin spinor renormalized.  The coin
    spinor survives; only the position superposition is destroyed.
    """
    dist = probability_distribution(state)
    rng = np.random.default_rng(rng_seed)
    p = dist.p / dist.p.sum()
    idx = int(rng.choice(p.size, p=p))
    j = idx - state.half_width
    amps = np.zeros_like(state.amps)
    amps[idx] = state.amps[idx] / np.linalg.norm(state.amps[idx])
    return j, state.with_amps(amps)


@dataclass(frozen=True)
class EntropySeries:
    coin: str
    times: NDArray[np.int64]
    H: NDArray[np.float64]
    base: object = 2

    def at(self, t: int) -> float:
        return float(self.H[int(t) - int(self.times[0])])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "H"])
        for t, h in zip(self.times, self.H):
            w.writerow([int(t), repr(float(h))])
        return buf.getvalue()


def entropy_series(
    coin: NDArray[np.complex128],
    initial: WalkState1D,
    t_max: int,
    base=2,
    *,
    collapse_every: int | None = None,
    seed=None,
    label: str = "",
) -> EntropySeries:
    """
    Position entropy ``H(t)`` for ``t = 1 .. t_max``.

    By default the distribution is read off the unitary evolution at each
    step without disturbing it.  With ``collapse_every=k`` the state is
    projectively measured after every ``k``-th step and the walk continues
    from the collapsed state; ``seed`` fixes the measurement record.
    """
    if t_max < 1:
        raise ValueError(f"t_max must be >= 1, got {t_max}")
    if collapse_every is not None and collapse_every < 1:
        raise ValueError("collapse_every must be >= 1")
    _log(base)
    rng = np.random.default_rng(seed)
    H = np.empty(t_max)
    cur = initial
    for t in range(1, t_max + 1):
        cur = step(cur, coin)
        H[t - 1] = shannon_entropy(probability_distribution(cur), base)
        if collapse_every is not None and t % collapse_every == 0:
            _, cur = measure_position(cur, rng)
    return EntropySeries(label, np.arange(1, t_max + 1), H, base)
