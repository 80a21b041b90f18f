"""
Lattice-indexed walk states and the coin-traced position distribution.

A 1D state stores an ``(2T + 1, 2)`` complex array: row ``j + T`` holds the
coin spinor ``(a0, a1)`` at lattice site ``j``.  Column 0 is the left-mover
``Psi_L`` (basis ``|0>``), column 1 the right-mover ``Psi_R`` (basis ``|1>``).
A 2D state stores ``(2T + 1, 2T + 1, 2)`` indexed by ``(j + T, k + T)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

__all__ = [
    "CapacityError",
    "WalkState1D",
    "WalkState2D",
    "ProbDist",
    "new_localized",
    "new_localized_2d",
    "norm",
    "probability_distribution",
]

NORM_TOL = 1e-6


class CapacityError(ValueError):
    """Raised when an operation would push amplitude off the preallocated lattice."""


def _spinor(delta: float, eta: float) -> NDArray[np.complex128]:
    return np.array(
        [np.cos(delta), np.exp(1j * eta) * np.sin(delta)], dtype=np.complex128
    )


@dataclass(frozen=True)
class WalkState1D:
    half_width: int
    amps: NDArray[np.complex128]
    time: int = 0

    def __post_init__(self):
        n = 2 * self.half_width + 1
        if self.amps.shape != (n, 2):
            raise ValueError(
                f"amps must have shape ({n}, 2) for half_width={self.half_width}, "
                f"got {self.amps.shape}"
            )

    @property
    def sites(self) -> NDArray[np.int64]:
        return np.arange(-self.half_width, self.half_width + 1)

    def spinor(self, j: int) -> NDArray[np.complex128]:
        """Coin spinor ``(a0(j), a1(j))``; zero outside the lattice."""
        if abs(j) > self.half_width:
            return np.zeros(2, dtype=np.complex128)
        return self.amps[j + self.half_width].copy()

    def with_amps(self, amps: NDArray[np.complex128], time: int | None = None) -> WalkState1D:
        return WalkState1D(self.half_width, amps, self.time if time is None else time)


@dataclass(frozen=True)
class WalkState2D:
    half_width: int
    amps: NDArray[np.complex128]
    time: int = 0

    def __post_init__(self):
        n = 2 * self.half_width + 1
        if self.amps.shape != (n, n, 2):
            raise ValueError(
                f"amps must have shape ({n}, {n}, 2) for half_width={self.half_width}, "
                f"got {self.amps.shape}"
            )

    @property
    def sites(self) -> NDArray[np.int64]:
        return np.arange(-self.half_width, self.half_width + 1)

    def spinor(self, j: int, k: int) -> NDArray[np.complex128]:
        T = self.half_width
        if abs(j) > T or abs(k) > T:
            return np.zeros(2, dtype=np.complex128)
        return self.amps[j + T, k + T].copy()

    def with_amps(self, amps: NDArray[np.complex128], time: int | None = None) -> WalkState2D:
        return WalkState2D(self.half_width, amps, self.time if time is None else time)


@dataclass(frozen=True)
class ProbDist:
    """
    Position distribution over a 1D or 2D lattice.

    ``support`` is ``(lo, hi)`` in 1D and ``((jlo, jhi), (klo, khi))`` in 2D,
    both inclusive; ``p`` is indexed from ``lo``.
    """

    support: tuple
    p: NDArray[np.float64] = field(repr=False)

    @property
    def ndim(self) -> int:
        return self.p.ndim

    @property
    def sites(self) -> NDArray[np.int64]:
        if self.ndim != 1:
            raise ValueError("sites is defined for 1D distributions only")
        lo, hi = self.support
        return np.arange(lo, hi + 1)

    def at(self, j: int, k: int | None = None) -> float:
        if self.ndim == 1:
            lo, hi = self.support
            return float(self.p[j - lo]) if lo <= j <= hi else 0.0
        (jlo, jhi), (klo, khi) = self.support
        if jlo <= j <= jhi and klo <= k <= khi:
            return float(self.p[j - jlo, k - klo])
        return 0.0

    def mean(self) -> float:
        return float(np.dot(self.sites, self.p))

    def variance(self) -> float:
        x = self.sites.astype(float)
        mu = np.dot(x, self.p)
        return float(np.dot((x - mu) ** 2, self.p))

    def marginal(self, axis: int) -> ProbDist:
        """Marginal of a 2D distribution onto axis 0 (``j``) or 1 (``k``)."""
        if self.ndim != 2:
            raise ValueError("marginal requires a 2D distribution")
        return ProbDist(tuple(self.support[axis]), self.p.sum(axis=1 - axis))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.ndim == 1:
            w.writerow(["j", "p"])
            for j, pj in zip(self.sites, self.p):
                w.writerow([int(j), repr(float(pj))])
        else:
            (jlo, jhi), (klo, khi) = self.support
            w.writerow(["j", "k", "p"])
            for a, j in enumerate(range(jlo, jhi + 1)):
                for b, k in enumerate(range(klo, khi + 1)):
                    w.writerow([j, k, repr(float(self.p[a, b]))])
        return buf.getvalue()

    def to_json(self) -> str:
        if self.ndim == 1:
            support = [int(s) for s in self.support]
        else:
            support = [[int(s) for s in ax] for ax in self.support]
        return json.dumps({"support": support, "p": self.p.tolist()})

    @classmethod
    def from_json(cls, text: str) -> ProbDist:
        d = json.loads(text)
        p = np.asarray(d["p"], dtype=float)
        if p.ndim == 1:
            return cls(tuple(d["support"]), p)
        return cls(tuple(tuple(ax) for ax in d["support"]), p)


def new_localized(delta: float, eta: float, half_width: int) -> WalkState1D:
    """
    Particle at the origin in coin state ``cos(delta)|0> + e^{i eta} sin(delta)|1>``.

    ``delta = pi/4, eta = pi/2`` gives the symmetric state ``(|0> + i|1>)/sqrt(2)``.
    """
    if half_width < 0:
        raise ValueError(f"half_width must be >= 0, got {half_width}")
    amps = np.zeros((2 * half_width + 1, 2), dtype=np.complex128)
    amps[half_width] = _spinor(delta, eta)
    return WalkState1D(half_width, amps, 0)


def new_localized_2d(delta: float, eta: float, half_width: int) -> WalkState2D:
    if half_width < 0:
        raise ValueError(f"half_width must be >= 0, got {half_width}")
    n = 2 * half_width + 1
    amps = np.zeros((n, n, 2), dtype=np.complex128)
    amps[half_width, half_width] = _spinor(delta, eta)
    return WalkState2D(half_width, amps, 0)


def norm(state: WalkState1D | WalkState2D) -> float:
    return float(np.sqrt(np.sum(np.abs(state.amps) ** 2)))


def probability_distribution(state: WalkState1D | WalkState2D) -> ProbDist:
    """Trace out the coin: ``p(j) = |a0(j)|^2 + |a1(j)|^2``."""
    n = norm(state)
    if abs(n - 1.0) > NORM_TOL:
        raise ValueError(f"state is not normalized (norm = {n!r})")
    p = np.sum(np.abs(state.amps) ** 2, axis=-1)
    T = state.half_width
    if isinstance(state, WalkState2D):
        return ProbDist(((-T, T), (-T, T)), p)
    return ProbDist((-T, T), p)
