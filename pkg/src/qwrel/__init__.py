"""Discrete- and continuous-time quantum walks and their relativistic limits."""

from .coins import hadamard, su2_coin, symmetric_coin, u2_coin
from .dtqw import Trajectory1D, evolve, inverse_step, shift, step
from .state import (
    CapacityError,
    ProbDist,
    WalkState1D,
    WalkState2D,
    new_localized,
    new_localized_2d,
    norm,
    probability_distribution,
)

__all__ = [
    "CapacityError",
    "ProbDist",
    "Trajectory1D",
    "WalkState1D",
    "WalkState2D",
    "evolve",
    "hadamard",
    "inverse_step",
    "new_localized",
    "new_localized_2d",
    "norm",
    "probability_distribution",
    "shift",
    "step",
    "su2_coin",
    "symmetric_coin",
    "u2_coin",
]
