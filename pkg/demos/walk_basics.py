r"""A first discrete-time walk
===========================

A two-state particle hops on a line.  Each step tosses a quantum coin
and then moves the ``|0>`` part one site left and the ``|1>`` part one
site right.  Unlike a classical random walk the two paths interfere, so
the distribution spreads ballistically instead of diffusively.
"""

import numpy as np

from qwrel import hadamard, new_localized, su2_coin
from qwrel.ctqw import classical_dtrw_step
from qwrel.dtqw import evolve
from qwrel.state import ProbDist, probability_distribution

######################################################################
# Hadamard walk from ``|0>``
# --------------------------
#
# The Hadamard coin is not symmetric under exchanging the coin states,
# and a walker started in ``|0>`` drifts to the left.

t = 100
traj = evolve(new_localized(0.0, 0.0, t), hadamard(), t)
dist = probability_distribution(traj.final)
print(f"Hadamard, t={t}: mean {dist.mean():.3f}, variance {dist.variance():.1f}")

######################################################################
# A balanced start
# ----------------
#
# Starting from ``(|0> + i|1>)/sqrt(2)`` with the unbiased SU(2) coin
# ``B_{0,45,0}`` gives a mirror-symmetric distribution with two peaks
# near ``|j| = t cos(theta)``.

theta = np.pi / 4
traj = evolve(new_localized(np.pi / 4, np.pi / 2, t), su2_coin(0, theta, 0), t)
p = probability_distribution(traj.final)
peak = abs(p.sites[np.argmax(p.p)])
print(f"symmetric start: mean {p.mean():.2e}, peak at |j|={peak}, t cos(theta)={t * np.cos(theta):.1f}")

######################################################################
# Against the classical walk
# --------------------------
#
# The classical walk has variance ``t``; the quantum one grows like
# ``(1 - sin theta) t^2``.

c = ProbDist((-t, t), np.eye(2 * t + 1)[t])
for _ in range(t):
    c = classical_dtrw_step(c)
print(f"variance: classical {c.variance():.1f}, quantum {p.variance():.1f}, "
      f"(1 - sin theta) t^2 = {(1 - np.sin(theta)) * t**2:.1f}")
