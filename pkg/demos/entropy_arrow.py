r"""Entropy of position measurements
=================================

If we measured the walker's position at time ``t`` we would see a
random outcome drawn from ``p(j, t)``.  The Shannon entropy of that
distribution keeps growing as the walk spreads, which gives the unitary
walk an arrow of time when it is observed.
"""

import numpy as np

from qwrel import new_localized, su2_coin
from qwrel.entropy import CHECKPOINTS, entropy_series

######################################################################
# Three coins
# -----------
#
# Larger ``theta`` means slower spreading and lower entropy, but every
# series increases across the checkpoints.

t_max = 500
for deg in (30, 45, 60):
    s = entropy_series(su2_coin(0, np.deg2rad(deg), 0), new_localized(np.pi / 4, np.pi / 2, t_max), t_max)
    row = "  ".join(f"H({t})={s.at(t):.3f}" for t in CHECKPOINTS)
    print(f"B_0,{deg},0: {row}")

######################################################################
# Measuring along the way
# -----------------------
#
# Collapsing the position every 25 steps restarts the spreading from a
# single site, so the entropy saw-tooths instead of growing like
# ``log t``.

s = entropy_series(su2_coin(0, np.pi / 4, 0), new_localized(np.pi / 4, np.pi / 2, 200), 200,
                   collapse_every=25, seed=3)
print("with collapses:", [round(s.at(t), 3) for t in (24, 25, 26, 100, 200)])
