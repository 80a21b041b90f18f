r"""A two-dimensional walk without a coin
======================================

Alternating a shift along ``x`` in the ``|0>, |1>`` basis with a shift
along ``y`` in the rotated ``|up>, |down>`` basis already produces a
two-dimensional walk: the basis change does the job of the coin.
"""

import numpy as np

from qwrel.state import new_localized_2d, norm, probability_distribution
from qwrel.walk2d import shift_x, shift_y, step2d, to_updown

######################################################################
# One step by hand
# ----------------
#
# From ``(|0> + i|1>)/sqrt(2)`` one ``S_y S_x`` lands on the four
# diagonal neighbours with weight ``1/4`` each.

T = 40
s = new_localized_2d(np.pi / 4, np.pi / 2, T)
one = shift_y(shift_x(s))
for j, k in [(-1, 1), (-1, -1), (1, 1), (1, -1)]:
    a = one.amps[j + T, k + T]
    print(f"({j:+d},{k:+d})  up/down coordinates {np.round(to_updown(a), 4)}")

######################################################################
# Many steps
# ----------

for _ in range(T):
    s = step2d(s)
d = probability_distribution(s)
print(f"after {T} steps: norm {norm(s):.15f}, x variance {d.marginal(0).variance():.1f}, "
      f"y variance {d.marginal(1).variance():.1f}")
