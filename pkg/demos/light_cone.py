r"""The walk's light cone
======================

Amplitude cannot travel further than one site per step, so the lattice
has a hard light cone ``|j| <= t``.  Almost all of the probability sits
inside the narrower cone ``|j| <= t cos(theta)``, and operator
commutators decay exponentially outside it, as in a Lieb-Robinson bound.
"""

import numpy as np

from qwrel.lightcone import commutator_scan, cone_leakage, fit_exponential_tail, variance_loglog_slope

######################################################################
# Mass outside the cone
# ---------------------
#
# Nothing ever leaves ``|j| <= t``.  The few percent beyond
# ``t cos(theta)`` come from the peak's tail; the amount oscillates
# with ``t`` because the cone edge moves by a fraction of a site per step.

theta = np.pi / 4
for t in (20, 50, 100, 200):
    r = cone_leakage(theta, t)
    print(f"t={t:3d}  outside t cos={r.mass_outside_cone:.4f}  outside t={r.mass_outside_lattice_cone}  "
          f"var/t^2={r.variance_ratio:.4f} (1 - sin = {r.predicted_ratio:.4f})")
print("log-log slope of the variance:", round(variance_loglog_slope(theta, range(50, 401, 10)), 4))

######################################################################
# Commutator scan
# ---------------
#
# ``||[W^-t O_B W^t, O_A]||`` for site projectors a distance ``d``
# apart.  Odd ``d`` vanish by parity, ``d > t`` vanish exactly, and
# between ``t cos(theta)`` and ``t`` the norm falls off exponentially.

scan = commutator_scan(theta, 20)
for d, x in zip(scan.distances, scan.norms):
    if d % 2 == 0 and d <= 24:
        print(f"d={d:2d}  {x:.3e}")
fit = fit_exponential_tail(scan)
print(f"tail: slope {fit.slope:.3f}, kappa {fit.kappa:.3f}, front speed {fit.velocity(20):.3f}")
