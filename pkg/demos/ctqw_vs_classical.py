r"""Continuous-time walks on graphs
================================

The continuous-time quantum walk evolves ``psi(t) = exp(-iHt) psi(0)``
with the graph Laplacian ``H``.  Its classical counterpart
``p(t) = exp(-Ht) p(0)`` uses the same generator without the ``i`` and
relaxes to the uniform distribution.
"""

import numpy as np

from qwrel.ctqw import evolve_classical_ctrw, evolve_ctqw, graph_generator, line_generator

######################################################################
# On a line
# ---------

H = line_generator(1.0, 41)
psi0 = np.zeros(41, dtype=complex)
psi0[20] = 1.0
x = np.arange(41) - 20
for t in (1.0, 5.0, 10.0):
    p = np.abs(evolve_ctqw(H, psi0, t)) ** 2
    q = evolve_classical_ctrw(H, psi0.real, t)
    print(f"t={t:4.1f}  quantum spread {np.sqrt(p @ x**2):.2f}  classical spread {np.sqrt(q @ x**2):.2f}")

######################################################################
# On a cycle
# ----------
#
# Any 0/1 symmetric adjacency matrix works.  The quantum walk never
# settles down; the classical walk converges to ``1/n``.

n = 8
A = np.zeros((n, n), dtype=int)
for i in range(n):
    A[i, (i + 1) % n] = A[(i + 1) % n, i] = 1
C = graph_generator(A, 0.5)
start = np.eye(n)[0]
print("quantum   t=30:", np.round(np.abs(evolve_ctqw(C, start.astype(complex), 30.0)) ** 2, 3))
print("classical t=30:", np.round(evolve_classical_ctrw(C, start, 30.0), 3))
