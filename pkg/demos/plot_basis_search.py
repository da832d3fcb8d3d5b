"""
Maximally entangling a whole product basis
==========================================

CNOT can send an orthonormal product basis to four maximally entangled
states. sqrt(SWAP) is a perfect entangler too, yet for any product basis
some image keeps concurrence at most 1/2.
"""

import numpy as np

from braident import entanglers as E
from braident import gates as G

for name, u in [("cnot", G.CNOT), ("rprime0", G.RPRIME0), ("sqrt_swap", G.SQRT_SWAP)]:
    res = E.max_min_basis_search(u, restarts=20, seed=7)
    print(f"{name:>9}: best min concurrence {res.value:.8f} (restart {res.restart})")

###############################################################################
# The reason: for any one-qubit states (a, b) and (c, d) the two image
# concurrences add up to exactly 1.

rng = np.random.default_rng(5)
t = rng.uniform(0, 2 * np.pi, 4)
a, b = np.cos(t[0] / 2), np.sin(t[0] / 2) * np.exp(1j * t[1])
c, d = np.cos(t[2] / 2), np.sin(t[2] / 2) * np.exp(1j * t[3])
print(E.sqrt_swap_identity_residual(a, b, c, d))
