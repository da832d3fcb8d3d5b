"""
Which gates are perfect entanglers?
===================================

A gate can map some product state to a maximally entangled one exactly
when the eigenvalues of m(U) surround the origin.
"""

import numpy as np

from braident import entanglers as E
from braident import gates as G

for name in ("identity", "cnot", "swap", "sqrt_swap", "r", "rprime0"):
    u = G.catalog_gate(name).matrix
    ev = E.m_eigenvalues(u)
    print(f"{name:>9}: {E.classify(u)!s:<19} hull distance {E.hull_distance(ev):.3g}")

###############################################################################
# Within the R' family only Delta = -1 entangles perfectly.

for delta in np.exp(1j * np.linspace(0, np.pi, 5)):
    print(f"Delta = {complex(np.round(delta, 3))!s:>12}: {E.is_perfect_entangler(G.rprime(1, 1, 1, delta))}")

###############################################################################
# Most Haar-random gates are perfect entanglers.

rng = np.random.default_rng(1)
hits = sum(E.is_perfect_entangler(G.random_unitary(4, rng)) for _ in range(500))
print(hits / 500)
