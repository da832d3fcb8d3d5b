"""
Local invariants of two-qubit gates
===================================

Two gates differ only by single-qubit rotations exactly when their
invariants (G1, G2) agree. Here we tabulate them for a few gates.
"""

import numpy as np

from braident import gates as G

table = {
    "CNOT": G.CNOT,
    "R": G.R,
    "sqrt(SWAP)": G.SQRT_SWAP,
    "R'_0": G.RPRIME0,
    "U_phi(0.3)": G.u_phi(0.3),
    "SWAP": G.SWAP,
}


def fmt(z):
    z = np.round(z, 12) + 0.0
    return f"{z.real:+.4f}{z.imag:+.4f}i"


for name, u in table.items():
    g1, g2 = G.invariants(u)
    print(f"{name:>11}: G1 = {fmt(g1)}, G2 = {fmt(g2)}")

###############################################################################
# CNOT and R share (0, 1), so R is CNOT dressed with local gates.

print(G.locally_equivalent(G.CNOT, G.R))

###############################################################################
# Any member of the R' family sits on the line G2 = 2 G1 - 1, while
# controlled gates sit on G2 = 2 G1 + 1. The two lines never meet.

rng = np.random.default_rng(0)
a, b, c, d = np.exp(1j * rng.uniform(0, 2 * np.pi, 4))
inv = G.invariants(G.rprime(a, b, c, d))
print(inv, G.invariants_rprime_closed_form(a, b, c, d))
print(G.controlled_relation_residual(G.random_unitary(2, rng)))
