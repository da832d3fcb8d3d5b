"""
Entangling power
================

The mean linear entropy a gate produces from random product inputs,
computed on a tensor-product quadrature grid and by Monte Carlo.
"""

import numpy as np

from braident import epower as P
from braident import gates as G

for name in ("cnot", "r", "rprime0", "sqrt_swap", "swap"):
    u = G.catalog_gate(name).matrix
    quad = P.entangling_power_quadrature(u)
    mc = P.entangling_power_mc(u, 200_000, seed=42)
    exact = P.entangling_power_closed_form(name).value
    print(f"{name:>9}: quad {quad.value:.12f}  mc {mc.value:.5f} +- {mc.stderr:.1e}  exact {exact:.12f}")

###############################################################################
# Along the R' family the power grows as |1 - Delta|^2 / 18 and peaks at
# Delta = -1, the only perfect entangler in the family.

for t in np.linspace(0, np.pi, 5):
    delta = np.exp(1j * t)
    u = G.rprime(1, 1, 1, delta)
    print(f"arg Delta = {t:.3f}: {P.entangling_power_quadrature(u).value:.6f} vs {abs(1 - delta) ** 2 / 18:.6f}")
