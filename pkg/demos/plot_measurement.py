"""
Measuring one qubit of a three-qubit state
==========================================

Measuring the first qubit of GHZ leaves a product state, W leaves a Bell
state with probability 2/3, and Phi (GHZ in the Hadamard basis) always
leaves a Bell state.
"""

from braident import gates as G
from braident import states as S

phi = S.catalog_state("phi")
print(S.fidelity(S.apply_local(phi, G.H, G.H, G.H), S.catalog_state("ghz")))

for name in ("ghz", "w", "phi"):
    for rec in S.measure_qubit(S.catalog_state(name), 1):
        print(f"{name:>3} outcome {rec.outcome}: p = {rec.probability:.4f}, "
              f"residual C = {S.concurrence(rec.residual):.4f}")

###############################################################################
# CNOT after a Hadamard on the control makes a Bell state.

s = S.apply_gate(S.apply_local(S.basis_state(2, 0), G.H, G.IDENTITY[:2, :2]), G.CNOT, (1, 2))
print(S.concurrence(s), S.schmidt_lambdas(S.concurrence(s)))
