"""
Braid relations and Yang-Baxter solutions
=========================================

A 4x4 unitary R gives a representation of the braid group when
(R x I)(I x R)(R x I) = (I x R)(R x I)(I x R).
"""

import numpy as np

from braident import braid as B
from braident import gates as G

for name in ("r", "rprime0", "swap", "cnot", "sqrt_swap"):
    ok, res = B.check_braid_relation(G.catalog_gate(name).matrix)
    print(f"{name:>9}: braid relation {ok!s:<5} residual {res:.2e}")

###############################################################################
# Multiplying by the swap turns a braid solution into a Yang-Baxter one.

rhat = B.swap_matrix(2) @ G.R
print(B.check_yang_baxter(rhat), B.check_braid_relation(B.to_braid_operator(rhat)))

###############################################################################
# Represent the braid s1 s2 s1^-1 on four strands, and check that the
# generalized R' works for qutrits.

word = B.BraidWord(4, (1, 2, -1))
rep = B.word_rep(word, G.R)
print(rep.shape, np.allclose(rep.conj().T @ rep, np.eye(16)))

m = np.exp(1j * np.random.default_rng(3).uniform(0, 2 * np.pi, (3, 3)))
print(B.check_braid_relation(B.generalized_rprime(m)))
