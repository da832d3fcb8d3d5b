"""Entangling properties of two-qubit gates and unitary braid operators."""

__version__ = "0.1.0"

from .braid import (BraidWord, check_braid_relation, check_yang_baxter,
                    generalized_rprime, generator_rep, to_braid_operator, word_rep)
from .entanglers import (GateClass, ProductBasis, basis_images_min_concurrence, classify,
                       hull_contains_zero, is_perfect_entangler, max_min_basis_search)
from .epower import (entangling_power_closed_form, entangling_power_mc,
                     entangling_power_quadrature)
from .gates import Gate, InvariantPair, catalog_gate, invariants, locally_equivalent, m_matrix
from .states import PureState, catalog_state, concurrence, make_state, measure_qubit
