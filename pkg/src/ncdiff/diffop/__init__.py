"""Notions of differential operator on two-sided modules.

* ``commutative``: order by iterated deltas.
* ``first_order``: the two-sided first-order condition, its derivation
  decomposition, and the splittings on P = A.
* ``filtration``: left filtration (quotient construction and recursive
  form) and the right filtration.
* ``two_sided``: certificates for operators that have both a left and a
  right form, with canonical certificates for compositions of derivations.
"""

from ..homspace import compose
from .commutative import (
    commutative_ladder,
    diff_space_commutative,
    iterated_deltas_vanish,
    order_commutative,
)
from .filtration import (
    Filtration,
    action_violations,
    left_filtration,
    left_filtration_recursive,
    min_order,
    right_filtration,
)
from .first_order import (
    FirstOrderDecomposition,
    NotFirstOrder,
    Splitting,
    first_order_decompose,
    first_order_space,
    is_first_order_ncg,
    split_first_order,
    splitting_gap,
    zero_order_embed,
)
from .two_sided import (
    Form,
    MalformedWitness,
    Term,
    TwoSidedWitness,
    check_two_sided,
    derivation_composition_witness,
    lift,
    zero_witness,
)

__all__ = [
    "Filtration", "FirstOrderDecomposition", "Form", "MalformedWitness", "NotFirstOrder",
    "Splitting", "Term", "TwoSidedWitness", "action_violations", "check_two_sided",
    "commutative_ladder", "compose", "derivation_composition_witness",
    "diff_space_commutative", "first_order_decompose", "first_order_space",
    "is_first_order_ncg", "iterated_deltas_vanish", "left_filtration",
    "left_filtration_recursive", "lift", "min_order", "order_commutative",
    "right_filtration", "split_first_order", "splitting_gap", "zero_order_embed",
    "zero_witness",
]
