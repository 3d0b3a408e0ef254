"""Exact computations with differential operators on finite-dimensional algebras."""

from .exactla import QQ, Matrix, PrimeField, Subspace, field_from_name
from .algebra import Algebra, Report, ZOO_NAMES, zoo
from .bimodule import Bimodule, character_bimodule, direct_sum, regular, submodule, twisted
from .homspace import HomSpace, LinearMap, act, delta, delta_bar
from .derivations import derivation_lie_algebra, derivation_space, inner_derivation, is_derivation
from .cecalc import CECalculus, ce_d, cochain_space, generated_subalgebra, vector_field_duality, wedge
from .cartan import CartanPair, cartan_pair, check_cartan_relations, hat, two_sided_dual_test
from .specfile import SpecError, SpecFile, parse_spec

__all__ = [
    "QQ", "Matrix", "PrimeField", "Subspace", "field_from_name",
    "Algebra", "Report", "ZOO_NAMES", "zoo",
    "Bimodule", "character_bimodule", "direct_sum", "regular", "submodule", "twisted",
    "HomSpace", "LinearMap", "act", "delta", "delta_bar",
    "derivation_lie_algebra", "derivation_space", "inner_derivation", "is_derivation",
    "CECalculus", "ce_d", "cochain_space", "generated_subalgebra", "vector_field_duality", "wedge",
    "CartanPair", "cartan_pair", "check_cartan_relations", "hat", "two_sided_dual_test",
    "SpecError", "SpecFile", "parse_spec",
]

__version__ = "0.1.0"
