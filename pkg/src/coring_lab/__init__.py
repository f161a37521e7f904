"""Exact computations with corings over finite-dimensional algebras.

Corings, comodules and entwining structures are given by structure constants
over Q (or GF(p) where it makes sense); every decision is made by exact
linear algebra and comes with an explicit witness or a report of violations.
"""
from .algebra import (Algebra, dual_numbers, field_extension, group_algebra,
                      matrix_algebra, product_algebra, rationals,
                      separability_idempotent, upper_triangular)
from .bimodule import Bimodule, TensorPresentation, check_bimodule
from .comodule import (Bicomodule, Comodule, bicomodule_to_comodule,
                       check_bicomodule, check_comodule, comodule_to_bicomodule,
                       cotensor, round_trip_report)
from .coring import (Coring, base_change, check_coring, comatrix_coalgebra,
                     dual_coalgebra, grouplike_coalgebra, opposite_coring,
                     sweedler_coring, tensor_coring, trivial_coring)
from .cosep import Cointegral, check_cointegral, coseparability
from .duals import dual_radical, dual_ring, is_semisimple_coring, psi
from .entwine import Entwining, check_entwining, entwined_coring, tensor_entwining
from .exactlin import GF, QQ, Matrix, Subspace
from .report import Report
from .theorem import main_theorem_report

__version__ = "0.1.0"

__all__ = [
    "Algebra", "Bicomodule", "Bimodule", "Cointegral", "Comodule", "Coring",
    "Entwining", "GF", "Matrix", "QQ", "Report", "Subspace", "TensorPresentation",
    "base_change", "bicomodule_to_comodule", "check_bicomodule", "check_bimodule",
    "check_cointegral", "check_comodule", "check_coring", "check_entwining",
    "comatrix_coalgebra", "comodule_to_bicomodule", "coseparability", "cotensor",
    "dual_coalgebra", "dual_numbers", "dual_radical", "dual_ring", "entwined_coring",
    "field_extension", "group_algebra", "grouplike_coalgebra", "is_semisimple_coring",
    "main_theorem_report", "matrix_algebra", "opposite_coring", "product_algebra",
    "psi", "rationals", "round_trip_report", "separability_idempotent",
    "sweedler_coring", "tensor_coring", "tensor_entwining", "trivial_coring",
    "upper_triangular",
]
