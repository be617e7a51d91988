"""Generalized Weyl algebras, twisted traces, and short star-products."""

from .algebra import (AlgebraParams, Algebra, DefiningPoly, GWAElement,
                      element_mul, filtration_degree, make_algebra,
                      relation_residuals)
from .bimodule import (BimoduleSpec, basis, compute_Rj, membership,
                       morita_mul, shift_parameters)
from .conjugation import (ConjugationData, apply_phi, build_conjugation,
                          compute_Sj, reverse_conjugation, rs_product_profile)
from .poly import BalancedLaurent, Poly, from_roots, shift_arg, star_reflect

__all__ = [
    "AlgebraParams", "Algebra", "DefiningPoly", "GWAElement",
    "element_mul", "filtration_degree", "make_algebra", "relation_residuals",
    "BimoduleSpec", "basis", "compute_Rj", "membership", "morita_mul",
    "shift_parameters",
    "ConjugationData", "apply_phi", "build_conjugation", "compute_Sj",
    "reverse_conjugation", "rs_product_profile",
    "BalancedLaurent", "Poly", "from_roots", "shift_arg", "star_reflect",
]

__version__ = "0.1.0"
