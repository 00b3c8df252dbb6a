"""Exact first cohomology of the Lie superalgebra sl(2,1) in odd characteristic.

Coefficients are chi-reduced Kac modules and their simple quotients, over
F_p or the Artin-Schreier extension F_p[t]/(t^p - t - 1).
"""
__version__ = "0.1.0"

from sl21.field import Field, FieldElement, make_artin_schreier, make_prime_field
from sl21.linalg import Subspace, largest_invariant_subspace, nullspace, rank, rref, solve
from sl21.superalgebra import LABELS, SuperAlgebra, bracket, build_sl21
from sl21.modules import (HighestWeight, ModuleRep, PChar, admissible_weights, build_kac,
                          build_simple, radical, validate_rep)
from sl21.cohomology import (Cochain, CochainSpace, H1Result, build_psi, coboundary, cocycle_space,
                             h1_full, h1_weight_reduced, is_cocycle, is_inner)

__all__ = [
    "Field", "FieldElement", "make_prime_field", "make_artin_schreier",
    "Subspace", "rref", "rank", "nullspace", "solve", "largest_invariant_subspace",
    "LABELS", "SuperAlgebra", "bracket", "build_sl21",
    "PChar", "HighestWeight", "ModuleRep", "admissible_weights", "build_kac", "build_simple",
    "radical", "validate_rep",
    "Cochain", "CochainSpace", "H1Result", "coboundary", "cocycle_space", "h1_full",
    "h1_weight_reduced", "is_cocycle", "is_inner", "build_psi",
]
