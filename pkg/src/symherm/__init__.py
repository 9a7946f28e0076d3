"""Exact symmetric Hermite interpolation of symmetric polynomials."""

from __future__ import annotations

from .errors import InexactDivisionError, ParseError, PreconditionError, SymHermError, VariableSetMismatch
from .interpolation import (
    METHODS,
    BasisElement,
    CoordinateVector,
    applicable_methods,
    coordinates,
    derivative_evaluate,
    epsilon_sign,
    hermite_basis,
    hermite_interpolant,
    hermite_signs,
)
from .matrix import PolyMatrix, determinant
from .nodes import ColumnSubset, NodeMultiset, build_F, build_G, enumerate_subsets, parse_nodes
from .normal_form import hermite_normal_form, reduce
from .parser import parse, render
from .poly import Polynomial, VariableSet, is_symmetric, scaled_partial, substitute
from .symmetric import complete_homogeneous, elementary_symmetric, schur_polynomial, vandermonde_poly
from .vandermonde import assemble_vdm, vdm_det_formula, vdm_determinant

__all__ = [
    "METHODS",
    "BasisElement",
    "ColumnSubset",
    "CoordinateVector",
    "InexactDivisionError",
    "NodeMultiset",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "PreconditionError",
    "SymHermError",
    "VariableSet",
    "VariableSetMismatch",
    "applicable_methods",
    "assemble_vdm",
    "build_F",
    "build_G",
    "complete_homogeneous",
    "coordinates",
    "derivative_evaluate",
    "determinant",
    "elementary_symmetric",
    "enumerate_subsets",
    "epsilon_sign",
    "hermite_basis",
    "hermite_interpolant",
    "hermite_normal_form",
    "hermite_signs",
    "is_symmetric",
    "parse",
    "parse_nodes",
    "reduce",
    "render",
    "scaled_partial",
    "schur_polynomial",
    "substitute",
    "vandermonde_poly",
    "vdm_det_formula",
    "vdm_determinant",
]
