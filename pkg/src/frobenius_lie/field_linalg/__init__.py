"""Scalar fields, dense linear algebra and univariate polynomials."""

from .matrix import (
    Matrix,
    Vector,
    det,
    in_span,
    independent_subset,
    inverse,
    kernel_basis,
    rank,
    rref,
    rref_sparse,
    kernel_from_rref,
    solve_linear,
    solve_matrix,
    span_basis,
)
from .poly import (
    Polynomial,
    char_poly,
    is_squarefree,
    min_poly,
    poly_gcd,
    poly_xgcd,
    roots_exact,
    roots_numeric,
    squarefree_decomposition,
    squarefree_part,
)
from .scalars import EXACT, Field, Scalar, approx, format_scalar, parse_rational, same_field
from .symplectic import darboux_basis, standard_form

__all__ = [
    "EXACT",
    "Field",
    "Matrix",
    "Polynomial",
    "Scalar",
    "Vector",
    "approx",
    "char_poly",
    "darboux_basis",
    "det",
    "format_scalar",
    "in_span",
    "independent_subset",
    "inverse",
    "is_squarefree",
    "kernel_basis",
    "kernel_from_rref",
    "min_poly",
    "parse_rational",
    "poly_gcd",
    "poly_xgcd",
    "rank",
    "roots_exact",
    "roots_numeric",
    "rref",
    "rref_sparse",
    "same_field",
    "solve_linear",
    "solve_matrix",
    "span_basis",
    "squarefree_decomposition",
    "squarefree_part",
    "standard_form",
]
