"""Exact dense linear algebra."""
from .matrix import (
    Matrix,
    bareiss_determinant,
    cofactor_determinant,
    determinant,
    inverse,
    kernel,
    rank,
    rref,
    solve,
    solve_fraction_free,
    span_rank,
    subspace_equal,
)
from .modular import det_multimodular, kernel_multimodular

__all__ = [
    "Matrix",
    "bareiss_determinant",
    "cofactor_determinant",
    "det_multimodular",
    "determinant",
    "inverse",
    "kernel",
    "kernel_multimodular",
    "rank",
    "rref",
    "solve",
    "solve_fraction_free",
    "span_rank",
    "subspace_equal",
]
