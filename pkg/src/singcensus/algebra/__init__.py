from .field import FieldElement, PrimeField, is_prime
from .poly import (
    GradedSpace,
    Poly,
    format_poly,
    infer_num_vars,
    monomials_of_degree,
    monomials_up_to_degree,
    parse_poly,
    sample_graded,
)

__all__ = [
    "PrimeField",
    "FieldElement",
    "is_prime",
    "Poly",
    "parse_poly",
    "format_poly",
    "infer_num_vars",
    "monomials_of_degree",
    "monomials_up_to_degree",
    "GradedSpace",
    "sample_graded",
]
