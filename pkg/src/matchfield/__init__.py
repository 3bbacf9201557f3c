"""Toric degenerations of flag varieties from block diagonal matching fields."""
from .combinatorics import MatchingField, Tableau, proper_subsets, quadratic_equivalent, row_wise_equal
from .weights import WeightMatrix, induces, initial_term, weight_matrix_block, weight_vector

__version__ = "0.1.0"

__all__ = [
    "MatchingField",
    "Tableau",
    "WeightMatrix",
    "induces",
    "initial_term",
    "proper_subsets",
    "quadratic_equivalent",
    "row_wise_equal",
    "weight_matrix_block",
    "weight_vector",
]
