"""Alliance polynomial computation"""

from .alliance import AlliancePolynomial, coefficient, disjoint_union_poly, evaluate, render
from .engine import (
    alliance_polynomial,
    alliance_polynomial_naive,
    count_connected_subgraphs,
    enumerate_connected_sets,
    exact_alliance_index,
)

__all__ = [
    "AlliancePolynomial",
    "coefficient",
    "disjoint_union_poly",
    "evaluate",
    "render",
    "alliance_polynomial",
    "alliance_polynomial_naive",
    "count_connected_subgraphs",
    "enumerate_connected_sets",
    "exact_alliance_index",
]
