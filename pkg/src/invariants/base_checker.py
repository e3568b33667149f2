"""Base class for polynomial invariant checkers"""

from abc import ABC, abstractmethod
from collections import Counter
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from loguru import logger

from graphs import Graph, VertexSet, encode_graph6, is_connected_subset
from polynomial import AlliancePolynomial
from utils.config import get_settings
from utils.errors import PolynomialGraphMismatch

from .report import InvariantReport


class BaseChecker(ABC):
    """Abstract base class for checkers over a (graph, polynomial) pair"""

    def __init__(self, brute_force_limit: Optional[int] = None):
        """Initialize checker

        Args:
            brute_force_limit: Largest order for the subset-sweep oracle
                (defaults to the ``naive_limit`` setting)
        """
        self.brute_force_limit = (
            get_settings().naive_limit if brute_force_limit is None else brute_force_limit
        )
        logger.debug(f"{self.__class__.__name__} initialized")

    @abstractmethod
    def check(self, g: Graph, p: AlliancePolynomial) -> InvariantReport:
        """Run every check of this family

        Args:
            g: Graph
            p: Its alliance polynomial

        Returns:
            Report with one entry per check
        """
        pass

    def new_report(self, g: Graph) -> InvariantReport:
        subject = encode_graph6(g) if g.order <= 62 else f"order-{g.order} graph"
        return InvariantReport(subject=subject)

    @staticmethod
    def require_match(g: Graph, p: AlliancePolynomial) -> None:
        if p.n != g.order or p.delta != g.max_degree:
            raise PolynomialGraphMismatch(
                f"Polynomial built for n={p.n}, delta={p.delta} but graph has "
                f"n={g.order}, delta={g.max_degree}"
            )

    @staticmethod
    def a(p: AlliancePolynomial, k: int) -> int:
        """``A_k`` without the range check (zero outside ``[-Δ, Δ]``)"""
        return p.coefficients.get(p.n + k, 0)

    def min_degree_profile(self, g: Graph) -> Optional[Dict[int, int]]:
        """Connected induced subgraphs counted by their minimum internal degree

        Subset sweep with its own connectivity test; it never consults the
        alliance index. ``None`` when the order exceeds the sweep limit.
        """
        if g.order > self.brute_force_limit:
            return None
        return dict(_sweep_min_degrees(g))


@lru_cache(maxsize=32)
def _sweep_min_degrees(g: Graph) -> Tuple[Tuple[int, int], ...]:
    # Shared by the general and regular checks of one graph.
    profile: Counter = Counter()
    for s in range(1, 1 << g.order):
        if not is_connected_subset(g, s):
            continue
        induced = g.induced_rows(s)
        profile[min(induced[v].bit_count() for v in VertexSet(s))] += 1
    logger.debug(f"Minimum-degree sweep over {sum(profile.values())} connected sets")
    return tuple(sorted(profile.items()))


def is_unimodal(sequence: Sequence[int]) -> bool:
    """Non-decreasing up to a mode, non-increasing after it"""
    i = 0
    while i + 1 < len(sequence) and sequence[i] <= sequence[i + 1]:
        i += 1
    while i + 1 < len(sequence) and sequence[i] >= sequence[i + 1]:
        i += 1
    return i + 1 >= len(sequence)
