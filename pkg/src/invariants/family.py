"""Catalog-level checks across many regular graphs"""

from collections import defaultdict
from typing import Dict, Iterable, List, Tuple

from loguru import logger

from graphs import Graph, component_count

from polynomial import AlliancePolynomial

from .report import InvariantReport

Signature = Tuple[int, int, int, int]


def _signature(g: Graph) -> Signature:
    """``(n, m, Δ, components)``"""
    return g.order, g.size, g.max_degree, component_count(g)


def check_regular_family(
    pairs: Iterable[Tuple[Graph, AlliancePolynomial]],
    label: str = "regular family",
) -> InvariantReport:
    """Regular graphs sharing a polynomial share order, size, degree and components

    Args:
        pairs: ``(graph, polynomial)`` pairs; non-regular graphs are skipped
        label: Report subject

    Returns:
        Report with one entry per property
    """
    groups: Dict[AlliancePolynomial, List[Signature]] = defaultdict(list)
    skipped = 0
    for g, p in pairs:
        if g.is_regular() is None:
            skipped += 1
            continue
        groups[p].append(_signature(g))

    if skipped:
        logger.debug(f"Family check skipped {skipped} non-regular graphs")

    report = InvariantReport(subject=label)
    mixed = [
        (p, sorted(set(signatures)))
        for p, signatures in groups.items()
        if len(set(signatures)) > 1
    ]
    report.record(
        "family.shared_polynomial_invariants",
        not mixed,
        "; ".join(f"{p}: (n, m, Δ, c) in {signatures}" for p, signatures in mixed) if mixed
        else f"{sum(len(s) for s in groups.values())} regular graphs, {len(groups)} polynomials",
    )

    crossing = [
        (p, sorted({(n, delta) for n, _, delta, _ in signatures}))
        for p, signatures in groups.items()
        if len({(n, delta) for n, _, delta, _ in signatures}) > 1
    ]
    report.record(
        "family.order_degree_separation",
        not crossing,
        "; ".join(f"{p}: (n, Δ) in {pairs_}" for p, pairs_ in crossing) if crossing
        else "no polynomial is shared across different (n, Δ)",
    )
    return report
