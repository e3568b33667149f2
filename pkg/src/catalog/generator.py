"""Graph catalogs up to isomorphism

Regular graphs come from a breadth-first labeling search: vertices are
completed in index order and every vertex takes its missing neighbours
among the already discovered vertices above it plus a block of fresh
consecutive labels. Every graph has such a labeling, so canonical
deduplication of the search output yields each class once.
"""

from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple

from loguru import logger

from graphs import Graph
from utils.config import get_settings
from utils.errors import BadParams, InfeasibleParams, OrderExceedsCanonicalLimit, OrderExceedsExhaustiveLimit

from .canonical import CanonicalForm, canonical_form
from .entry import CatalogEntry, EntrySource

GENERATION_METHODS = ("augment", "exhaustive")


def _bfs_regular_labelings(n: int, degree: int) -> Iterator[Tuple[int, ...]]:
    """Adjacency rows of breadth-first labeled ``degree``-regular graphs"""
    rows = [0] * n
    deg = [0] * n

    def extend(u: int, next_fresh: int) -> Iterator[Tuple[int, ...]]:
        if u == n:
            yield tuple(rows)
            return

        if u == next_fresh:
            # u opens a new component
            next_fresh += 1
        need = degree - deg[u]
        discovered = [w for w in range(u + 1, next_fresh) if deg[w] < degree]

        for fresh_count in range(min(need, n - next_fresh) + 1):
            old_count = need - fresh_count
            if old_count > len(discovered):
                continue
            block = list(range(next_fresh, next_fresh + fresh_count))
            for chosen in combinations(discovered, old_count):
                targets = list(chosen) + block
                for w in targets:
                    rows[u] |= 1 << w
                    rows[w] |= 1 << u
                    deg[w] += 1
                deg[u] += len(targets)

                yield from extend(u + 1, next_fresh + fresh_count)

                for w in targets:
                    rows[u] &= ~(1 << w)
                    rows[w] &= ~(1 << u)
                    deg[w] -= 1
                deg[u] -= len(targets)

    yield from extend(0, 0)


def _dedupe(graphs: Iterator[Graph], limit: int) -> List[Tuple[CanonicalForm, Graph]]:
    classes: Dict[CanonicalForm, Graph] = {}
    seen = 0
    for g in graphs:
        seen += 1
        form = canonical_form(g, limit)
        if form not in classes:
            classes[form] = form.to_graph()
    logger.debug(f"{seen} labeled graphs reduced to {len(classes)} classes")
    return sorted(classes.items(), key=lambda item: item[0].code)


def regular_classes(n: int, degree: int, limit: Optional[int] = None) -> List[Tuple[CanonicalForm, Graph]]:
    """Canonical representatives of all ``degree``-regular graphs of order ``n``

    Dense degrees are generated as complements of the sparse catalog.
    """
    limit = get_settings().canonical_limit if limit is None else limit
    if 2 * degree > n - 1:
        complements = regular_classes(n, n - 1 - degree, limit)
        return _dedupe((g.complement() for _, g in complements), limit)
    return _dedupe((Graph(n, rows) for rows in _bfs_regular_labelings(n, degree)), limit)


def enumerate_regular(n: int, degree: int, connected_only: bool = False) -> List[CatalogEntry]:
    """All ``degree``-regular graphs of order ``n`` up to isomorphism

    Args:
        n: Order
        degree: Common vertex degree
        connected_only: Keep connected graphs only

    Returns:
        One entry per isomorphism class, sorted by canonical bytes
    """
    if n < 1 or degree < 0 or degree >= n or (n * degree) % 2:
        raise InfeasibleParams(f"No {degree}-regular graph of order {n} exists")
    limit = get_settings().canonical_limit
    if n > limit:
        raise OrderExceedsCanonicalLimit(f"Order {n} exceeds the canonical-form limit {limit}")

    logger.info(f"Generating {degree}-regular graphs of order {n}")
    entries = [
        CatalogEntry.build(g, EntrySource.GENERATED, form=form)
        for form, g in regular_classes(n, degree, limit)
    ]
    if connected_only:
        entries = [e for e in entries if e.connected]
    logger.info(f"{len(entries)} classes of {degree}-regular graphs of order {n}")
    return entries


@lru_cache(maxsize=None)
def _augmented_classes(n: int) -> Tuple[Tuple[CanonicalForm, Graph], ...]:
    """Classes of order ``n`` from every neighbourhood of a new vertex added to order ``n - 1``"""
    if n == 1:
        return _exhaustive_classes(1)

    def grown() -> Iterator[Graph]:
        new_bit = 1 << (n - 1)
        for _, base in _augmented_classes(n - 1):
            for mask in range(1 << (n - 1)):
                rows = [row | new_bit if mask >> v & 1 else row for v, row in enumerate(base.rows)]
                rows.append(mask)
                yield Graph(n, rows)

    return tuple(_dedupe(grown(), n))


def _exhaustive_classes(n: int) -> Tuple[Tuple[CanonicalForm, Graph], ...]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]

    def labeled() -> Iterator[Graph]:
        for bits in range(1 << len(pairs)):
            rows = [0] * n
            for index, (i, j) in enumerate(pairs):
                if bits >> index & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
            yield Graph(n, rows)

    return tuple(_dedupe(labeled(), n))


def enumerate_all_graphs(n: int, method: str = "augment") -> List[CatalogEntry]:
    """Every simple graph of order ``n`` up to isomorphism

    Args:
        n: Order
        method: ``augment`` grows the classes of order ``n - 1`` by one
            vertex; ``exhaustive`` sweeps every labeled graph

    Returns:
        One entry per isomorphism class, sorted by canonical bytes
    """
    if method not in GENERATION_METHODS:
        raise BadParams(f"Unknown generation method {method!r}; expected one of {GENERATION_METHODS}")
    if n < 1:
        raise BadParams(f"Order must be positive, got {n}")
    limit = get_settings().exhaustive_limit
    if n > limit:
        raise OrderExceedsExhaustiveLimit(f"Order {n} exceeds the all-graphs limit {limit}")

    classes = _augmented_classes(n) if method == "augment" else _exhaustive_classes(n)
    logger.info(f"{len(classes)} graph classes of order {n} ({method})")
    return [CatalogEntry.build(g, EntrySource.GENERATED, form=form) for form, g in classes]
