"""Table verification and distinguishing-power experiments"""

from collections import Counter, defaultdict
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Tuple

from loguru import logger
from pydantic import BaseModel, Field

from graphs import Graph, complete, cycle, path, star
from polynomial import alliance_polynomial

from .canonical import canonical_form
from .entry import CatalogEntry
from .generator import enumerate_all_graphs, enumerate_regular
from .tables import published_tables, table_rows

# Degrees for which a shared polynomial forces the same regular structure.
REGULAR_UNIQUENESS_MAX_DEGREE = 3
CONNECTED_UNIQUENESS_MAX_DEGREE = 5


class Erratum(BaseModel):
    """Table row whose printed polynomial differs from the computed one"""

    label: str
    published: str
    computed: str
    confirmed: bool


class VerificationReport(BaseModel):
    """Computed cubic catalog of one order against the embedded table

    Rows are compared by their corrected polynomial; misprinted rows are
    listed in ``errata`` with ``confirmed`` set when the corrected value
    was actually generated.
    """

    order: int
    expected: int
    computed: int
    matched: int
    missing: List[str] = Field(default_factory=list)
    extra: List[str] = Field(default_factory=list)
    errata: List[Erratum] = Field(default_factory=list)
    pairwise_distinct: bool
    distinct_evaluations: bool
    collisions: int

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra and self.pairwise_distinct

    def summary_line(self) -> str:
        line = f"{self.matched}/{self.expected} matched, {self.collisions} collisions"
        if self.errata:
            line += f", {len(self.errata)} errata"
        return line


class CollisionGroup(BaseModel):
    """Non-isomorphic entries sharing one key"""

    key: str
    members: List[str]
    reason: Optional[str] = None


class CollisionReport(BaseModel):
    """Collision groups of a pool keyed by polynomial and by value at 1"""

    pool_size: int
    by_polynomial: List[CollisionGroup] = Field(default_factory=list)
    by_value_at_one: List[CollisionGroup] = Field(default_factory=list)
    violations: List[CollisionGroup] = Field(default_factory=list)

    @property
    def characterized(self) -> bool:
        return not self.by_polynomial

    def summary(self) -> Dict[str, int]:
        return {
            "pool_size": self.pool_size,
            "polynomial_collisions": len(self.by_polynomial),
            "value_collisions": len(self.by_value_at_one),
            "violations": len(self.violations),
        }


def verify_against_published(order: int) -> VerificationReport:
    """Compare the generated cubic catalog of ``order`` with the embedded table

    Args:
        order: One of 4, 6, 8, 10

    Returns:
        Multiset comparison plus the distinctness of the computed polynomials
    """
    expected = published_tables(order, corrected=True)
    entries = enumerate_regular(order, 3, connected_only=False)
    computed = Counter(e.polynomial for e in entries)

    missing = expected - computed
    extra = computed - expected
    collisions = distinguish(entries)
    errata = [
        Erratum(
            label=row.label,
            published=row.polynomial.to_text(),
            computed=row.expected.to_text(),
            confirmed=row.expected in computed,
        )
        for row in table_rows(order)
        if row.misprinted
    ]

    report = VerificationReport(
        order=order,
        expected=sum(expected.values()),
        computed=len(entries),
        matched=sum((expected & computed).values()),
        missing=[p.to_text() for p in missing.elements()],
        extra=[p.to_text() for p in extra.elements()],
        errata=errata,
        pairwise_distinct=not collisions.by_polynomial,
        distinct_evaluations=not collisions.by_value_at_one,
        collisions=len(collisions.by_polynomial),
    )
    logger.info(f"Order {order}: {report.summary_line()}")
    return report


def _unique_classes(entries: Iterable[CatalogEntry]) -> List[CatalogEntry]:
    seen = set()
    unique = []
    for entry in entries:
        if entry.canonical not in seen:
            seen.add(entry.canonical)
            unique.append(entry)
    return unique


def _groups(
    entries: List[CatalogEntry],
    key: Callable[[CatalogEntry], Hashable],
    render: Callable[[Hashable], str],
) -> Iterator[Tuple[str, List[CatalogEntry]]]:
    buckets: Dict[Hashable, List[CatalogEntry]] = defaultdict(list)
    for entry in entries:
        buckets[key(entry)].append(entry)
    for value, members in buckets.items():
        if len(members) > 1:
            yield render(value), members


def _violation(members: List[CatalogEntry]) -> Optional[str]:
    """Reason a polynomial group contradicts the regular uniqueness results, if any"""
    for g in members:
        delta = g.regular_degree
        if delta is None:
            continue
        for h in members:
            if h is g:
                continue
            same_shape = h.regular_degree == delta and (h.order, h.size) == (g.order, g.size)
            if delta <= REGULAR_UNIQUENESS_MAX_DEGREE and not (
                same_shape and h.components == g.components
            ):
                return f"{g.name} is {delta}-regular but {h.name} differs in degree, order, size or components"
            if g.connected and delta <= CONNECTED_UNIQUENESS_MAX_DEGREE and not same_shape:
                return f"{g.name} is connected {delta}-regular but {h.name} differs in degree, order or size"
    return None


def distinguish(entries: Iterable[CatalogEntry]) -> CollisionReport:
    """Group a pool by polynomial and by ``A(G;1)``

    Isomorphic duplicates in the pool are merged first, so every group lists
    pairwise non-isomorphic graphs.
    """
    pool = _unique_classes(entries)
    report = CollisionReport(pool_size=len(pool))

    for text, members in _groups(pool, lambda e: e.polynomial, lambda p: p.to_text()):
        group = CollisionGroup(key=text, members=[m.name for m in members])
        report.by_polynomial.append(group)
        reason = _violation(members)
        if reason is not None:
            report.violations.append(group.model_copy(update={"reason": reason}))

    for text, members in _groups(pool, lambda e: e.polynomial.evaluate(1), str):
        report.by_value_at_one.append(CollisionGroup(key=f"A(G;1)={text}", members=[m.name for m in members]))

    logger.info(f"Distinguish over {len(pool)} classes: {report.summary()}")
    return report


def characterized(g: Graph, pool: Iterable[CatalogEntry]) -> bool:
    """Whether every pool graph sharing the polynomial of ``g`` is isomorphic to it"""
    p = alliance_polynomial(g)
    form = canonical_form(g)
    return all(entry.canonical == form for entry in pool if entry.polynomial == p)


def _complete_minus_edge(n: int) -> Graph:
    edges = [(u, v) for v in range(n) for u in range(v) if (u, v) != (0, 1)]
    return Graph.from_edge_list(n, edges)


def named_family_graphs(max_order: int) -> List[Tuple[str, Graph]]:
    """Paths, cycles, complete graphs, complete graphs minus an edge and stars"""
    named = []
    for n in range(1, max_order + 1):
        named.append((f"path({n})", path(n)))
        named.append((f"complete({n})", complete(n)))
        if n >= 3:
            named.append((f"cycle({n})", cycle(n)))
        if n >= 2:
            named.append((f"star({n})", star(n)))
            named.append((f"complete_minus_edge({n})", _complete_minus_edge(n)))
    return named


def named_family_characterization(max_order: int) -> Dict[str, bool]:
    """Characterization of each named graph within all classes of order ``≤ max_order``"""
    pool = [entry for n in range(1, max_order + 1) for entry in enumerate_all_graphs(n)]
    return {label: characterized(g, pool) for label, g in named_family_graphs(max_order)}

