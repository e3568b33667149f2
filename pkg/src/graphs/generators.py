"""Named graph families and graph products"""

from typing import Callable, Dict, List, Tuple

from loguru import logger

from utils.errors import BadParams, ProductTooLarge, UnionTooLarge

from .graph import MAX_ORDER, Graph


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def empty(n: int) -> Graph:
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n, [0] * n)


def cycle(n: int) -> Graph:
    """``C_n`` with ``v_i ~ v_{(i+1) mod n}``"""
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    """``P_n`` with ``v_i ~ v_{i+1}``"""
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def star(n: int) -> Graph:
    """Star on ``n`` vertices, centre 0"""
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return Graph.from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_bipartite(p: int, q: int) -> Graph:
    """``K_{p,q}`` with parts ``{0..p-1}`` and ``{p..p+q-1}``"""
    _require(p >= 1 and q >= 1, f"complete bipartite graph needs p, q >= 1, got ({p}, {q})")
    return Graph.from_edge_list(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen() -> Graph:
    """Outer 5-cycle 0-4, inner pentagram 5-9, spokes ``i ~ i+5``"""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edge_list(10, edges)


FAMILIES: Dict[str, Tuple[Callable[..., Graph], int]] = {
    "complete": (complete, 1),
    "empty": (empty, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "complete_bipartite": (complete_bipartite, 2),
    "petersen": (petersen, 0),
}


def generate_named(family: str, *params: int) -> Graph:
    """Build a member of a named family

    Args:
        family: One of ``FAMILIES``
        *params: Family parameters (orders or part sizes)

    Returns:
        The named graph with its documented labeling
    """
    if family not in FAMILIES:
        raise BadParams(f"Unknown graph family {family!r}; expected one of {sorted(FAMILIES)}")

    builder, arity = FAMILIES[family]
    if len(params) != arity:
        raise BadParams(f"{family} takes {arity} parameter(s), got {len(params)}")
    if any(p > MAX_ORDER for p in params):
        raise BadParams(f"{family}{params} exceeds the {MAX_ORDER}-vertex capacity")

    logger.debug(f"Generating {family}{params}")
    return builder(*params)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``G □ H`` with vertex ``(a, b)`` at index ``a * n_h + b``"""
    n_g, n_h = g.order, h.order
    if n_g * n_h > MAX_ORDER:
        raise ProductTooLarge(f"Product order {n_g} x {n_h} = {n_g * n_h} exceeds {MAX_ORDER}")

    edges: List[Tuple[int, int]] = []
    for a in range(n_g):
        for b, b2 in h.edges():
            edges.append((a * n_h + b, a * n_h + b2))
    for a, a2 in g.edges():
        for b in range(n_h):
            edges.append((a * n_h + b, a2 * n_h + b))
    return Graph.from_edge_list(n_g * n_h, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``G ∪ H`` with the vertices of ``h`` shifted by ``g.order``"""
    n_g, n_h = g.order, h.order
    if n_g + n_h > MAX_ORDER:
        raise UnionTooLarge(f"Union order {n_g} + {n_h} exceeds {MAX_ORDER}")
    rows = list(g.rows) + [row << n_g for row in h.rows]
    return Graph(n_g + n_h, rows)


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise BadParams(message)
