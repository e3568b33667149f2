"""Connectivity queries on bitmask graphs"""

from typing import List

from utils.errors import EmptySet, VertexOutOfRange

from .graph import Graph, VertexSet


def is_connected_subset(g: Graph, s: int) -> bool:
    """Whether the induced subgraph ``<S>`` is connected

    Frontier expansion that only looks at adjacency rows masked by ``s``.

    Args:
        g: Host graph
        s: Nonempty vertex mask inside ``V(g)``

    Returns:
        True iff ``<S>`` is connected
    """
    s = int(s)
    if not s:
        raise EmptySet("Connectivity of an empty vertex set is undefined")
    if s >> g.order:
        raise VertexOutOfRange(f"Vertex set {VertexSet(s)!r} leaves the graph of order {g.order}")
    return _reach(g.rows, s & -s, s) == s


def _reach(rows, start: int, within: int) -> int:
    """Mask of vertices reachable from ``start`` inside ``within``"""
    seen = start
    frontier = start
    while frontier:
        grown = 0
        while frontier:
            low = frontier & -frontier
            grown |= rows[low.bit_length() - 1]
            frontier ^= low
        frontier = grown & within & ~seen
        seen |= frontier
    return seen


def connected_components(g: Graph, within: int = -1) -> List[VertexSet]:
    """Vertex sets of the components, ordered by smallest vertex

    Args:
        g: Graph
        within: Restrict to the subgraph induced by this mask (default all)
    """
    remaining = g.vertex_set if within == -1 else int(within) & g.vertex_set
    components = []
    while remaining:
        component = _reach(g.rows, remaining & -remaining, remaining)
        components.append(VertexSet(component))
        remaining &= ~component
    return components


def component_count(g: Graph, within: int = -1) -> int:
    return len(connected_components(g, within))


def is_connected(g: Graph) -> bool:
    return is_connected_subset(g, g.vertex_set)


def cut_vertices(g: Graph) -> VertexSet:
    """Vertices whose removal increases the number of components

    Iterative low-point search over every component.
    """
    n = g.order
    rows = g.rows
    disc = [-1] * n
    low = [0] * n
    cuts = 0
    timer = 0

    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        # Stack entries: (vertex, parent, neighbours still to visit)
        stack = [(root, -1, rows[root])]
        while stack:
            v, parent, pending = stack[-1]
            if pending:
                bit = pending & -pending
                stack[-1] = (v, parent, pending ^ bit)
                u = bit.bit_length() - 1
                if disc[u] == -1:
                    disc[u] = low[u] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((u, v, rows[u]))
                elif u != parent:
                    low[v] = min(low[v], disc[u])
                continue

            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[v])
                if parent != root and low[v] >= disc[parent]:
                    cuts |= 1 << parent

        if root_children >= 2:
            cuts |= 1 << root

    return VertexSet(cuts)
