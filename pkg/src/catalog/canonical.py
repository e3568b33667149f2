"""Canonical forms of small graphs

The canonical labeling is the vertex order, among those that list the
refinement cells in a fixed order, whose column-major upper-triangle
adjacency string is lexicographically largest. The string of the
relabeled graph, packaged as graph6, is the canonical form.
"""

from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict

from graphs import Graph, encode_graph6, parse_graph6
from utils.config import get_settings
from utils.errors import OrderExceedsCanonicalLimit


class CanonicalForm(BaseModel):
    """Label-invariant encoding of a graph: graph6 bytes of its canonical relabeling"""

    model_config = ConfigDict(frozen=True)

    code: bytes

    @property
    def order(self) -> int:
        return self.code[0] - 63

    @property
    def graph6(self) -> str:
        return self.code.decode("ascii")

    def to_graph(self) -> Graph:
        return parse_graph6(self.graph6)

    def __lt__(self, other: "CanonicalForm") -> bool:
        return self.code < other.code

    def __str__(self) -> str:
        return self.graph6


def refine_colours(g: Graph) -> List[int]:
    """Stable vertex colouring by degree, refined by neighbour colours

    Colour ids are ranks of isomorphism-invariant signatures, so equal
    colours are preserved by every isomorphism. Higher degree gets a
    smaller id.
    """
    rows = g.rows
    colours = _rank([(-d,) for d in g.degrees])
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[w] for w in _members(rows[v]))))
            for v in range(g.order)
        ]
        refined = _rank(signatures)
        if len(set(refined)) == len(set(colours)):
            return refined
        colours = refined


def _rank(signatures: Sequence[tuple]) -> List[int]:
    index = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
    return [index[sig] for sig in signatures]


def _members(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _twin_leaders(g: Graph) -> List[int]:
    """For each vertex, the smallest vertex it can be swapped with by an automorphism
    of the form (u v) with ``N(u) - v = N(v) - u``"""
    rows = g.rows
    leader = list(range(g.order))
    open_seen: Dict[int, int] = {}
    closed_seen: Dict[int, int] = {}
    for v, row in enumerate(rows):
        if row in open_seen:
            leader[v] = open_seen[row]
        else:
            open_seen[row] = v
        closed = row | (1 << v)
        if closed in closed_seen:
            leader[v] = closed_seen[closed]
        else:
            closed_seen[closed] = v
    return leader


def canonical_labeling(g: Graph) -> List[int]:
    """Permutation ``p`` such that ``g.relabel(p)`` is the canonical representative"""
    n = g.order
    rows = g.rows
    colours = refine_colours(g)
    leader = _twin_leaders(g)

    # Position j is filled from cell cell_at[j].
    cell_at = sorted(colours)

    states: List[Tuple[Tuple[int, ...], int]] = [((), 0)]
    for j in range(n):
        best = -1
        survivors: List[Tuple[Tuple[int, ...], int]] = []
        for order, placed in states:
            tried = 0
            for c in range(n):
                if placed >> c & 1 or colours[c] != cell_at[j]:
                    continue
                # Only the first unplaced member of a twin class is tried.
                if tried >> leader[c] & 1:
                    continue
                tried |= 1 << leader[c]

                row = rows[c]
                column = 0
                for u in order:
                    column = column << 1 | (row >> u & 1)
                if column > best:
                    best = column
                    survivors = [(order + (c,), placed | 1 << c)]
                elif column == best:
                    survivors.append((order + (c,), placed | 1 << c))
        states = survivors

    order = states[0][0]
    permutation = [0] * n
    for position, v in enumerate(order):
        permutation[v] = position
    return permutation


def canonical_form(g: Graph, limit: Optional[int] = None) -> CanonicalForm:
    """Canonical form, equal for two graphs iff they are isomorphic

    Args:
        g: Graph
        limit: Largest order accepted (defaults to the ``canonical_limit`` setting)
    """
    limit = get_settings().canonical_limit if limit is None else limit
    if g.order > limit:
        raise OrderExceedsCanonicalLimit(f"Order {g.order} exceeds the canonical-form limit {limit}")
    representative = g.relabel(canonical_labeling(g))
    return CanonicalForm(code=encode_graph6(representative).encode("ascii"))


def canonical_graph(g: Graph, limit: Optional[int] = None) -> Graph:
    """Canonical representative of the isomorphism class of ``g``"""
    form = canonical_form(g, limit)
    logger.debug(f"Canonical representative {form.graph6}")
    return form.to_graph()
