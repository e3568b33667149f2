"""Immutable simple graphs stored as one adjacency bitmask per vertex"""

from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from utils.errors import (
    InvalidAdjacency,
    LoopEdge,
    OrderOutOfRange,
    VertexOutOfRange,
)

MAX_ORDER = 64


class VertexSet(int):
    """Set of vertex indices packed into one integer mask

    Bit ``v`` is set when vertex ``v`` belongs to the set. Bitwise operators
    keep working and return plain integers; wrap the result again when the
    set helpers are needed.
    """

    __slots__ = ()

    @classmethod
    def of(cls, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if v < 0 or v >= MAX_ORDER:
                raise VertexOutOfRange(f"Vertex {v} outside 0..{MAX_ORDER - 1}")
            mask |= 1 << v
        return cls(mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1)

    def members(self) -> List[int]:
        """Vertices in increasing order"""
        out = []
        mask = int(self)
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def __len__(self) -> int:
        return int(self).bit_count()

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(int(self) >> v & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def union(self, other: int) -> "VertexSet":
        return VertexSet(int(self) | int(other))

    def intersection(self, other: int) -> "VertexSet":
        return VertexSet(int(self) & int(other))

    def complement(self, n: int) -> "VertexSet":
        """Complement within the vertex set ``{0, ..., n-1}``"""
        return VertexSet(((1 << n) - 1) & ~int(self))

    def __repr__(self) -> str:
        return f"VertexSet({self.members()})"


class DegreeSequence(BaseModel):
    """Vertex degrees sorted in descending order"""

    model_config = ConfigDict(frozen=True)

    degrees: Tuple[int, ...]

    @property
    def distinct_value_count(self) -> int:
        return len(set(self.degrees))

    @property
    def all_same_parity(self) -> bool:
        return len({d % 2 for d in self.degrees}) <= 1


class Graph:
    """Simple undirected graph on at most 64 vertices

    Row ``v`` of the adjacency is the mask of ``N(v)``. Instances are
    immutable; every transformation builds a new graph.
    """

    __slots__ = ("_order", "_rows", "_degrees")

    def __init__(self, order: int, rows: Sequence[int]):
        """Initialize graph from adjacency rows

        Args:
            order: Number of vertices, 1..64
            rows: ``order`` neighbourhood masks
        """
        if order < 1 or order > MAX_ORDER:
            raise OrderOutOfRange(f"Graph order {order} outside 1..{MAX_ORDER}")
        if len(rows) != order:
            raise InvalidAdjacency(f"Expected {order} adjacency rows, got {len(rows)}")

        rows = tuple(int(r) for r in rows)
        full = (1 << order) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise InvalidAdjacency(f"Row {v} has bits beyond vertex {order - 1}")
            if row >> v & 1:
                raise LoopEdge(f"Vertex {v} is adjacent to itself")
            mask = row
            while mask:
                low = mask & -mask
                u = low.bit_length() - 1
                if not rows[u] >> v & 1:
                    raise InvalidAdjacency(f"Edge {v}-{u} is not symmetric")
                mask ^= low

        self._order = order
        self._rows = rows
        self._degrees = tuple(row.bit_count() for row in rows)

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from vertex pairs

        Duplicate pairs collapse to one edge; loops are rejected.

        Args:
            n: Number of vertices
            edges: Pairs of 0-based vertex indices

        Returns:
            Graph with exactly the given edges
        """
        if n < 1 or n > MAX_ORDER:
            raise OrderOutOfRange(f"Graph order {n} outside 1..{MAX_ORDER}")

        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n) or not (0 <= v < n):
                raise VertexOutOfRange(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise LoopEdge(f"Loop edge ({u}, {v}) is not allowed in a simple graph")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # Basic accessors

    @property
    def order(self) -> int:
        return self._order

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def size(self) -> int:
        return sum(self._degrees) // 2

    @property
    def vertex_set(self) -> VertexSet:
        return VertexSet.full(self._order)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self._rows[v])

    def degree(self, v: int) -> int:
        return self._degrees[v]

    @property
    def degrees(self) -> Tuple[int, ...]:
        return self._degrees

    def degree_sequence(self) -> DegreeSequence:
        return DegreeSequence(degrees=tuple(sorted(self._degrees, reverse=True)))

    @property
    def min_degree(self) -> int:
        return min(self._degrees)

    @property
    def max_degree(self) -> int:
        return max(self._degrees)

    def is_regular(self) -> Optional[int]:
        """Common degree when every vertex has the same degree, else ``None``"""
        first = self._degrees[0]
        if all(d == first for d in self._degrees):
            return first
        return None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order"""
        for u, row in enumerate(self._rows):
            mask = row >> (u + 1)
            v = u + 1
            while mask:
                if mask & 1:
                    yield (u, v)
                mask >>= 1
                v += 1

    def induced_degree(self, v: int, s: int) -> int:
        """``δ_S(v)``: neighbours of ``v`` inside ``s``"""
        return (self._rows[v] & s).bit_count()

    def induced_rows(self, s: int) -> Tuple[int, ...]:
        """Adjacency rows of ``<S>`` in the host labeling

        Row ``v`` is ``N(v) ∩ S`` for ``v`` in ``S`` and empty otherwise.
        """
        s = int(s)
        if s >> self._order:
            raise VertexOutOfRange(f"Vertex set {VertexSet(s)!r} leaves the graph of order {self._order}")
        return tuple(row & s if s >> v & 1 else 0 for v, row in enumerate(self._rows))

    # Derived graphs

    def complement(self) -> "Graph":
        full = (1 << self._order) - 1
        return Graph(self._order, [full & ~row & ~(1 << v) for v, row in enumerate(self._rows)])

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``permutation[v]``"""
        n = self._order
        if sorted(permutation) != list(range(n)):
            raise InvalidAdjacency(f"Relabeling {list(permutation)} is not a permutation of 0..{n - 1}")
        rows = [0] * n
        for v, row in enumerate(self._rows):
            new_row = 0
            mask = row
            while mask:
                low = mask & -mask
                new_row |= 1 << permutation[low.bit_length() - 1]
                mask ^= low
            rows[permutation[v]] = new_row
        return Graph(n, rows)

    # Dunder helpers

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._order, self._rows))

    def __reduce__(self):
        return (Graph, (self._order, self._rows))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, size={self.size})"
