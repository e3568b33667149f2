"""Alliance index and alliance polynomial computation

Two enumerators produce identical results: the subset sweep over all
``2^n - 1`` nonempty vertex sets, and a rooted grow-by-neighbour search that
visits every connected induced subgraph exactly once. The second one can be
sharded by root vertex over a process pool.
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from loguru import logger

from graphs import Graph, is_connected_subset
from utils.config import get_settings
from utils.errors import DisconnectedSubset, EmptySet, OrderExceedsNaiveLimit, VertexOutOfRange

from .alliance import AlliancePolynomial

# Below this order a process pool costs more than it saves.
PARALLEL_MIN_ORDER = 18


def _alliance_index(rows: Sequence[int], degrees: Sequence[int], s: int) -> int:
    """``min_{v in S} δ_S(v) - δ_{S̄}(v)``, written as ``2 δ_S(v) - deg(v)``"""
    best = None
    mask = s
    while mask:
        low = mask & -mask
        v = low.bit_length() - 1
        value = 2 * (rows[v] & s).bit_count() - degrees[v]
        if best is None or value < best:
            best = value
        mask ^= low
    return best


def exact_alliance_index(g: Graph, s: int) -> int:
    """Exact index of alliance ``k_S`` of a connected vertex set

    Args:
        g: Graph
        s: Nonempty vertex mask with ``<S>`` connected

    Returns:
        ``k_S`` in ``[-Δ, Δ]``
    """
    s = int(s)
    if not s:
        raise EmptySet("The alliance index of an empty set is undefined")
    if s >> g.order:
        raise VertexOutOfRange(f"Vertex mask {s:#x} leaves the graph of order {g.order}")
    if not is_connected_subset(g, s):
        raise DisconnectedSubset(f"Vertex set {s:#x} does not induce a connected subgraph")
    return _alliance_index(g.rows, g.degrees, s)


def alliance_polynomial_naive(g: Graph, limit: Optional[int] = None) -> AlliancePolynomial:
    """Alliance polynomial by sweeping every nonempty vertex subset

    Args:
        g: Graph
        limit: Largest order accepted (defaults to the ``naive_limit`` setting)

    Returns:
        Exact alliance polynomial
    """
    limit = get_settings().naive_limit if limit is None else limit
    n = g.order
    if n > limit:
        raise OrderExceedsNaiveLimit(f"Order {n} exceeds the subset-sweep limit {limit}")

    rows, degrees = g.rows, g.degrees
    counts: Dict[int, int] = {}
    for s in range(1, 1 << n):
        if not is_connected_subset(g, s):
            continue
        exponent = n + _alliance_index(rows, degrees, s)
        counts[exponent] = counts.get(exponent, 0) + 1

    logger.debug(f"Subset sweep on order {n}: {sum(counts.values())} connected sets")
    return AlliancePolynomial(n, g.max_degree, counts)


def _grow(rows, degrees, n, s, ext, banned, counts) -> None:
    """Record ``s`` then branch include/exclude over the candidates in ``ext``"""
    exponent = n + _alliance_index(rows, degrees, s)
    counts[exponent] = counts.get(exponent, 0) + 1
    while ext:
        low = ext & -ext
        ext ^= low
        v = low.bit_length() - 1
        child_banned = banned | low
        _grow(rows, degrees, n, s | low, ext | (rows[v] & ~child_banned), child_banned, counts)
        banned = child_banned


def _counts_for_roots(order: int, rows: Tuple[int, ...], roots: Sequence[int]) -> Dict[int, int]:
    """Coefficient counts of the connected sets whose smallest vertex is a root"""
    degrees = tuple(row.bit_count() for row in rows)
    counts: Dict[int, int] = {}
    for r in roots:
        banned = (1 << (r + 1)) - 1
        _grow(rows, degrees, order, 1 << r, rows[r] & ~banned, banned, counts)
    return counts


def _merge(target: Dict[int, int], part: Dict[int, int]) -> None:
    for exponent, count in part.items():
        target[exponent] = target.get(exponent, 0) + count


def _shard_roots(n: int, workers: int) -> List[List[int]]:
    # Low roots own the most subsets; dealing round-robin balances the shards.
    return [list(range(i, n, workers)) for i in range(workers) if i < n]


def alliance_polynomial(g: Graph, workers: Optional[int] = None) -> AlliancePolynomial:
    """Alliance polynomial by connected-subgraph enumeration

    Every connected set is reached once, from its smallest vertex ``r``,
    growing only through neighbours with index above ``r``.

    Args:
        g: Graph
        workers: Worker processes, ``0`` for one per CPU; ``None`` uses
            the settings and stays single-process for small graphs

    Returns:
        Exact alliance polynomial, identical for any worker count
    """
    n = g.order
    if workers is None:
        workers = get_settings().resolved_workers() if n >= PARALLEL_MIN_ORDER else 1
    else:
        workers = get_settings().resolved_workers(workers)
    workers = max(1, min(workers, n))

    if workers == 1:
        counts = _counts_for_roots(n, g.rows, range(n))
    else:
        logger.info(f"Enumerating order-{n} graph over {workers} workers")
        counts = {}
        shards = _shard_roots(n, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(_counts_for_roots, n, g.rows, shard) for shard in shards]
            for future in futures:
                _merge(counts, future.result())

    return AlliancePolynomial(n, g.max_degree, counts)


def enumerate_connected_sets(g: Graph) -> Iterator[int]:
    """Yield the mask of every connected induced subgraph once"""
    rows = g.rows
    for r in range(g.order):
        banned = (1 << (r + 1)) - 1
        stack = [(1 << r, rows[r] & ~banned, banned)]
        while stack:
            s, ext, banned = stack.pop()
            yield s
            # Children are pushed in reverse so they pop in candidate order;
            # candidate i is banned in the branches of the candidates after it.
            children = []
            while ext:
                low = ext & -ext
                ext ^= low
                child_banned = banned | low
                children.append((s | low, ext | (rows[low.bit_length() - 1] & ~child_banned), child_banned))
                banned = child_banned
            stack.extend(reversed(children))


def count_connected_subgraphs(g: Graph) -> int:
    """Number of visits made by the connected-set enumeration"""
    return sum(1 for _ in enumerate_connected_sets(g))
