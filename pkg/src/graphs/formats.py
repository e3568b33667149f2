"""graph6 and edge-list readers and writers"""

from typing import Iterable, Iterator, List, Tuple, Union

from loguru import logger

from utils.errors import (
    AllianceError,
    EdgeListSyntaxError,
    InputError,
    LineError,
    MalformedHeader,
    OrderTooLargeForFormat,
    TrailingGarbage,
    TruncatedBitVector,
)

from .graph import Graph

GRAPH6_HEADER = ">>graph6<<"
GRAPH6_MAX_ORDER = 62


def strip_graph6_header(text: str) -> str:
    """Remove surrounding whitespace and the optional ``>>graph6<<`` header"""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    return s


def parse_graph6(text: str) -> Graph:
    """Parse a single-line graph6 string

    Only the short header form (n <= 62) is accepted.

    Args:
        text: graph6 line, optionally prefixed with ``>>graph6<<``

    Returns:
        Labeled graph encoded by the string
    """
    s = strip_graph6_header(text)
    if not s:
        raise MalformedHeader("Empty graph6 string")

    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise MalformedHeader(f"Character {ch!r} at offset {pos} outside the printable range 63..126")
    data = s.encode("ascii")

    if data[0] == 126:
        raise MalformedHeader("Long graph6 headers (order > 62) are not supported")

    n = data[0] - 63
    if n == 0:
        raise MalformedHeader("graph6 header encodes an empty graph")

    bit_count = n * (n - 1) // 2
    byte_count = (bit_count + 5) // 6
    body = data[1:]
    if len(body) < byte_count:
        raise TruncatedBitVector(f"Order {n} needs {byte_count} data bytes, got {len(body)}")
    if len(body) > byte_count:
        raise TrailingGarbage(f"Order {n} needs {byte_count} data bytes, got {len(body)}")

    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            chunk = body[k // 6] - 63
            if chunk >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1

    # Padding bits of the last byte are ignored; encode_graph6 writes zeros.
    return Graph(n, rows)


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a short-form graph6 string

    Args:
        g: Graph with order at most 62

    Returns:
        graph6 text without header or newline
    """
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise OrderTooLargeForFormat(f"graph6 short form holds at most {GRAPH6_MAX_ORDER} vertices, got {n}")

    out = [chr(n + 63)]
    rows = g.rows
    chunk = 0
    filled = 0
    for j in range(1, n):
        for i in range(j):
            chunk = (chunk << 1) | (rows[i] >> j & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + 63))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + 63))
    return "".join(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format

    First non-comment line is ``n m``, followed by ``m`` lines ``u v``
    (0-based). ``#`` starts a comment.

    Args:
        text: Whole file contents

    Returns:
        Graph with the listed edges
    """
    header = None
    edges: List[Tuple[int, int]] = []

    for line_number, raw_line in enumerate(text.splitlines(), 1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue

        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListSyntaxError(f"line {line_number}: expected two integers, got {raw_line.strip()!r}")
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListSyntaxError(f"line {line_number}: expected two integers, got {raw_line.strip()!r}")

        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))

    if header is None:
        raise EdgeListSyntaxError("missing 'n m' header line")

    n, m = header
    if m != len(edges):
        raise EdgeListSyntaxError(f"header announces {m} edges, found {len(edges)}")

    return Graph.from_edge_list(n, edges)


def encode_edge_list(g: Graph) -> str:
    """Write a graph in the edge-list text format"""
    edges = list(g.edges())
    lines = [f"{g.order} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def read_graphs(
    lines: Iterable[str],
    input_format: str = "graph6",
) -> Iterator[Tuple[int, Union[Graph, LineError]]]:
    """Read a batch of graphs

    graph6 input holds one graph per non-blank line; edge-list input is a
    single graph. Errors are yielded in place of the graph so one bad line
    does not end the batch.

    Args:
        lines: Input lines
        input_format: ``graph6`` or ``edgelist``

    Yields:
        ``(line_number, graph_or_error)`` pairs
    """
    if input_format == "edgelist":
        try:
            yield 1, parse_edge_list("".join(lines))
        except AllianceError as e:
            yield 1, LineError(1, e)
        return

    if input_format != "graph6":
        raise InputError(f"Unsupported input format: {input_format}")

    for line_number, raw_line in enumerate(lines, 1):
        line = raw_line.strip()
        if not line:
            continue
        try:
            yield line_number, parse_graph6(line)
        except AllianceError as e:
            logger.warning(f"Skipping line {line_number}: {e}")
            yield line_number, LineError(line_number, e)
