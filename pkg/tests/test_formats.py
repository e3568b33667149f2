"""Tests for graph6 and edge-list interchange"""

import networkx as nx
import pytest
from hypothesis import given, settings

from graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    empty,
    encode_edge_list,
    encode_graph6,
    parse_edge_list,
    parse_graph6,
    read_graphs,
)
from utils.errors import (
    EdgeListSyntaxError,
    LineError,
    LoopEdge,
    MalformedHeader,
    OrderTooLargeForFormat,
    TrailingGarbage,
    TruncatedBitVector,
)

from tests.strategies import graphs, to_networkx


class TestGraph6:
    def test_parse_k4(self):
        assert parse_graph6("C~") == complete(4)

    def test_encode_k4(self):
        assert encode_graph6(complete(4)) == "C~"

    def test_single_vertex(self):
        assert encode_graph6(complete(1)) == "@"
        assert parse_graph6("@") == complete(1)

    def test_cycle_encoding_shape(self):
        text = encode_graph6(cycle(5))
        assert len(text) == 3
        assert text[0] == "D"
        assert parse_graph6(text) == cycle(5)

    def test_header_is_stripped(self):
        assert parse_graph6(">>graph6<<C~\n") == complete(4)

    def test_trailing_garbage(self):
        with pytest.raises(TrailingGarbage):
            parse_graph6("C~extra")

    def test_truncated(self):
        with pytest.raises(TruncatedBitVector):
            parse_graph6("E")

    @pytest.mark.parametrize("text", ["", "   ", "C ~", "Cé", "?", "~~~~"])
    def test_malformed(self, text):
        with pytest.raises(MalformedHeader):
            parse_graph6(text)

    def test_order_too_large(self):
        with pytest.raises(OrderTooLargeForFormat):
            encode_graph6(empty(63))

    def test_largest_short_form(self):
        g = complete_bipartite(31, 31)
        assert parse_graph6(encode_graph6(g)) == g

    def test_parse_errors_are_value_errors(self):
        with pytest.raises(ValueError):
            parse_graph6("C~~")

    @settings(max_examples=100)
    @given(graphs(max_order=20))
    def test_round_trip(self, g):
        assert parse_graph6(encode_graph6(g)) == g

    @settings(max_examples=100)
    @given(graphs(max_order=20))
    def test_matches_networkx_encoder(self, g):
        expected = nx.to_graph6_bytes(to_networkx(g), nodes=range(g.order), header=False).strip()
        assert encode_graph6(g).encode("ascii") == expected


class TestEdgeList:
    def test_parse_with_comments(self):
        text = "# K4\n4 6\n0 1\n0 2\n0 3 # spoke\n1 2\n1 3\n\n2 3\n"
        assert parse_edge_list(text) == complete(4)

    def test_round_trip(self):
        g = cycle(6)
        assert parse_edge_list(encode_edge_list(g)) == g
        assert encode_edge_list(complete(3)).splitlines() == ["3 3", "0 1", "0 2", "1 2"]

    def test_edge_count_mismatch(self):
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("3 2\n0 1\n")

    def test_bad_token_names_line(self):
        with pytest.raises(EdgeListSyntaxError, match="line 3"):
            parse_edge_list("3 2\n0 1\n1 x\n")

    def test_missing_header(self):
        with pytest.raises(EdgeListSyntaxError):
            parse_edge_list("# nothing\n")

    def test_loop(self):
        with pytest.raises(LoopEdge):
            parse_edge_list("2 1\n1 1\n")

    def test_duplicates_collapse(self):
        g = parse_edge_list("2 2\n0 1\n1 0\n")
        assert g.size == 1


class TestReadGraphs:
    def test_batch_isolates_bad_lines(self):
        items = list(read_graphs(["C~\n", "\n", "C~extra\n", "@\n"]))
        assert [line for line, _ in items] == [1, 3, 4]
        assert items[0][1] == complete(4)
        assert isinstance(items[1][1], LineError)
        assert items[1][1].line_number == 3
        assert items[1][1].exit_code == 2
        assert items[2][1] == Graph(1, [0])

    def test_edgelist_is_one_graph(self):
        items = list(read_graphs(["3 1\n", "0 2\n"], "edgelist"))
        assert len(items) == 1
        assert items[0][1] == Graph.from_edge_list(3, [(0, 2)])

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            list(read_graphs(["C~"], "adjacency"))
