import random

import pytest

from cliquecover import (Graph, GraphParseError, UnsupportedSizeError,
                         decode_edgelist, decode_graph6, encode_edgelist,
                         encode_graph6, to_dot)
from conftest import random_graph


class TestGraph6:
    def test_k3_reference_encoding(self):
        # bits 111000 -> 56+63 = 119 = 'w'
        assert decode_graph6("Bw").adj == Graph.complete(3).adj
        assert encode_graph6(Graph.complete(3)) == "Bw"

    def test_k4_reference_encoding(self):
        # bits 111111 -> 63+63 = 126 = '~'
        assert decode_graph6("C~").adj == Graph.complete(4).adj
        assert encode_graph6(Graph.complete(4)) == "C~"

    def test_empty_and_singleton(self):
        assert encode_graph6(Graph.empty(0)) == "?"
        assert decode_graph6("?").n == 0
        assert decode_graph6("@").n == 1

    def test_header_stripped(self):
        assert decode_graph6(">>graph6<<Bw").adj == Graph.complete(3).adj

    def test_roundtrip_random(self):
        rng = random.Random(2)
        for _ in range(60):
            g = random_graph(rng, rng.randint(0, 12))
            assert decode_graph6(encode_graph6(g)).adj == g.adj

    def test_long_form_rejected(self):
        with pytest.raises(GraphParseError):
            decode_graph6("~??")

    def test_bad_byte_offset(self):
        exc = pytest.raises(GraphParseError, decode_graph6, "C" + chr(30)).value
        assert exc.offset == 1

    def test_truncated(self):
        with pytest.raises(GraphParseError, match="truncated"):
            decode_graph6("E")  # n=6 needs 3 body bytes

    def test_trailing_bytes(self):
        with pytest.raises(GraphParseError, match="trailing"):
            decode_graph6("Bww")

    def test_encode_size_cap(self):
        with pytest.raises(UnsupportedSizeError):
            encode_graph6(Graph.empty(63))


class TestEdgeList:
    def test_roundtrip(self):
        g = Graph.from_edges(5, [(0, 1), (2, 4)])
        assert decode_edgelist(encode_edgelist(g)).adj == g.adj

    def test_header_and_comments(self):
        text = "# a comment\nn 6\n0 1  # trailing\n\n4 5\n"
        g = decode_edgelist(text)
        assert g.n == 6
        assert list(g.edges()) == [(0, 1), (4, 5)]

    def test_n_inferred_from_max_index(self):
        g = decode_edgelist("0 3\n")
        assert g.n == 4

    def test_index_beyond_header(self):
        with pytest.raises(GraphParseError):
            decode_edgelist("n 3\n0 5\n")

    def test_malformed_line(self):
        with pytest.raises(GraphParseError, match="line 2"):
            decode_edgelist("0 1\n0 1 2\n")

    def test_self_loop(self):
        with pytest.raises(GraphParseError):
            decode_edgelist("1 1\n")


class TestDot:
    def test_edges_and_isolated_vertices(self):
        g = Graph.from_edges(4, [(0, 2)])
        dot = to_dot(g)
        assert dot.startswith("graph g {")
        assert "  0 -- 2;" in dot
        assert "  1;" in dot and "  3;" in dot
