import networkx as nx
import pytest

from ramsey_trails.graph import Graph, all_labeled_graphs
from ramsey_trails.graph6 import Graph6Error, decode_graph6, encode_graph6


def nx_graph6(g: Graph) -> str:
    """Reference encoding via networkx, the de-facto standard implementation."""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.to_graph6_bytes(h, header=False).decode().strip()


def test_fixed_encodings():
    assert encode_graph6(Graph.complete(3)) == "Bw"
    assert encode_graph6(Graph.empty(2)) == "A?"


@pytest.mark.parametrize("n", range(1, 6))
def test_roundtrip_and_reference_agreement(n):
    for g in all_labeled_graphs(n):
        text = encode_graph6(g)
        assert decode_graph6(text) == g
        assert text == nx_graph6(g)


def test_long_form():
    g = Graph.from_edges(100, [(0, 99), (1, 2)])
    text = encode_graph6(g)
    assert text.startswith("~")
    assert decode_graph6(text) == g
    assert text == nx_graph6(g)


def test_optional_header_prefix():
    assert decode_graph6(">>graph6<<Bw") == Graph.complete(3)


def test_distinct_errors():
    with pytest.raises(Graph6Error, match="empty"):
        decode_graph6("")
    with pytest.raises(Graph6Error, match="invalid graph6 byte"):
        decode_graph6("B!")
    with pytest.raises(Graph6Error, match="length mismatch"):
        decode_graph6("Bww")
    with pytest.raises(Graph6Error, match="length mismatch"):
        decode_graph6("D")
    with pytest.raises(Graph6Error, match="padding"):
        # K_3 body with a stray low bit set
        decode_graph6("B" + chr(63 + 0b111001))
    with pytest.raises(Graph6Error, match="truncated long-form"):
        decode_graph6("~A")
    with pytest.raises(Graph6Error, match="not supported"):
        decode_graph6("~~AAAAAAA")
