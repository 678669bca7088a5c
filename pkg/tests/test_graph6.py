import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rtlab.graph6 import from_edge_json, from_graph6, to_edge_json, to_graph6
from rtlab.graphs import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    empty_graph,
    gnp_graph,
    petersen_graph,
)


def test_known_encodings():
    # values from the published format description
    assert to_graph6(complete_graph(3)) == "Bw"
    assert to_graph6(Graph.from_edges(2, [(0, 1)])) == "A_"
    assert to_graph6(empty_graph(1)) == "@"
    assert to_graph6(complete_graph(4)) == "C~"


def test_roundtrip_basics():
    for g in (empty_graph(7), complete_graph(9), cycle_graph(11), petersen_graph()):
        assert from_graph6(to_graph6(g)) == g


def test_header_tolerated():
    g = cycle_graph(6)
    assert from_graph6(">>graph6<<" + to_graph6(g)) == g


def test_large_order_size_encoding():
    g = empty_graph(100)
    assert from_graph6(to_graph6(g)) == g


def test_bad_payloads():
    with pytest.raises(GraphError):
        from_graph6("")
    with pytest.raises(GraphError):
        from_graph6("Bw~~~")  # trailing junk


@given(st.integers(1, 13), st.integers(0, 2**32 - 1))
@settings(max_examples=100, deadline=None)
def test_cross_check_with_networkx(n, seed):
    g = gnp_graph(n, 0.5, seed)
    mine = to_graph6(g)
    theirs = nx.to_graph6_bytes(_to_nx(g), header=False).decode().strip()
    assert mine == theirs
    back = nx.from_graph6_bytes(mine.encode())
    assert _from_nx(back) == g
    assert from_graph6(theirs) == g


def _to_nx(g: Graph):
    out = nx.Graph()
    out.add_nodes_from(range(g.n))
    out.add_edges_from(g.edges())
    return out


def _from_nx(h) -> Graph:
    return Graph.from_edges(h.number_of_nodes(), list(h.edges()))


def test_edge_json_roundtrip():
    g = gnp_graph(9, 0.4, 3)
    assert from_edge_json(to_edge_json(g)) == g
