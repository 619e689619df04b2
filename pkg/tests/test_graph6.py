"""graph6 codec against the published format and a reference implementation."""

import networkx as nx
import pytest

from conftest import random_graph
from specgraph import (Graph, Graph6Error, ParameterError, complete_graph,
                       empty_graph, graph6_decode, graph6_encode, star_graph, to_dot)
from specgraph.search import enumerate_graphs


def test_reference_values():
    assert graph6_encode(complete_graph(5)) == "D~{"
    assert graph6_encode(empty_graph(1)) == "@"
    assert graph6_decode("D~{") == complete_graph(5)
    assert graph6_decode("@") == empty_graph(1)


def test_header_is_stripped():
    assert graph6_decode(">>graph6<<D~{") == complete_graph(5)


def test_roundtrip_on_all_small_graphs():
    for n in range(1, 8):
        for g in enumerate_graphs(n):
            assert graph6_decode(graph6_encode(g)) == g


def test_roundtrip_random_orders_up_to_ten(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 10))
        assert graph6_decode(graph6_encode(g)) == g


def test_matches_networkx(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 12))
        ours = graph6_encode(g)
        ref = nx.Graph()
        ref.add_nodes_from(range(g.order))
        ref.add_edges_from(g.edges())
        assert ours == nx.to_graph6_bytes(ref, header=False).decode().strip()
        back = nx.from_graph6_bytes(ours.encode())
        assert set(back.edges()) == {tuple(e) for e in g.edges()}


def test_malformed_inputs():
    with pytest.raises(Graph6Error):
        graph6_decode("")
    with pytest.raises(Graph6Error):
        graph6_decode("D~")  # truncated data
    with pytest.raises(Graph6Error):
        graph6_decode("D~{{")  # extra data
    with pytest.raises(Graph6Error):
        graph6_decode("A\x1f")  # byte below 63
    with pytest.raises(Graph6Error):
        graph6_decode("Aé")  # not ascii
    with pytest.raises(Graph6Error):
        graph6_decode("~??")  # long form marker


def test_trailing_padding_must_be_zero():
    assert graph6_decode("A_") == complete_graph(2)  # single data bit set, pad clear
    with pytest.raises(Graph6Error):
        graph6_decode("A@")  # a padding bit set


def test_encode_order_cap():
    with pytest.raises(ParameterError):
        graph6_encode(empty_graph(63))


def test_dot_output():
    text = to_dot(star_graph(2))
    assert "graph G {" in text
    assert "0 -- 1;" in text and "0 -- 2;" in text
