import networkx as nx
import pytest
from hypothesis import given

from strategies import connected_graphs
from eccbounds import graph6
from eccbounds.constructions import complete, path
from eccbounds.enumeration import labeled_connected
from eccbounds.graph import Graph, GraphError, from_edge_list


def test_known_strings():
    assert graph6.encode(complete(3)) == "Bw"
    assert graph6.encode(from_edge_list(1, [])) == "@"
    assert graph6.decode("Bw") == complete(3)
    assert graph6.decode("@").m == 0


def test_matches_networkx_writer():
    for g in (path(5), complete(7), path(63), path(64)):
        h = nx.Graph(g.edges())
        h.add_nodes_from(range(g.n))
        expected = nx.to_graph6_bytes(h, header=False).decode().strip()
        assert graph6.encode(g) == expected


def test_long_header_form():
    text = graph6.encode(path(63))
    assert text.startswith("~")
    assert graph6.decode(text) == path(63)


def test_round_trip_every_connected_graph_up_to_six():
    for n in range(1, 7):
        for g in labeled_connected(n):
            assert graph6.decode(graph6.encode(g)) == g


@pytest.mark.parametrize("bad", ["", "B", "Bww", "B\x7f", "?", "Bx", "~~??", "~??A"])
def test_malformed(bad):
    with pytest.raises(GraphError):
        graph6.decode(bad)


def test_decode_strips_line_ending():
    assert graph6.decode("Bw\n") == complete(3)


@given(connected_graphs(max_n=64))
def test_round_trip_random(g: Graph):
    assert graph6.decode(graph6.encode(g)) == g
    h = nx.from_graph6_bytes(graph6.encode(g).encode())
    assert sorted(tuple(sorted(e)) for e in h.edges()) == g.edges()
