import pytest

from medgraph.errors import Disconnected, LoopEdge, ParseError
from medgraph.graph import (all_pairs_distances, build_graph, power_graph,
                            read_graph, write_graph)


def test_build_and_distances():
    g = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    d = all_pairs_distances(g)
    assert d(0, 3) == 3 and d(0, 0) == 0 and d(1, 3) == 2
    assert d.diameter == 3


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        build_graph(2, [(0, 0)])


def test_disconnected_rejected():
    with pytest.raises(Disconnected):
        build_graph(4, [(0, 1), (2, 3)])


def test_out_of_range_rejected():
    with pytest.raises(Exception):
        build_graph(2, [(0, 5)])


def test_read_write_round_trip():
    text = "4 3\n0 1\n1 2\n2 3\n"
    g = read_graph(text)
    assert write_graph(g) == text
    assert write_graph(read_graph(write_graph(g))) == write_graph(g)


def test_read_comments_and_errors():
    g = read_graph("# a path\n3 2\n0 1\n1 2\n")
    assert g.n == 3
    with pytest.raises(ParseError):
        read_graph("3 2\n0 1\n")          # missing edge
    with pytest.raises(ParseError):
        read_graph("nonsense\n")


def test_power_graph():
    g = build_graph(5, [(i, i + 1) for i in range(4)])
    g2 = power_graph(g, 2)
    assert g2.has_edge(0, 2) and g2.has_edge(0, 1) and not g2.has_edge(0, 3)
    assert power_graph(g, 1) is g


def test_distances_match_networkx():
    import networkx as nx
    g = build_graph(7, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (4, 5),
                        (5, 6), (2, 6)])
    d = all_pairs_distances(g)
    lengths = dict(nx.all_pairs_shortest_path_length(nx.Graph(g.edges())))
    for u in range(7):
        for v in range(7):
            assert d(u, v) == lengths[u][v]
