import math

import networkx as nx
import pytest

from heavycycle.graphs import (
    Graph,
    Graph6Error,
    articulation_points,
    biconnected_component_masks,
    distance,
    from_graph6,
    induced,
    is_connected,
    is_two_connected,
    shortest_path,
    to_graph6,
)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph.from_edges(10, edges)


def test_basic_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.edge_count == 3
    assert g.degrees == (1, 2, 2, 1)
    assert g.has_edge(1, 2) and not g.has_edge(0, 3)
    assert g.neighbors(1) == (0, 2)
    assert list(g.edges()) == [(0, 1), (1, 2), (2, 3)]


def test_construction_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(0, 3)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(2, (1, 0))  # asymmetric


def test_named_constructors():
    assert Graph.complete(4).edge_count == 6
    assert Graph.cycle(5).degrees == (2,) * 5
    assert Graph.star(5).degrees == (5, 1, 1, 1, 1, 1)
    assert Graph.path(1).n == 1
    with pytest.raises(ValueError):
        Graph.cycle(2)


def test_with_without_edge():
    g = Graph.path(3)
    assert g.with_edge(0, 2).edge_count == 3
    assert g.without_edge(0, 1).degrees == (0, 1, 1)
    with pytest.raises(ValueError):
        g.without_edge(0, 2)


# -- graph6 ----------------------------------------------------------------

def test_graph6_k2_by_hand():
    # n=2 -> 'A'; single bit 1 padded to 100000 -> 32+63=95 = '_'
    assert to_graph6(Graph.complete(2)) == "A_"
    assert from_graph6("A_") == Graph.complete(2)


def test_graph6_single_vertex():
    assert to_graph6(Graph.empty(1)) == "@"
    assert from_graph6("@") == Graph.empty(1)


def test_graph6_header_accepted():
    assert from_graph6(">>graph6<<A_") == Graph.complete(2)


@pytest.mark.parametrize(
    "g",
    [
        Graph.empty(1),
        Graph.complete(2),
        Graph.cycle(5),
        Graph.complete(7),
        Graph.star(6),
        petersen(),
        Graph.from_edges(6, [(0, 1), (0, 2), (3, 4)]),
    ],
)
def test_graph6_roundtrip_and_reference_codec(g):
    s = to_graph6(g)
    assert from_graph6(s) == g
    ref = nx.from_graph6_bytes(s.encode())
    assert set(ref.nodes) == set(range(g.n))
    assert {frozenset(e) for e in ref.edges} == {frozenset(e) for e in g.edges()}
    ours = from_graph6(nx.to_graph6_bytes(ref, header=False).strip())
    assert ours == g


def test_graph6_rejects_bad_characters():
    with pytest.raises(Graph6Error) as exc:
        from_graph6("A" + chr(10))
    assert exc.value.offset == 1


def test_graph6_rejects_length_mismatch():
    with pytest.raises(Graph6Error):
        from_graph6("D")  # n=5 needs body bytes
    with pytest.raises(Graph6Error):
        from_graph6("A__")  # trailing junk


def test_graph6_rejects_nonzero_padding():
    # K2 body byte with a padding bit set: 100001 -> 33+63=96='`'
    with pytest.raises(Graph6Error):
        from_graph6("A`")


def test_graph6_rejects_long_form():
    with pytest.raises(Graph6Error):
        from_graph6("~??")
    with pytest.raises(Graph6Error):
        to_graph6(Graph.empty(63))


# -- connectivity ----------------------------------------------------------

def test_connectivity():
    assert is_connected(Graph.empty(1))
    assert is_connected(Graph.cycle(4))
    assert not is_connected(Graph.empty(2))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_articulation_points():
    assert articulation_points(Graph.path(5)) == {1, 2, 3}
    assert articulation_points(Graph.cycle(5)) == frozenset()
    assert articulation_points(Graph.star(4)) == {0}
    # two triangles sharing vertex 2
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert articulation_points(g) == {2}


def test_two_connected():
    assert is_two_connected(Graph.cycle(3))
    assert is_two_connected(petersen())
    assert not is_two_connected(Graph.complete(2))
    assert not is_two_connected(Graph.path(4))
    assert not is_two_connected(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4)]))


def test_biconnected_blocks():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    blocks = sorted(biconnected_component_masks(g))
    assert blocks == [0b00111, 0b11100]
    path_blocks = biconnected_component_masks(Graph.path(4))
    assert sorted(path_blocks) == [0b0011, 0b0110, 0b1100]
    ref = list(nx.biconnected_components(nx.petersen_graph()))
    assert len(biconnected_component_masks(petersen())) == len(ref) == 1


def test_distance():
    g = Graph.path(4)
    assert distance(g, 0, 3) == 3
    assert distance(g, 2, 2) == 0
    assert distance(Graph.empty(2), 0, 1) == math.inf
    with pytest.raises(ValueError):
        distance(g, 0, 9)


def test_shortest_path():
    g = Graph.cycle(6)
    assert shortest_path(g, 0, 3) in ([0, 1, 2, 3], [0, 5, 4, 3])
    assert shortest_path(g, 0, 3, forbidden=0b000010) == [0, 5, 4, 3]
    assert shortest_path(Graph.empty(2), 0, 1) is None


def test_induced():
    g = petersen()
    sub, remap = induced(g, [0, 1, 2, 5])
    assert sub.n == 4
    assert remap == {0: 0, 1: 1, 2: 2, 5: 3}
    assert sub.has_edge(0, 1) and sub.has_edge(1, 2) and sub.has_edge(0, 3)
    assert not sub.has_edge(0, 2)
    with pytest.raises(ValueError):
        induced(g, [0, 99])
