import pytest
from hypothesis import given, strategies as st

from eocd.graph import (
    Graph,
    GraphError,
    bfs_distances,
    closed_neighborhood,
    connected_components,
    contract_edges,
    dump_edge_list,
    induced_subgraph,
    is_tree,
    open_neighborhood,
    parse_edge_list,
)


def test_basic_adjacency():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.neighbors(1) == (0, 2)
    assert g.degree(0) == 1
    assert g.m == 3
    assert g.has_edge(2, 1)
    assert not g.has_edge(0, 3)


def test_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])


def test_neighborhoods():
    g = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert open_neighborhood(g, 0) == frozenset({1, 2, 3})
    assert closed_neighborhood(g, 1) == frozenset({0, 1})


def test_bfs_distances_skips_unreachable():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    dist = bfs_distances(g, 0)
    assert dist == {0: 0, 1: 1, 2: 2}


def test_connected_components_ordering():
    g = Graph(6, [(4, 5), (0, 2), (1, 3)])
    comps = connected_components(g)
    assert comps == [frozenset({0, 2}), frozenset({1, 3}), frozenset({4, 5})]


def test_is_tree():
    assert is_tree(Graph(3, [(0, 1), (1, 2)]))
    assert not is_tree(Graph(3, [(0, 1), (1, 2), (0, 2)]))
    assert not is_tree(Graph(4, [(0, 1), (2, 3)]))  # forest, not a tree


def test_contract_matching_edge():
    # contracting the middle edge of P4 gives P3
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    h, mapping = contract_edges(g, [(1, 2)])
    assert h.n == 3
    assert mapping[1] == mapping[2]
    assert sorted(h.edges()) == [(0, 1), (1, 2)]


def test_contract_rejects_non_matching():
    g = Graph(3, [(0, 1), (1, 2)])
    with pytest.raises(GraphError):
        contract_edges(g, [(0, 1), (1, 2)])


def test_induced_subgraph():
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    h, back = induced_subgraph(g, [1, 2, 4])
    assert h.n == 3
    assert sorted(h.edges()) == [(0, 1)]
    assert sorted(back.values()) == [1, 2, 4]


def test_edge_list_format_round_trip():
    g = Graph(3, [(0, 1), (1, 2)], labels={0: "a", 2: "c"})
    text = dump_edge_list(g)
    h = parse_edge_list(text)
    assert h.n == g.n
    assert sorted(h.edges()) == sorted(g.edges())
    assert h.labels == {0: "a", 2: "c"}


def test_parse_edge_list_comments_and_errors():
    g = parse_edge_list("# a triangle\n3 3\n0 1\n1 2\n0 2\n")
    assert g.m == 3
    with pytest.raises(GraphError):
        parse_edge_list("3 1\n0 1\n1 2\n")  # wrong edge count
    with pytest.raises(GraphError):
        parse_edge_list("not a header\n")


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return Graph(n, edges)


@given(graphs())
def test_dump_parse_identity(g):
    assert sorted(parse_edge_list(dump_edge_list(g)).edges()) == sorted(g.edges())


@given(graphs())
def test_components_partition_vertices(g):
    comps = connected_components(g)
    seen = [v for c in comps for v in c]
    assert sorted(seen) == list(range(g.n))
