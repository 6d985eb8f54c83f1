import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import graphs
from pdthrottle.generators import complete, cycle, path, spider
from pdthrottle.graph import (
    MAX_ORDER,
    GraphError,
    VertexSet,
    build_graph,
    closed_neighborhood,
    degree,
    format_edge_list,
    graph_hash,
    induced_subgraph,
    is_connected,
    max_degree,
    min_degree,
    parse_edge_list,
    popcount,
    require_connected,
)


def test_build_small_graphs():
    P2 = build_graph(2, [(0, 1)])
    assert P2 == path(2)
    C4 = build_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert C4 == cycle(4)
    assert C4.m == 4


def test_duplicate_edges_merge():
    G = build_graph(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert G.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_build_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        build_graph(3, edges)


def test_capacity_cap():
    build_graph(MAX_ORDER, [])
    with pytest.raises(GraphError):
        build_graph(MAX_ORDER + 1, [])


def test_closed_neighborhood_examples():
    assert closed_neighborhood(path(4), [1]).sorted() == [0, 1, 2]
    assert closed_neighborhood(complete(5), [0]).sorted() == [0, 1, 2, 3, 4]
    assert closed_neighborhood(cycle(6), [0, 3]).sorted() == list(range(6))


def test_degree_queries():
    assert max_degree(cycle(9)) == 2
    assert max_degree(spider([7, 2, 2, 2, 2, 2])) == 6
    assert min_degree(path(5)) == 1
    assert degree(path(5), 2) == 2
    assert not is_connected(build_graph(4, [(0, 1), (2, 3)]))
    with pytest.raises(GraphError):
        require_connected(build_graph(4, [(0, 1), (2, 3)]))


def test_vertex_set_algebra():
    A = VertexSet.of(6, [0, 2, 4])
    B = VertexSet.of(6, [2, 3])
    assert (A | B).sorted() == [0, 2, 3, 4]
    assert (A & B).sorted() == [2]
    assert (A - B).sorted() == [0, 4]
    assert A.complement().sorted() == [1, 3, 5]
    assert len(A) == 3 and 4 in A and 5 not in A
    assert VertexSet.of(6, [2]) <= A
    with pytest.raises(GraphError):
        VertexSet.of(3, [3])


def test_induced_subgraph_renumbers():
    H = induced_subgraph(cycle(6), [0, 1, 2])
    assert H.edges() == [(0, 1), (1, 2)]


def test_graph_hash_depends_on_numbering_only():
    assert graph_hash(path(4)) == graph_hash(build_graph(4, [(2, 3), (1, 2), (0, 1)]))
    assert graph_hash(path(4)) != graph_hash(build_graph(4, [(0, 1), (1, 3), (3, 2)]))


def test_parse_edge_list_comments_and_blank_lines():
    G = parse_edge_list("# a path\n3 2\n\n0 1  # first\n1 2\n")
    assert G == path(3)


@pytest.mark.parametrize("text, needle", [
    ("", "empty"),
    ("3\n", "line 1"),
    ("3 1\n0 x\n", "line 2"),
    ("3 1\n0 5\n", "line 2"),
    ("3 1\n1 1\n", "line 2"),
    ("3 2\n0 1\n", "declares 2"),
    ("3 1\n0 1 2\n", "line 2"),
])
def test_parse_edge_list_errors(text, needle):
    with pytest.raises(GraphError, match=needle):
        parse_edge_list(text)


@given(graphs(max_n=12))
def test_adjacency_is_symmetric_and_loopless(G):
    for v in range(G.n):
        assert not G.adj[v] >> v & 1
        for u in range(G.n):
            assert bool(G.adj[v] >> u & 1) == bool(G.adj[u] >> v & 1)


@given(graphs(max_n=12))
def test_edge_list_round_trip(G):
    H = parse_edge_list(format_edge_list(G))
    assert H == G and graph_hash(H) == graph_hash(G)


@given(graphs(max_n=10), st.data())
def test_closed_neighborhood_bounds(G, data):
    S = data.draw(st.lists(st.integers(0, G.n - 1), unique=True))
    N = closed_neighborhood(G, S)
    assert len(N) <= sum(degree(G, v) + 1 for v in S)
    assert set(S) <= set(N)
    assert closed_neighborhood(G, range(G.n)).bits == G.full
    assert closed_neighborhood(G, []).bits == 0


@given(st.integers(1, 64), st.data())
def test_vertex_set_matches_python_sets(n, data):
    a = set(data.draw(st.lists(st.integers(0, n - 1))))
    b = set(data.draw(st.lists(st.integers(0, n - 1))))
    A, B = VertexSet.of(n, a), VertexSet.of(n, b)
    assert set(A | B) == a | b
    assert set(A & B) == a & b
    assert set(A - B) == a - b
    assert set(A.complement()) == set(range(n)) - a
    assert len(A) == len(a) == popcount(A.bits)
