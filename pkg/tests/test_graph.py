"""Graph container, parsing, squaring, subtraction."""

import pytest
from hypothesis import given, settings, strategies as st

from hamsquare.graph import (
    Graph,
    GraphParseError,
    edge,
    parse_edge_list,
    path_graph,
    cycle_graph,
    complete_graph,
    complete_bipartite,
    is_ham_cycle,
    is_ham_path,
)


def test_edge_normalizes():
    assert edge(2, 1) == (1, 2)
    assert edge(1, 2) == (1, 2)


def test_edge_rejects_loop():
    with pytest.raises(ValueError):
        edge(3, 3)


def test_graph_validates_edges():
    with pytest.raises(ValueError):
        Graph(frozenset({0, 1}), frozenset({(1, 0)}))  # not normalized
    with pytest.raises(ValueError):
        Graph(frozenset({0}), frozenset({(0, 1)}))  # undeclared endpoint


def test_equality_ignores_identity_of_adjacency():
    a = Graph.from_edges([(0, 1), (1, 2)])
    b = Graph.from_edges([(1, 2), (0, 1)])
    assert a == b
    assert hash(a) == hash(b)


def test_parse_basic_path():
    g = parse_edge_list("0 1\n1 2")
    assert g.vertices == frozenset({0, 1, 2})
    assert g.edges == frozenset({(0, 1), (1, 2)})


def test_parse_collapses_duplicates():
    g = parse_edge_list("0 1\n0 1\n1 0")
    assert g.m == 1


def test_parse_rejects_self_loop():
    with pytest.raises(GraphParseError) as exc:
        parse_edge_list("0 0")
    assert exc.value.line_no == 1


def test_parse_comments_isolated_and_errors():
    g = parse_edge_list("# header\n0 1  # inline\n\n7\n")
    assert 7 in g.vertices
    assert g.degree(7) == 0
    with pytest.raises(GraphParseError):
        parse_edge_list("0 1 2")
    with pytest.raises(GraphParseError):
        parse_edge_list("a b")
    with pytest.raises(GraphParseError):
        parse_edge_list("-1 2")


def _square_by_bfs(g: Graph) -> Graph:
    # independent reference: join vertices at BFS distance exactly 1 or 2
    es = set()
    vs = g.sorted_vertices()
    for u in vs:
        dist = g.distances_from(u)
        for v in vs:
            if v != u and dist.get(v, 99) <= 2:
                es.add(edge(u, v))
    return Graph(g.vertices, frozenset(es))


def test_square_k2_fixed():
    k2 = path_graph(2)
    assert k2.square() == k2


def test_square_p3_is_triangle():
    assert path_graph(3).square() == complete_graph(3)


def test_square_c5_is_k5():
    # every pair in C5 is at distance <= 2
    assert cycle_graph(5).square() == complete_graph(5)


@pytest.mark.parametrize("g", [
    path_graph(6), cycle_graph(7), complete_bipartite(2, 3),
    Graph.from_edges([(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)]),
])
def test_square_matches_bfs_reference(g):
    assert g.square() == _square_by_bfs(g)


def test_subtract_triangle_with_pendant():
    g = Graph.from_edges([(0, 1), (1, 2), (0, 2), (0, 3)])
    tri = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    left = g.subtract(tri)
    assert left.edges == frozenset({(0, 3)})
    assert left.vertices == frozenset({0, 3})


def test_subtract_self_gives_empty():
    g = cycle_graph(4)
    left = g.subtract(g)
    assert left.n == 0 and left.m == 0


def test_subtract_bowtie_one_triangle():
    bow = Graph.from_edges([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])
    tri = Graph.from_edges([(0, 1), (1, 2), (0, 2)])
    other = bow.subtract(tri)
    assert other == Graph.from_edges([(0, 3), (3, 4), (0, 4)])


def test_shortest_path_and_distances():
    g = cycle_graph(6)
    assert g.shortest_path(0, 3) == [0, 1, 2, 3]
    d = g.distances_from(0)
    assert d[3] == 3 and d[5] == 1


def test_relabelled_roundtrip():
    g = cycle_graph(4)
    h = g.relabelled({0: 10, 1: 11, 2: 12, 3: 13})
    assert h.has_edge(10, 11)
    assert h.relabelled({10: 0, 11: 1, 12: 2, 13: 3}) == g


def test_to_dot_contains_edges_and_highlight():
    tri = complete_graph(3)
    dot = tri.to_dot(highlight=[(0, 1)])
    assert "graph G {" in dot
    assert "0 -- 1 [color=red" in dot
    assert "1 -- 2;" in dot


def test_is_ham_cycle_and_path_checkers():
    c4 = cycle_graph(4)
    assert is_ham_cycle(c4, [0, 1, 2, 3])
    assert not is_ham_cycle(c4, [0, 1, 3, 2])  # 1-3 is not an edge
    assert not is_ham_cycle(c4, [0, 1, 2])  # misses a vertex
    p = path_graph(4)
    assert is_ham_path(p, [0, 1, 2, 3], 0, 3)
    assert not is_ham_path(p, [0, 1, 2, 3], 0, 2)


@st.composite
def graphs(draw):
    n = draw(st.integers(min_value=1, max_value=8))
    pool = [(i, j) for i in range(n) for j in range(i + 1, n)]
    es = draw(st.lists(st.sampled_from(pool), unique=True, max_size=len(pool))
              if pool else st.just([]))
    return Graph.from_edges(es, isolated=range(n))


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_serialize_parse_roundtrip(g):
    assert parse_edge_list(g.edge_list_text()) == g


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_square_grows_monotonically(g):
    sq = g.square()
    assert g.edges <= sq.edges
    assert sq == _square_by_bfs(g)
