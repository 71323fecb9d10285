"""Exhaustive search oracle, cross-checked against permutation enumeration."""

import itertools

import pytest

from hamsquare.graph import (
    Graph, edge, path_graph, cycle_graph, complete_graph, complete_bipartite,
    is_ham_cycle, is_ham_path,
)
from hamsquare.oracle import (
    BudgetExceeded,
    EdgeConstrainedSearch,
    find_ham_cycle,
    find_ham_path,
    cycle_with,
    path_with,
    is_ham_connected,
    verify_property,
    PROPERTY_KINDS,
)

BOWTIE = Graph.from_edges([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def _perm_has_cycle(host, required=frozenset()):
    """Ground truth by brute permutation: any hamiltonian cycle using required."""
    vs = host.sorted_vertices()
    if host.n == 1 or host.n == 2:
        return False
    first = vs[0]
    for rest in itertools.permutations(vs[1:]):
        order = [first, *rest]
        if not is_ham_cycle(host, order):
            continue
        es = {edge(order[i], order[(i + 1) % len(order)])
              for i in range(len(order))}
        if required <= es:
            return True
    return False


def _perm_has_path(host, x, y):
    inner = [v for v in host.sorted_vertices() if v not in (x, y)]
    for mid in itertools.permutations(inner):
        if is_ham_path(host, [x, *mid, y]):
            return True
    return False


CROSS_CHECK = [
    path_graph(4), path_graph(4).square(), cycle_graph(5), cycle_graph(6),
    complete_graph(4), BOWTIE, BOWTIE.square(), complete_bipartite(2, 3),
    Graph.from_edges([(0, 1), (0, 2), (0, 3)]),  # star: no cycle, few paths
]


@pytest.mark.parametrize("host", CROSS_CHECK)
def test_cycle_existence_matches_permutations(host):
    got = find_ham_cycle(EdgeConstrainedSearch(host=host)) is not None
    assert got == _perm_has_cycle(host)


@pytest.mark.parametrize("host", CROSS_CHECK)
def test_path_existence_matches_permutations(host):
    vs = host.sorted_vertices()
    for x, y in itertools.combinations(vs, 2):
        w = path_with(host, host, x, y)
        assert (w is not None) == _perm_has_path(host, x, y), (x, y)
        if w is not None:
            assert is_ham_path(host, list(w.order))
            assert w.order[0] == x and w.order[-1] == y


def test_required_edges_cross_check():
    c4 = cycle_graph(4)
    for req in [{edge(0, 1)}, {edge(0, 1), edge(2, 3)}]:
        spec = EdgeConstrainedSearch(host=c4, required_edges=frozenset(req))
        got = find_ham_cycle(spec) is not None
        assert got == _perm_has_cycle(c4, req)
    with pytest.raises(ValueError):
        # chords of the host are rejected up front, not silently unmatched
        find_ham_cycle(EdgeConstrainedSearch(
            host=c4, required_edges=frozenset({edge(0, 2)})))


def test_three_required_edges_at_one_vertex_is_infeasible():
    k4 = complete_graph(4)
    spec = EdgeConstrainedSearch(
        host=k4, required_edges=frozenset({edge(0, 1), edge(0, 2), edge(0, 3)}))
    assert find_ham_cycle(spec) is None


def test_witness_cycles_are_valid_and_assigned():
    sq = BOWTIE.square()
    w = cycle_with(sq, BOWTIE, [(0, 2), (1, 1)])
    assert w is not None
    assert is_ham_cycle(sq, list(w.order))
    used = set()
    for v, c in [(0, 2), (1, 1)]:
        es = w.assignment[v]
        assert len(es) == c
        for e in es:
            assert e in BOWTIE.edges and v in e and e in w.edges(cyclic=True)
            assert e not in used
            used.add(e)


def test_assignment_distinctness_blocks_reuse():
    # host is the square of P3 (a triangle); only two original edges exist,
    # so three distinct demanded incidences cannot all be honored.
    p3 = path_graph(3)
    sq = p3.square()
    assert cycle_with(sq, p3, [(0, 1), (2, 1)]) is not None
    assert cycle_with(sq, p3, [(0, 1), (2, 1), (1, 1)]) is None


def test_two_vertex_path_base_case():
    k2 = path_graph(2)
    w = path_with(k2, k2, 0, 1)
    assert w is not None and list(w.order) == [0, 1]
    assert path_with(k2, k2, 0, 1, [(0, 1)]) is not None
    assert path_with(k2, k2, 0, 1, [(0, 1), (1, 1)]) is None


def test_p4_square_middle_pair_has_no_path():
    sq = path_graph(4).square()
    assert path_with(sq, sq, 1, 2) is None
    assert path_with(sq, sq, 0, 3) is not None


def test_endpoint_argument_validation():
    c4 = cycle_graph(4)
    with pytest.raises(ValueError):
        find_ham_cycle(EdgeConstrainedSearch(host=c4, endpoints=(0, 1)))
    with pytest.raises(ValueError):
        find_ham_path(EdgeConstrainedSearch(host=c4))


def test_budget_raises():
    g = cycle_graph(8)
    with pytest.raises(BudgetExceeded):
        cycle_with(g.square(), g, node_budget=2)


def test_is_ham_connected_examples():
    assert is_ham_connected(complete_graph(3))
    assert is_ham_connected(BOWTIE.square())
    assert not is_ham_connected(path_graph(4).square())
    with pytest.raises(ValueError):
        is_ham_connected(Graph(frozenset({0}), frozenset()))


# -- property checkers -----------------------------------------------------

def test_property_kind_list_is_closed():
    assert set(PROPERTY_KINDS) == {
        "twoBlockCycle", "H4", "H5", "F4", "strongF3", "strongF3ends"}
    with pytest.raises(ValueError):
        verify_property("H6", complete_graph(4))


def test_property_rejects_non_two_block():
    with pytest.raises(ValueError):
        verify_property("strongF3", path_graph(3))
    with pytest.raises(ValueError):
        verify_property("H4", complete_graph(3))  # too small for 4-subsets


def test_positive_properties_on_small_blocks():
    assert verify_property("twoBlockCycle", complete_graph(3))
    assert verify_property("strongF3", complete_graph(3))
    assert verify_property("strongF3ends", cycle_graph(4))
    assert verify_property("H4", complete_graph(4))
    assert verify_property("F4", cycle_graph(5))
    assert verify_property("H5", cycle_graph(5))


def test_k23_fails_h5():
    res = verify_property("H5", complete_bipartite(2, 3))
    assert not res
    assert res.counterexample == (0, 1, 2, 3, 4)
    # the same five-vertex block still satisfies the four-vertex property
    assert verify_property("H4", complete_bipartite(2, 3))
