import pytest
from hypothesis import given, strategies as st

from helpers import graphs_st, naive_alpha, naive_independent_sets
from stabilitylab import catalog
from stabilitylab.graphs import clique, cycle, disjoint_union, from_edges, path
from stabilitylab.independence import (
    alpha,
    alpha_after_single_removals,
    alpha_mask,
    independent_sets_of_size,
)


def _is_independent(g, vertices):
    m = 0
    for v in vertices:
        m |= 1 << v
    return all(g.adj[v] & m == 0 for v in vertices)


def test_alpha_examples():
    assert alpha(cycle(7)).alpha == 3
    assert alpha(clique(5)).alpha == 1
    assert alpha(catalog.named_graph("H7")).alpha == 2
    assert alpha(catalog.named_graph("T9")).alpha == 3
    assert alpha(catalog.named_graph("H9")).alpha == 3


def test_alpha_witness_is_valid_and_deterministic():
    g = cycle(9)
    res1 = alpha(g)
    res2 = alpha(g)
    assert res1 == res2
    assert len(res1.witness) == res1.alpha
    assert _is_independent(g, res1.witness)


def test_independent_sets_examples():
    assert list(independent_sets_of_size(cycle(5), 2)) == [
        (0, 2), (0, 3), (1, 3), (1, 4), (2, 4)
    ]
    assert list(independent_sets_of_size(clique(4), 1)) == [(0,), (1,), (2,), (3,)]
    assert list(independent_sets_of_size(cycle(7), 4)) == []
    assert list(independent_sets_of_size(path(3), 0)) == [()]
    with pytest.raises(ValueError):
        list(independent_sets_of_size(path(3), 4))


@given(graphs_st(max_n=7), st.integers(0, 7))
def test_independent_sets_complete_and_ordered(g, t):
    if t > g.n:
        t = g.n
    got = list(independent_sets_of_size(g, t))
    assert got == naive_independent_sets(g, t)
    assert got == sorted(got)


def test_alpha_after_single_removals_examples():
    assert alpha_after_single_removals(cycle(5)) == {v: 2 for v in range(5)}
    assert alpha_after_single_removals(path(3)) == {0: 1, 1: 2, 2: 1}
    assert alpha_after_single_removals(clique(4)) == {v: 1 for v in range(4)}
    with pytest.raises(ValueError):
        alpha_after_single_removals(from_edges(1, []))


@given(graphs_st(max_n=7))
def test_alpha_matches_naive_oracle(g):
    assert alpha(g).alpha == naive_alpha(g)


@given(graphs_st(min_n=2, max_n=8), st.data())
def test_removal_monotonicity(g, data):
    remove = data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n - 1))
    full = (1 << g.n) - 1
    smask = 0
    for v in remove:
        smask |= 1 << v
    a = alpha_mask(g.adj, full)[0]
    sub = alpha_mask(g.adj, full ^ smask)[0]
    assert a - len(remove) <= sub <= a


@given(graphs_st(min_n=2, max_n=8))
def test_single_vertex_removal_dichotomy(g):
    a = alpha(g).alpha
    for value in alpha_after_single_removals(g).values():
        assert value in (a - 1, a)


@given(graphs_st(min_n=2, max_n=8))
def test_edge_removal_dichotomy(g):
    from stabilitylab.graphs import delete_edge

    a = alpha(g).alpha
    for e in g.edges():
        assert alpha(delete_edge(g, e)).alpha in (a, a + 1)


@given(graphs_st(max_n=5), graphs_st(max_n=5))
def test_additivity_over_components(g, h):
    assert alpha(disjoint_union(g, h)).alpha == alpha(g).alpha + alpha(h).alpha


def test_single_vertex_graph():
    assert alpha(from_edges(1, [])).alpha == 1


def test_oracle_equivalence_full_stream_n8():
    from stabilitylab.enumeration import enumerate_canonical

    for g in enumerate_canonical(8):
        assert alpha_mask(g.adj, (1 << 8) - 1)[0] == naive_alpha(g)
