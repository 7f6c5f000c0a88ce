import random

from hypothesis import given

from helpers import brute_orbits, graphs_st, random_graph
from stabilitylab import catalog
from stabilitylab.canonical import (
    automorphism_orbits,
    canonical_data,
    canonical_form,
    canonical_key,
    is_isomorphic,
)
from stabilitylab.graphs import Graph, bits, clique, cycle, from_edges, path


def _relabel(g, perm):
    adj = [0] * g.n
    for v in range(g.n):
        for u in bits(g.adj[v]):
            adj[perm[v]] |= 1 << perm[u]
    return Graph(g.n, tuple(adj))


def test_thousand_random_relabelings_agree():
    rng = random.Random(1723)
    checked = 0
    while checked < 1000:
        n = rng.randint(2, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        key = canonical_key(g.adj)
        for _ in range(10):
            perm = list(range(n))
            rng.shuffle(perm)
            assert canonical_key(_relabel(g, perm).adj) == key
            checked += 1


def test_examples():
    c5 = cycle(5)
    shuffled = from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 0), (0, 1)])
    assert is_isomorphic(c5, shuffled)
    assert not is_isomorphic(path(4), from_edges(4, [(0, 1), (0, 2), (0, 3)]))
    assert not is_isomorphic(catalog.named_graph("H9"), catalog.named_graph("T9"))


def test_canonical_form_is_a_relabeling():
    g = catalog.named_graph("H7")
    cf = canonical_form(g)
    assert sorted(cf.order) == list(range(7))
    assert cf.graph.edge_count == g.edge_count
    assert is_isomorphic(cf.graph, g)
    assert canonical_key(cf.graph.adj) == canonical_key(g.adj)


def test_orbits_match_brute_force_small():
    rng = random.Random(99)
    graphs = [g for n in range(1, 6) for g in _all_small(n)]
    graphs += [random_graph(rng, 6, 0.5) for _ in range(40)]
    graphs += [random_graph(rng, 7, 0.3) for _ in range(20)]
    for g in graphs:
        assert automorphism_orbits(g) == brute_orbits(g)


def _all_small(n):
    from stabilitylab.enumeration import enumerate_canonical

    return list(enumerate_canonical(n))


def test_orbit_structure_of_named_graphs():
    assert len(set(automorphism_orbits(clique(4)))) == 1
    assert len(set(automorphism_orbits(cycle(9)))) == 1
    p4 = path(4)
    orb = automorphism_orbits(p4)
    assert orb[0] == orb[3] and orb[1] == orb[2] and orb[0] != orb[1]
    petersen = from_edges(
        10,
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
         (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
         (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)],
    )
    assert len(set(automorphism_orbits(petersen))) == 1


def test_generators_are_automorphisms():
    for g in (clique(5), cycle(8), catalog.named_graph("T9")):
        data = canonical_data(g.adj)
        for sigma in data.generators:
            for v in range(g.n):
                image = 0
                for u in bits(g.adj[v]):
                    image |= 1 << sigma[u]
                assert image == g.adj[sigma[v]]


@given(graphs_st(max_n=8))
def test_key_invariant_under_reversal_relabeling(g):
    perm = list(reversed(range(g.n)))
    assert canonical_key(g.adj) == canonical_key(_relabel(g, perm).adj)
