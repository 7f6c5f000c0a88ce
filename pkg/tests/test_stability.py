import pytest

from stabilitylab.enumeration import enumerate_canonical
from stabilitylab.graphs import (
    add_isolated,
    bipartite_with_pm,
    clique,
    cone,
    cycle,
    disjoint_union,
    even_subdivision_k4,
    path,
)
from stabilitylab.independence import alpha_mask
from stabilitylab.stability import (
    is_stable,
    is_tight_stable,
    max_alpha_drop,
    min_degree_necessary,
    stability_bound,
    stable_fast,
)


def test_bound_examples():
    assert stability_bound(9, 3, 0) == 3
    assert stability_bound(4, 3, 0) == 1
    for n in range(2, 12):
        assert stability_bound(n, 1, 0) == n // 2


@pytest.mark.parametrize("n,k,l", [(5, 0, 0), (5, 2, 2), (5, 1, 2), (3, 3, 0), (2, 3, 1)])
def test_bound_parameter_domain(n, k, l):
    with pytest.raises(ValueError):
        stability_bound(n, k, l)


def test_is_stable_examples():
    rep = is_stable(cycle(7), 2, 0)
    assert rep.stable and rep.tight and rep.witness is None

    rep = is_stable(path(3), 1, 0)
    assert not rep.stable and rep.witness == (0,)

    rep = is_stable(clique(4), 3, 0)
    assert rep.stable and rep.tight

    rep = is_stable(disjoint_union(cycle(3), cycle(5)), 2, 0)
    assert rep.stable and rep.tight


def test_witness_is_first_failing_subset():
    rep = is_stable(cycle(9), 3, 0)
    assert not rep.stable and rep.witness == (0, 1, 2)


def test_is_tight_examples():
    assert is_tight_stable(cycle(9), 2, 0)
    assert is_tight_stable(cycle(6), 1, 0)
    assert is_tight_stable(even_subdivision_k4((2, 2, 0, 0, 0, 0)), 2, 0)
    assert not is_tight_stable(cycle(8), 2, 0)


def test_min_degree_necessary():
    assert min_degree_necessary(cycle(7), 2) == (True, None)
    ok, v = min_degree_necessary(cycle(7), 3)
    assert not ok and v == 0
    from stabilitylab import catalog

    assert min_degree_necessary(catalog.named_graph("H7"), 3) == (True, None)


def test_max_alpha_drop():
    assert max_alpha_drop(cycle(7), 2) == 0
    assert max_alpha_drop(path(3), 1) == 1


def _all_params(n):
    return [(k, l) for k in (1, 2, 3) for l in range(k) if n > k]


def test_fast_path_agrees_with_reference_scan():
    for n in range(2, 7):
        for g in enumerate_canonical(n):
            full = (1 << g.n) - 1
            a, wit = alpha_mask(g.adj, full)
            for k, l in _all_params(n):
                assert (
                    stable_fast(g.adj, g.n, k, l, a, wit)
                    == is_stable(g, k, l).stable
                )


def test_monotonicity_over_stream():
    # stability survives lowering k and raising l
    for n in range(4, 7):
        for g in enumerate_canonical(n):
            verdict = {
                (k, l): is_stable(g, k, l).stable for k, l in _all_params(n)
            }
            for (k, l), ok in verdict.items():
                if not ok:
                    continue
                for k2 in range(l + 1, k):
                    assert verdict[(k2, min(l, k2 - 1))]
                for l2 in range(l, k):
                    assert verdict[(k, l2)]


def test_isolated_vertex_lift():
    # a tight (k-1,l-1)-stable graph plus one isolated vertex is tight (k,l)
    fixtures = [
        (clique(3), 2, 0),
        (clique(4), 3, 0),
        (bipartite_with_pm(3), 1, 0),
        (cycle(7), 2, 0),
    ]
    for g, k, l in fixtures:
        assert is_tight_stable(g, k, l)
        assert is_tight_stable(add_isolated(g, 1), k + 1, l + 1)


def test_cone_lift():
    for base in (bipartite_with_pm(2), bipartite_with_pm(3, [(0, 4)]), cycle(6)):
        assert is_tight_stable(base, 1, 0)
        assert base.n % 2 == 0
        assert is_tight_stable(cone(base), 1, 0)


def test_hereditary_tightness_of_the_nine_cycle():
    from stabilitylab.graphs import delete_vertices

    g = cycle(9)
    assert is_tight_stable(g, 2, 0)
    for v in range(9):
        sub, _ = delete_vertices(g, [v])
        assert is_tight_stable(sub, 1, 0)


def test_rejects_undefined_parameter_domain():
    with pytest.raises(ValueError):
        is_stable(cycle(5), 5, 0)  # n <= k is rejected, not guessed
    with pytest.raises(ValueError):
        is_stable(cycle(5), 0, 0)
