import pytest

from helpers import naive_alpha
from stabilitylab import catalog
from stabilitylab.canonical import is_isomorphic
from stabilitylab.graphs import degrees, delete_edge, is_connected, min_degree


def test_self_test_passes():
    catalog.self_test()


@pytest.mark.parametrize(
    "name,n,m,alpha",
    [("K4", 4, 6, 1), ("K5", 5, 10, 1), ("H7", 7, 11, 2), ("H9", 9, 14, 3), ("T9", 9, 15, 3)],
)
def test_catalog_properties_rederived(name, n, m, alpha):
    g = catalog.named_graph(name)
    assert g.n == n and g.edge_count == m
    assert is_connected(g)
    assert min_degree(g) >= 3
    assert naive_alpha(g) == alpha
    # criticality: every single edge removal must raise the subset-scan alpha
    for e in g.edges():
        assert naive_alpha(delete_edge(g, e)) == alpha + 1


def test_nine_vertex_graphs_have_defect_three():
    for name in ("H9", "T9"):
        g = catalog.named_graph(name)
        assert g.n == 2 * naive_alpha(g) + 3


def test_h7_degree_profile():
    assert sorted(degrees(catalog.named_graph("H7"))) == [3, 3, 3, 3, 3, 3, 4]


def test_named_graphs_pairwise_non_isomorphic():
    assert not is_isomorphic(catalog.named_graph("H9"), catalog.named_graph("T9"))


def test_parametric_cycles_and_errors():
    assert catalog.named_graph("C7").n == 7
    with pytest.raises(KeyError):
        catalog.named_graph("X3")
