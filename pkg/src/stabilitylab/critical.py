"""Edge-criticality of the independence number and defect classification.

A graph is alpha-critical when deleting any single edge raises the
independence number.  Greedy edge removal reduces every graph to a spanning
alpha-critical kernel with the same independence number; connected kernels
with defect ``n - 2*alpha`` equal to 1, 2 or 3 fall into known families,
which :func:`classify_defect` recognizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import catalog
from .canonical import is_isomorphic
from .graphs import Graph, delete_edge, is_connected, min_degree
from .independence import alpha_mask

CLASS_ODD_CYCLE = "odd_cycle"
CLASS_EVEN_SUBDIVISION_K4 = "even_subdivision_k4"
CLASS_OTHER = "other"
#: classification values for the defect-3 family are the catalog names
CLASS_NAMED = ("K5", "H7", "H9", "T9")


def _alpha(g: Graph) -> int:
    return alpha_mask(g.adj, (1 << g.n) - 1)[0]


def is_alpha_critical(g: Graph) -> tuple[bool, tuple[int, int] | None]:
    """True iff every edge removal raises alpha; else returns one preserving edge."""
    a = _alpha(g)
    full = (1 << g.n) - 1
    for u, v in g.edges():
        adj = list(g.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        if alpha_mask(tuple(adj), full)[0] == a:
            return False, (u, v)
    return True, None


@dataclass(frozen=True)
class CriticalKernel:
    kernel: Graph
    removed: tuple[tuple[int, int], ...]


def critical_reduce(g: Graph) -> CriticalKernel:
    """Greedily delete the smallest edge whose removal preserves alpha.

    The scan restarts after every removal; it stops when the remaining
    spanning subgraph is alpha-critical.  Kernels depend on this fixed order
    and are reproducible but not canonical.
    """
    a = _alpha(g)
    full = (1 << g.n) - 1
    current = g
    removed: list[tuple[int, int]] = []
    while True:
        for u, v in current.edges():
            adj = list(current.adj)
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            if alpha_mask(tuple(adj), full)[0] == a:
                current = delete_edge(current, (u, v))
                removed.append((u, v))
                break
        else:
            return CriticalKernel(current, tuple(removed))


def defect(g: Graph) -> int:
    return g.n - 2 * _alpha(g)


@dataclass(frozen=True)
class DefectClass:
    defect: int
    classification: str


def classify_defect(g: Graph) -> DefectClass:
    """Classify a connected alpha-critical graph by its defect.

    Defect 1 must be an odd cycle; defect 2 an even subdivision of the
    4-clique; defect 3 with minimum degree >= 3 one of the four named graphs.
    Anything else reports ``other``.
    """
    if not is_connected(g):
        raise ValueError("classification requires a connected graph")
    crit, edge = is_alpha_critical(g)
    if not crit:
        raise ValueError(f"classification requires an alpha-critical graph (edge {edge} is removable)")
    d = defect(g)
    if d == 1:
        from .structure import is_odd_cycle

        if is_odd_cycle(g):
            return DefectClass(d, CLASS_ODD_CYCLE)
    elif d == 2:
        from .structure import is_even_subdivision_k4

        if is_even_subdivision_k4(g) is not None:
            return DefectClass(d, CLASS_EVEN_SUBDIVISION_K4)
    elif d == 3 and min_degree(g) >= 3:
        for name in CLASS_NAMED:
            target = catalog.named_graph(name)
            if target.n == g.n and is_isomorphic(g, target):
                return DefectClass(d, name)
    return DefectClass(d, CLASS_OTHER)
