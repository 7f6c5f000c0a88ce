"""Shared test oracles and hypothesis strategies.

The oracles here are deliberately naive (full subset scans, permutation
scans) so they stay independent of the solver paths they check.
"""

from __future__ import annotations

from itertools import combinations, permutations

from hypothesis import strategies as st

from stabilitylab.graphs import Graph, bits, from_edges


def naive_alpha(g: Graph) -> int:
    """Largest independent set size by scanning all 2^n vertex subsets."""
    best = 0
    for mask in range(1 << g.n):
        if mask.bit_count() <= best:
            continue
        if all(g.adj[v] & mask == 0 for v in bits(mask)):
            best = mask.bit_count()
    return best


def naive_independent_sets(g: Graph, t: int) -> list[tuple[int, ...]]:
    out = []
    for sub in combinations(range(g.n), t):
        if all(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
            out.append(sub)
    return out


def labeled_codes(n: int):
    """Every labeled simple graph on n vertices as an adjacency tuple."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        adj = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        yield tuple(adj)


def brute_orbits(g: Graph) -> tuple[int, ...]:
    """Vertex orbits under the full automorphism group, by permutation scan."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in permutations(range(g.n)):
        ok = True
        for v in range(g.n):
            image = 0
            for u in bits(g.adj[v]):
                image |= 1 << perm[u]
            if image != g.adj[perm[v]]:
                ok = False
                break
        if ok:
            for v in range(g.n):
                ra, rb = find(v), find(perm[v])
                if ra != rb:
                    parent[max(ra, rb)] = min(ra, rb)
    reps = {}
    out = []
    for v in range(g.n):
        r = find(v)
        reps.setdefault(r, v)
        out.append(reps[r])
    return tuple(out)


def random_graph(rng, n: int, p: float = 0.5) -> Graph:
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return from_edges(n, edges)


@st.composite
def graphs_st(draw, min_n: int = 1, max_n: int = 8):
    n = draw(st.integers(min_n, max_n))
    if n == 1:
        return from_edges(1, [])
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.sets(st.sampled_from(pairs)))
    return from_edges(n, chosen)
