"""Canonical labeling, isomorphism testing, and automorphism orbits.

The labeling is computed in-house by iterated color refinement plus
individualization with backtracking.  Cells of every intermediate partition
are kept in an isomorphism-invariant order (new colors are ranked by sorted
signature), which gives two properties the enumeration module relies on:

* the canonical key is identical for isomorphic graphs and distinct
  otherwise, and
* the vertex placed at the last canonical position always belongs to the
  last cell of the initial equitable partition.

Discovered automorphisms prune the search and accumulate into the orbit
partition that callers use for canonical-augmentation tests.

Functions here work on raw adjacency tuples (``adj[v]`` = neighbor bitmask)
so the enumeration hot path avoids object overhead; thin wrappers accept
:class:`~stabilitylab.graphs.Graph` values.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation
from .graphs import Graph, bits

Code = tuple[int, ...]


def neighbor_lists(adj: Code) -> list[list[int]]:
    return [list(bits(m)) for m in adj]


def refine_colors(nlists: list[list[int]], colors: list[int]) -> list[int]:
    """Refine vertex colors to the coarsest stable (equitable) partition.

    Color values are compact ranks assigned by sorted signature, so the cell
    order is an isomorphism invariant and refinement only ever splits cells
    in place.
    """
    n = len(nlists)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in nlists[v])))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        k = len(rank)
        if k == ncolors:
            return new
        if k == n:
            return new
        colors, ncolors = new, k


@dataclass(frozen=True)
class CanonicalData:
    key: Code                      # canonical adjacency rows (position space)
    order: tuple[int, ...]         # order[p] = original vertex at position p
    orbit: tuple[int, ...]         # orbit representative (min member) per vertex
    generators: tuple[tuple[int, ...], ...]


def _leaf_key(nlists: list[list[int]], pos: list[int]) -> Code:
    n = len(nlists)
    rows = [0] * n
    for v in range(n):
        r = 0
        for u in nlists[v]:
            r |= 1 << pos[u]
        rows[pos[v]] = r
    return tuple(rows)


def _is_automorphism(adj: Code, nlists: list[list[int]], sigma: tuple[int, ...]) -> bool:
    for v, nb in enumerate(nlists):
        image = 0
        for u in nb:
            image |= 1 << sigma[u]
        if image != adj[sigma[v]]:
            return False
    return True


def canonical_data(adj: Code) -> CanonicalData:
    n = len(adj)
    nlists = neighbor_lists(adj)
    base = refine_colors(nlists, [0] * n)
    if len(set(base)) == n:
        # Discrete equitable partition: the automorphism group is trivial.
        order = [0] * n
        for v, p in enumerate(base):
            order[p] = v
        return CanonicalData(_leaf_key(nlists, base), tuple(order), tuple(range(n)), ())

    gens: list[tuple[int, ...]] = []
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        ra, rb = find(a), find(b)
        if ra != rb:
            if ra > rb:
                ra, rb = rb, ra
            parent[rb] = ra

    first_key: Code | None = None
    first_pos: list[int] = []
    best_key: Code | None = None
    best_pos: list[int] = []

    def record_automorphism(pos1: list[int], pos2: list[int]) -> None:
        inv2 = [0] * n
        for v, p in enumerate(pos2):
            inv2[p] = v
        sigma = tuple(inv2[pos1[v]] for v in range(n))
        if sigma == tuple(range(n)):
            return
        if not _is_automorphism(adj, nlists, sigma):
            raise InvariantViolation("leaf collision produced a non-automorphism")
        gens.append(sigma)
        for v in range(n):
            union(v, sigma[v])

    def equivalent_here(colors: list[int], a: int, b: int) -> bool:
        # a ~ b under some product of known generators compatible with the
        # node's ordered partition (i.e. color preserving).
        comp = [g for g in gens if all(colors[g[v]] == colors[v] for v in range(n))]
        if not comp:
            return False
        local = list(range(n))

        def lfind(x: int) -> int:
            while local[x] != x:
                local[x] = local[local[x]]
                x = local[x]
            return x

        for g in comp:
            for v in range(n):
                ra, rb = lfind(v), lfind(g[v])
                if ra != rb:
                    local[max(ra, rb)] = min(ra, rb)
        return lfind(a) == lfind(b)

    def search(colors: list[int]) -> None:
        nonlocal first_key, first_pos, best_key, best_pos
        cell_of: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cell_of.setdefault(c, []).append(v)
        target = None
        for c in sorted(cell_of):
            if len(cell_of[c]) > 1:
                target = cell_of[c]
                break
        if target is None:
            key = _leaf_key(nlists, colors)
            if first_key is None:
                first_key, first_pos = key, list(colors)
                best_key, best_pos = key, list(colors)
                return
            if key == first_key:
                record_automorphism(colors, first_pos)
            if key < best_key:
                best_key, best_pos = key, list(colors)
            elif key == best_key and best_key != first_key:
                record_automorphism(colors, best_pos)
            return

        tried: list[int] = []
        for w in sorted(target):
            if any(equivalent_here(colors, w, t) for t in tried):
                continue
            tried.append(w)
            child = [2 * c for c in colors]
            child[w] -= 1
            search(refine_colors(nlists, child))

    search(list(base))
    key, pos = best_key, best_pos
    order = [0] * n
    for v, p in enumerate(pos):
        order[p] = v
    reps: dict[int, int] = {}
    orbit = [0] * n
    for v in range(n):
        r = find(v)
        reps.setdefault(r, v)
        orbit[v] = reps[r]
    return CanonicalData(key, tuple(order), tuple(orbit), tuple(gens))


def canonical_key(adj: Code) -> Code:
    return canonical_data(adj).key


@dataclass(frozen=True)
class CanonicalForm:
    """Public canonical form: a relabeled graph plus the labeling that produced it."""

    graph: Graph
    order: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    orbit: tuple[int, ...]


def canonical_form(g: Graph) -> CanonicalForm:
    data = canonical_data(g.adj)
    cg = Graph(g.n, data.key)
    return CanonicalForm(cg, data.order, cg.edges(), data.orbit)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_key(g.adj) == canonical_key(h.adj)


def automorphism_orbits(g: Graph) -> tuple[int, ...]:
    return canonical_data(g.adj).orbit
