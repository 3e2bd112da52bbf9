"""Heavy vertices, the degree-relaxed adjacency, and heavy-pattern predicates.

A vertex is heavy when its degree is at least half the order (2*d(v) >= n,
kept in integers).  The relaxed adjacency joins u,v when they are adjacent
or d(u)+d(v) >= n; any two heavy vertices are relaxed-adjacent.
"""

from __future__ import annotations

from typing import Sequence

from .graphs import Graph, iter_bits
from .patterns import PatternWitness, induced_occurrences


def heavy_mask(g: Graph) -> int:
    mask = 0
    n = g.n
    for v, d in enumerate(g.degrees):
        if 2 * d >= n:
            mask |= 1 << v
    return mask


def heavy_vertices(g: Graph) -> frozenset:
    """Vertices with degree >= n/2."""
    return frozenset(iter_bits(heavy_mask(g)))


def ebar(g: Graph, u: int, v: int) -> bool:
    """Relaxed adjacency: an edge, or degree sum >= n."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError(f"relaxed adjacency is only defined for distinct vertices, got {u} twice")
    return bool(g.adj[u] >> v & 1) or g.degrees[u] + g.degrees[v] >= g.n


def ebar_masks(g: Graph) -> tuple[int, ...]:
    """Relaxed adjacency as bitmask rows (irreflexive, symmetric)."""
    n = g.n
    deg = g.degrees
    full = (1 << n) - 1
    heavy_enough = [0] * n
    for v in range(n):
        row = 0
        dv = deg[v]
        for u in range(n):
            if u != v and dv + deg[u] >= n:
                row |= 1 << u
        heavy_enough[v] = row
    return tuple((g.adj[v] | heavy_enough[v]) & full & ~(1 << v) for v in range(n))


def is_heavy_cycle(g: Graph, cycle: Sequence[int]) -> bool:
    """True iff the given cycle of g contains every heavy vertex."""
    from .ocycle import as_cycle  # local import: ocycle builds on this module

    seq = as_cycle(g, cycle)
    return heavy_mask(g) & ~seq.mask == 0


def is_pattern_heavy(g: Graph, pattern: Graph) -> tuple[bool, PatternWitness | None]:
    """Every induced copy of pattern has a nonadjacent pair with degree sum >= n.

    Returns (True, None), or (False, witness) for a copy where no such pair
    exists.  Pattern-free graphs are vacuously pattern-heavy.
    """
    n = g.n
    deg = g.degrees
    for wit in induced_occurrences(g, pattern):
        image = wit.mapping
        ok = False
        for i in range(len(image)):
            u = image[i]
            for j in range(i + 1, len(image)):
                v = image[j]
                if not g.adj[u] >> v & 1 and deg[u] + deg[v] >= n:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False, wit
    return True, None
