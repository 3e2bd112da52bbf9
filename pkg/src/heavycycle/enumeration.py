"""Exhaustive enumeration of connected graphs up to isomorphism.

Canonical labeling via equitable refinement + individualization, with
automorphism discovery at equal-certificate leaves and orbit pruning by
automorphisms fixing the individualized prefix pointwise.  Enumeration uses
canonical vertex augmentation: a child (parent plus one new vertex wired to a
neighbor subset) is kept only when the new vertex lies in the automorphism
orbit of the canonically least non-cut vertex, and only one neighbor subset
per parent-automorphism orbit is tried.  Each isomorphism class then appears
exactly once.

Everything here works on raw (n, adjacency-mask tuple) pairs; Graph objects
are built only for accepted members.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graphs import Graph

#: hard cap: pure-Python enumeration beyond 9 vertices is impractical
MAX_ENUMERATION_N = 9

Cert = tuple[int, int]


def _pack(n: int, adj: tuple[int, ...], perm: tuple[int, ...]) -> int:
    """Upper-triangle bits of the adjacency relabeled by perm (vertex -> position)."""
    inv = [0] * n
    for v, p in enumerate(perm):
        inv[p] = v
    bits = 0
    at = 0
    for i in range(n):
        ai = adj[inv[i]]
        for j in range(i + 1, n):
            if ai >> inv[j] & 1:
                bits |= 1 << at
            at += 1
    return bits


def _refine(adj: tuple[int, ...], cells: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Coarsest equitable refinement of the ordered partition."""
    while True:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        out: list[tuple[int, ...]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    out.append(tuple(groups[sig]))
        cells = out
        if not changed:
            return cells


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        p = self.parent
        while p[a] != a:
            p[a] = p[p[a]]
            a = p[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _canon_raw(
    n: int, adj: tuple[int, ...]
) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...], Cert]:
    """(canonical perm vertex->position, automorphism generators, certificate)."""
    if n == 0:
        return (), (), (0, 0)
    if n == 1:
        return (0,), (), (1, 0)

    best: list = [None, None]  # packed bits, perm
    leaves: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = {}
    gens: list[tuple[int, ...]] = []
    identity = tuple(range(n))

    def leaf(cells: list[tuple[int, ...]]) -> None:
        perm = [0] * n
        for pos, c in enumerate(cells):
            perm[c[0]] = pos
        perm = tuple(perm)
        bits = _pack(n, adj, perm)
        if best[0] is None or bits < best[0]:
            best[0], best[1] = bits, perm
        hit = leaves.get(bits)
        if hit is None:
            inv = [0] * n
            for v, p in enumerate(perm):
                inv[p] = v
            leaves[bits] = (perm, tuple(inv))
        else:
            q, qinv = hit
            sigma = tuple(qinv[perm[v]] for v in range(n))
            if sigma != identity and sigma not in gens:
                gens.append(sigma)

    def descend(cells: list[tuple[int, ...]], prefix: tuple[int, ...]) -> None:
        cells = _refine(adj, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            leaf(cells)
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            if tried:
                # skip v when a known automorphism fixing the prefix pointwise
                # already maps it onto an explored sibling
                uf = _UnionFind(n)
                for sigma in gens:
                    if all(sigma[p] == p for p in prefix):
                        for w in range(n):
                            uf.union(w, sigma[w])
                if any(uf.find(v) == uf.find(u) for u in tried):
                    continue
            rest = tuple(w for w in cell if w != v)
            child = cells[:target] + [(v,), rest] + cells[target + 1:]
            descend(child, prefix + (v,))
            tried.append(v)

    descend([tuple(range(n))], ())
    return best[1], tuple(gens), (n, best[0])


@lru_cache(maxsize=65536)
def _canon_graph(n: int, adj: tuple[int, ...]):
    return _canon_raw(n, adj)


def canonical_cert(g: Graph) -> Cert:
    """Hashable isomorphism invariant: equal certs iff isomorphic."""
    return _canon_graph(g.n, g.adj)[2]


def canonical_perm(g: Graph) -> tuple[int, ...]:
    """Vertex -> canonical position."""
    return _canon_graph(g.n, g.adj)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of g's isomorphism class."""
    perm = canonical_perm(g)
    return Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def canonical_graph6(g: Graph) -> str:
    from .graphs import to_graph6

    return to_graph6(canonical_graph(g))


def automorphism_generators(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Permutations generating the full automorphism group."""
    return _canon_graph(g.n, g.adj)[1]


def automorphism_orbits(g: Graph) -> list[int]:
    """Orbit representative (min vertex) for each vertex."""
    uf = _UnionFind(g.n)
    for sigma in automorphism_generators(g):
        for v in range(g.n):
            uf.union(v, sigma[v])
    root_min: dict[int, int] = {}
    for v in range(g.n):
        r = uf.find(v)
        root_min[r] = min(root_min.get(r, v), v)
    return [root_min[uf.find(v)] for v in range(g.n)]


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and canonical_cert(a) == canonical_cert(b)


# -- canonical augmentation ------------------------------------------------

def _noncut_mask(n: int, adj: tuple[int, ...]) -> int:
    """Bitmask of vertices whose removal keeps the graph connected."""
    if n <= 2:
        return (1 << n) - 1
    cut = 0
    visited = [False] * n
    depth = [0] * n
    low = [0] * n
    parent = [-1] * n
    stack = [(0, 0, adj[0])]
    visited[0] = True
    root_children = 0
    while stack:
        v, d, todo = stack.pop()
        advanced = False
        while todo:
            w = (todo & -todo).bit_length() - 1
            todo &= todo - 1
            if not visited[w]:
                visited[w] = True
                parent[w] = v
                depth[w] = low[w] = d + 1
                stack.append((v, d, todo))
                stack.append((w, d + 1, adj[w]))
                if v == 0:
                    root_children += 1
                advanced = True
                break
            elif w != parent[v]:
                low[v] = min(low[v], depth[w])
        if not advanced and parent[v] >= 0:
            p = parent[v]
            low[p] = min(low[p], low[v])
            if p != 0 and low[v] >= depth[p]:
                cut |= 1 << p
    if root_children > 1:
        cut |= 1
    return ((1 << n) - 1) & ~cut


def _mask_reps(k: int, gens: tuple[tuple[int, ...], ...]) -> list[int]:
    """One representative (the smallest) per orbit of nonempty k-bit masks."""
    total = 1 << k
    if not gens:
        return list(range(1, total))
    uf = _UnionFind(total)
    for sigma in gens:
        for m in range(1, total):
            img = 0
            t = m
            while t:
                b = t & -t
                img |= 1 << sigma[b.bit_length() - 1]
                t ^= b
            uf.union(m, img)
    smallest: dict[int, int] = {}
    for m in range(1, total):
        r = uf.find(m)
        if r not in smallest or m < smallest[r]:
            smallest[r] = m
    reps = sorted(smallest.values())
    return reps


_LEVELS: dict[int, list[tuple[tuple[int, ...], Cert]]] = {
    1: [((0,), (1, 0))]
}
_GRAPH_LEVELS: dict[int, tuple[Graph, ...]] = {}


def _level(n: int) -> list[tuple[tuple[int, ...], Cert]]:
    if n in _LEVELS:
        return _LEVELS[n]
    parents = _level(n - 1)
    k = n - 1
    out: list[tuple[tuple[int, ...], Cert]] = []
    for padj, _ in parents:
        _, pgens, _ = _canon_graph(k, padj)
        for mask in _mask_reps(k, pgens):
            cadj = tuple(
                padj[i] | (1 << k) if mask >> i & 1 else padj[i] for i in range(k)
            ) + (mask,)
            perm, cgens, cert = _canon_raw(n, cadj)
            noncut = _noncut_mask(n, cadj)
            wstar = min((perm[v], v) for v in range(n) if noncut >> v & 1)[1]
            uf = _UnionFind(n)
            for sigma in cgens:
                for v in range(n):
                    uf.union(v, sigma[v])
            if uf.find(k) == uf.find(wstar):
                out.append((cadj, cert))
    out.sort(key=lambda item: item[1])
    _LEVELS[n] = out
    return out


def enumerate_connected(n: int) -> tuple[Graph, ...]:
    """All connected graphs on n vertices, one per isomorphism class.

    Deterministic order (sorted by canonical certificate).  Levels are cached,
    so repeated calls and higher levels reuse earlier work.
    """
    if not 1 <= n <= MAX_ENUMERATION_N:
        raise ValueError(
            f"enumeration supports 1 <= n <= {MAX_ENUMERATION_N}, got {n}"
        )
    if n not in _GRAPH_LEVELS:
        _GRAPH_LEVELS[n] = tuple(
            Graph(n, adj) for adj, _ in _level(n)
        )
    return _GRAPH_LEVELS[n]


def iter_connected(n: int) -> Iterator[Graph]:
    yield from enumerate_connected(n)


def connected_count(n: int) -> int:
    return len(enumerate_connected(n))
