"""Named pattern graphs and induced-copy enumeration.

A pattern occurs *induced*: edges and non-edges of the pattern must both be
mirrored by the host.  Enumeration yields one witness per host vertex subset
(the subset determines the induced subgraph; which of its automorphic
mappings we report is an arbitrary but deterministic choice).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, iter_bits

MAX_PATTERN_SIZE = 8


def p3() -> Graph:
    return Graph.path(3)


def p4() -> Graph:
    return Graph.path(4)


def k3() -> Graph:
    return Graph.complete(3)


def c4() -> Graph:
    return Graph.cycle(4)


def star_pattern(k: int) -> Graph:
    """K_{1,k}: center 0 joined to k independent leaves."""
    if k < 1:
        raise ValueError(f"star pattern needs k >= 1, got {k}")
    return Graph.star(k)


_FIXED = {
    "p3": p3,
    "p4": p4,
    "k3": k3,
    "c4": c4,
    "k1_3": lambda: star_pattern(3),
    "k1_4": lambda: star_pattern(4),
    "k1_5": lambda: star_pattern(5),
}

PATTERN_NAMES = tuple(_FIXED)


def pattern_by_name(name: str) -> Graph:
    """Resolve p3/p4/k3/c4/k1_3/k1_4/k1_5 or parametric k1_k:<k>."""
    key = name.strip().lower()
    if key in _FIXED:
        return _FIXED[key]()
    if key.startswith("k1_k:"):
        try:
            k = int(key.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad star parameter in pattern name {name!r}") from None
        g = star_pattern(k)
        if g.n > MAX_PATTERN_SIZE:
            raise ValueError(f"pattern {name!r} exceeds {MAX_PATTERN_SIZE} vertices")
        return g
    raise ValueError(f"unknown pattern name {name!r}")


@dataclass(frozen=True)
class PatternWitness:
    """An induced embedding: mapping[i] is the host vertex for pattern vertex i."""

    pattern: Graph
    mapping: tuple[int, ...]

    def image(self) -> frozenset:
        return frozenset(self.mapping)

    def validate(self, host: Graph) -> bool:
        m = self.mapping
        p = self.pattern
        if len(m) != p.n or len(set(m)) != p.n:
            return False
        if any(not 0 <= v < host.n for v in m):
            return False
        return all(
            (p.adj[i] >> j & 1) == (host.adj[m[i]] >> m[j] & 1)
            for i in range(p.n)
            for j in range(i + 1, p.n)
        )


def _search_order(pattern: Graph) -> list[int]:
    """Order pattern vertices so each one touches the prefix when possible."""
    order: list[int] = []
    placed = 0
    while len(order) < pattern.n:
        best = None
        for v in range(pattern.n):
            if placed >> v & 1:
                continue
            key = ((pattern.adj[v] & placed).bit_count(), pattern.degrees[v], -v)
            if best is None or key > best[0]:
                best = (key, v)
        order.append(best[1])
        placed |= 1 << best[1]
    return order


def induced_occurrences(g: Graph, pattern: Graph) -> Iterator[PatternWitness]:
    """Yield induced copies of pattern in g, one witness per vertex subset."""
    if pattern.n > MAX_PATTERN_SIZE:
        raise ValueError(f"pattern size {pattern.n} exceeds {MAX_PATTERN_SIZE}")
    if pattern.n == 0 or pattern.n > g.n:
        return
    order = _search_order(pattern)
    pn = pattern.n
    full = (1 << g.n) - 1
    # adjacency/non-adjacency of each order-step vertex to earlier steps
    earlier_adj = []
    for step, v in enumerate(order):
        req = [(t, pattern.adj[v] >> order[t] & 1) for t in range(step)]
        earlier_adj.append(req)
    seen: set[int] = set()
    images = [0] * pn

    def extend(step: int, used: int) -> Iterator[PatternWitness]:
        if step == pn:
            key = used
            if key not in seen:
                seen.add(key)
                mapping = [0] * pn
                for t, v in enumerate(order):
                    mapping[v] = images[t]
                yield PatternWitness(pattern, tuple(mapping))
            return
        cand = full & ~used
        for t, need_edge in earlier_adj[step]:
            if need_edge:
                cand &= g.adj[images[t]]
            else:
                cand &= ~g.adj[images[t]]
        for w in iter_bits(cand):
            images[step] = w
            yield from extend(step + 1, used | 1 << w)

    yield from extend(0, 0)


def first_occurrence(g: Graph, pattern: Graph) -> PatternWitness | None:
    for wit in induced_occurrences(g, pattern):
        return wit
    return None


def is_pattern_free(g: Graph, pattern: Graph) -> bool:
    """True iff g contains no induced copy of pattern."""
    return first_occurrence(g, pattern) is None
