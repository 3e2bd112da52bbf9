"""Immutable small-graph core: bitmask adjacency, graph6 I/O, connectivity.

Vertices are always 0..n-1.  Adjacency is stored as one Python int bitmask
per vertex, which keeps the hot loops (BFS closures, subset DP, refinement)
in C-speed integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

# A vertex subset is just a frozenset of ints in range(n); helpers below
# validate membership where the public API promises it.
VertexSet = frozenset


class Graph6Error(ValueError):
    """Malformed graph6 input; carries the byte offset of the offending byte."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_list(mask: int) -> list[int]:
    return list(iter_bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1, immutable and hashable."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"adjacency row {v} mentions vertices >= n")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v, row in enumerate(self.adj):
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u},{v}) not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError(f"cycle graph needs n >= 3, got {n}")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        """K_{1,leaves} with the center at vertex 0."""
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    # -- queries -----------------------------------------------------------

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    @cached_property
    def edge_count(self) -> int:
        return sum(self.degrees) // 2

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self.degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return tuple(iter_bits(self.adj[v]))

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in iter_bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def with_edge(self, u: int, v: int) -> "Graph":
        self.check_vertex(u)
        self.check_vertex(v)
        if u == v:
            raise ValueError("self-loop not allowed")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def check_vertex_set(g: Graph, xs: Iterable[int]) -> frozenset:
    xs = frozenset(xs)
    for v in xs:
        g.check_vertex(v)
    return xs


# -- graph6 codec (short form only, 1 <= n <= 62) --------------------------

_G6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode as a graph6 string (no header, no trailing newline)."""
    n = g.n
    if not 1 <= n <= 62:
        raise Graph6Error(f"graph6 short form supports 1 <= n <= 62, got n={n}")
    bits = []
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        word = 0
        for b in bits[k:k + 6]:
            word = word << 1 | b
        out.append(chr(word + 63))
    return "".join(out)


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record; accepts the optional >>graph6<< header."""
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip()
    if text.startswith(_G6_HEADER):
        text = text[len(_G6_HEADER):]
    if not text:
        raise Graph6Error("empty graph6 record", offset=0)
    for off, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range 63..126", offset=off)
    head = ord(text[0]) - 63
    if head == 63:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", offset=0)
    n = head
    nbits = n * (n - 1) // 2
    body_len = (nbits + 5) // 6
    if len(text) != 1 + body_len:
        raise Graph6Error(
            f"record for n={n} needs {1 + body_len} bytes, got {len(text)}",
            offset=min(len(text), 1 + body_len),
        )
    bits = []
    for k in range(body_len):
        word = ord(text[1 + k]) - 63
        for shift in range(5, -1, -1):
            bits.append(word >> shift & 1)
    for pad_index in range(nbits, len(bits)):
        if bits[pad_index]:
            raise Graph6Error("nonzero padding bits", offset=1 + pad_index // 6)
    adj = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(adj))


# -- connectivity and distance ---------------------------------------------

def closure_mask(adj: tuple[int, ...], start: int, allowed: int) -> int:
    """Vertices reachable from the start mask inside the allowed mask."""
    reach = start & allowed
    frontier = reach
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= adj[v]
        frontier = grow & allowed & ~reach
        reach |= frontier
    return reach


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    full = (1 << g.n) - 1
    return closure_mask(g.adj, 1, full) == full


def connected_component_masks(g: Graph) -> list[int]:
    """Vertex masks of the connected components, ordered by least vertex."""
    full = (1 << g.n) - 1
    seen = 0
    comps = []
    while seen != full:
        start = (full & ~seen) & -(full & ~seen)
        comp = closure_mask(g.adj, start, full)
        comps.append(comp)
        seen |= comp
    return comps


def articulation_points(g: Graph) -> frozenset:
    """Cut vertices, via an iterative lowpoint DFS."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cuts = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        stack = [(root, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    parent[u] = v
                    if v == root:
                        root_children += 1
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, iter(g.neighbors(u))))
                    advanced = True
                    break
                elif u != parent[v]:
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        cuts.add(p)
        if root_children >= 2:
            cuts.add(root)
    return frozenset(cuts)


def is_two_connected(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not articulation_points(g)


def biconnected_component_masks(g: Graph) -> list[int]:
    """Vertex masks of the biconnected blocks (each with >= 1 edge)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[int] = []

    def pop_block(u: int, v: int) -> None:
        mask = 0
        while edge_stack:
            a, b = edge_stack.pop()
            mask |= 1 << a | 1 << b
            if (a, b) == (u, v):
                break
        blocks.append(mask)

    for root in range(n):
        if disc[root] != -1:
            continue
        stack = [(root, iter(g.neighbors(root)))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, it = stack[-1]
            advanced = False
            for u in it:
                if disc[u] == -1:
                    parent[u] = v
                    edge_stack.append((v, u))
                    disc[u] = low[u] = timer
                    timer += 1
                    stack.append((u, iter(g.neighbors(u))))
                    advanced = True
                    break
                elif u != parent[v] and disc[u] < disc[v]:
                    edge_stack.append((v, u))
                    if disc[u] < low[v]:
                        low[v] = disc[u]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        pop_block(p, v)
        # isolated root with no incident edges produces no block
    return blocks


def distance(g: Graph, x: int, y: int) -> int | float:
    """BFS distance between x and y; inf when disconnected."""
    g.check_vertex(x)
    g.check_vertex(y)
    if x == y:
        return 0
    full = (1 << g.n) - 1
    reach = 1 << x
    frontier = reach
    d = 0
    while frontier:
        grow = 0
        for v in iter_bits(frontier):
            grow |= g.adj[v]
        frontier = grow & full & ~reach
        reach |= frontier
        d += 1
        if frontier >> y & 1:
            return d
    return float("inf")


def shortest_path(g: Graph, x: int, y: int, forbidden: int = 0) -> list[int] | None:
    """A shortest x-y path avoiding the forbidden vertex mask, or None."""
    g.check_vertex(x)
    g.check_vertex(y)
    if (forbidden >> x & 1) or (forbidden >> y & 1):
        return None
    if x == y:
        return [x]
    allowed = ((1 << g.n) - 1) & ~forbidden
    prev = {x: -1}
    frontier = [x]
    while frontier:
        nxt = []
        for v in frontier:
            for u in iter_bits(g.adj[v] & allowed):
                if u not in prev:
                    prev[u] = v
                    if u == y:
                        path = [y]
                        while path[-1] != x:
                            path.append(prev[path[-1]])
                        path.reverse()
                        return path
                    nxt.append(u)
        frontier = nxt
    return None


def induced(g: Graph, xs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on xs plus the old->new vertex relabeling map."""
    xs = sorted(check_vertex_set(g, xs))
    remap = {old: new for new, old in enumerate(xs)}
    adj = [0] * len(xs)
    for new, old in enumerate(xs):
        row = g.adj[old]
        for other in iter_bits(row):
            j = remap.get(other)
            if j is not None:
                adj[new] |= 1 << j
    return Graph(len(xs), tuple(adj)), remap


def induced_mask(g: Graph, mask: int) -> tuple[Graph, dict[int, int]]:
    return induced(g, iter_bits(mask))
