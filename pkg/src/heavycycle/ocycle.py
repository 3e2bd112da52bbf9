"""Cycle relaxations: o-cycles/o-paths, deficit, constructive realization,
and the heavy-cycle-or-certificate dichotomy for connected graphs.

An o-cycle relaxes a cycle by only requiring consecutive pairs to lie in the
relaxed adjacency (edge, or degree sum >= n).  The deficit counts consecutive
pairs that are not true edges; realization repairs them one at a time, never
losing vertices, by the rotation/splice/crossing argument.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence, Union

from .graphs import Graph, closure_mask, iter_bits, is_connected, shortest_path
from .heavy import ebar_masks, heavy_mask


class InvalidSequenceError(ValueError):
    """A vertex sequence violating the cycle/o-cycle/o-path contract."""


class RealizationError(RuntimeError):
    """Internal invariant violation during realization — a bug signal."""


class CertificateError(RuntimeError):
    """The structural dichotomy failed to produce a valid certificate — a bug signal."""


def _check_distinct(g: Graph, verts: tuple[int, ...], minimum: int, kind: str) -> None:
    if len(verts) < minimum:
        raise InvalidSequenceError(f"{kind} needs at least {minimum} vertices, got {len(verts)}")
    for v in verts:
        if not 0 <= v < g.n:
            raise InvalidSequenceError(f"{kind} vertex {v} out of range for n={g.n}")
    if len(set(verts)) != len(verts):
        dup = next(v for i, v in enumerate(verts) if v in verts[:i])
        raise InvalidSequenceError(f"{kind} repeats vertex {dup}")


@dataclass(frozen=True)
class CycleSeq:
    """Circular sequence of >= 3 distinct vertices whose consecutive pairs
    (wrap included) are true edges."""

    graph: Graph
    verts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        g, verts = self.graph, self.verts
        _check_distinct(g, verts, 3, "cycle")
        k = len(verts)
        for i in range(k):
            u, v = verts[i], verts[(i + 1) % k]
            if not g.adj[u] >> v & 1:
                raise InvalidSequenceError(
                    f"cycle pair ({u},{v}) at position {i} is not an edge"
                )

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.verts:
            m |= 1 << v
        return m

    def vertex_set(self) -> frozenset:
        return frozenset(self.verts)

    def segment(self, x: int, y: int, reverse: bool = False) -> tuple[int, ...]:
        """Vertices from x to y inclusive, following (or reversing) the orientation."""
        verts = self.verts
        k = len(verts)
        try:
            ix = verts.index(x)
            iy = verts.index(y)
        except ValueError as exc:
            raise InvalidSequenceError(f"segment endpoint not on cycle: {exc}") from None
        step = -1 if reverse else 1
        out = [verts[ix]]
        i = ix
        while verts[i] != y:
            i = (i + step) % k
            out.append(verts[i])
        return tuple(out)


@dataclass(frozen=True)
class OCycleSeq:
    """Circular sequence of >= 3 distinct vertices, consecutive pairs (wrap
    included) in the relaxed adjacency."""

    graph: Graph
    verts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        g, verts = self.graph, self.verts
        _check_distinct(g, verts, 3, "o-cycle")
        eb = ebar_masks(g)
        k = len(verts)
        for i in range(k):
            u, v = verts[i], verts[(i + 1) % k]
            if not eb[u] >> v & 1:
                raise InvalidSequenceError(
                    f"o-cycle pair ({u},{v}) at position {i} is not relaxed-adjacent"
                )

    def __len__(self) -> int:
        return len(self.verts)

    def __iter__(self):
        return iter(self.verts)

    @cached_property
    def mask(self) -> int:
        m = 0
        for v in self.verts:
            m |= 1 << v
        return m


@dataclass(frozen=True)
class OPathSeq:
    """Linear sequence of >= 2 distinct vertices, consecutive pairs in the
    relaxed adjacency (no wrap)."""

    graph: Graph
    verts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "verts", tuple(self.verts))
        g, verts = self.graph, self.verts
        _check_distinct(g, verts, 2, "o-path")
        eb = ebar_masks(g)
        for i in range(len(verts) - 1):
            u, v = verts[i], verts[i + 1]
            if not eb[u] >> v & 1:
                raise InvalidSequenceError(
                    f"o-path pair ({u},{v}) at position {i} is not relaxed-adjacent"
                )

    def __len__(self) -> int:
        return len(self.verts)


def as_cycle(g: Graph, cycle: Union[CycleSeq, Sequence[int]]) -> CycleSeq:
    if isinstance(cycle, CycleSeq):
        if cycle.graph != g:
            raise InvalidSequenceError("cycle belongs to a different host graph")
        return cycle
    return CycleSeq(g, tuple(cycle))


def as_ocycle(g: Graph, oc: Union[OCycleSeq, Sequence[int]]) -> OCycleSeq:
    if isinstance(oc, OCycleSeq):
        if oc.graph != g:
            raise InvalidSequenceError("o-cycle belongs to a different host graph")
        return oc
    return OCycleSeq(g, tuple(oc))


def deficit(g: Graph, oc: Union[OCycleSeq, Sequence[int]]) -> int:
    """Number of consecutive o-cycle pairs (wrap included) that are non-edges."""
    seq = as_ocycle(g, oc).verts
    k = len(seq)
    return sum(
        0 if g.adj[seq[i]] >> seq[(i + 1) % k] & 1 else 1 for i in range(k)
    )


def _raw_deficit(adj: Sequence[int], seq: Sequence[int]) -> int:
    k = len(seq)
    return sum(0 if adj[seq[i]] >> seq[(i + 1) % k] & 1 else 1 for i in range(k))


def realize_info(g: Graph, oc: Union[OCycleSeq, Sequence[int]]) -> tuple[CycleSeq, int]:
    """Realize an o-cycle as a true cycle on a superset of its vertices.

    Returns (cycle, iterations).  Each iteration rotates the sequence so the
    first non-edge pair becomes the wrap pair (v1, vk) — a nonadjacent pair
    with degree sum >= n — then either splices a common outside neighbor
    between vk and v1, or finds a crossing index i (v_i adjacent to v1 and
    v_{i-1} adjacent to vk, guaranteed by counting neighbors on the path) and
    reverses the tail.  Deficit strictly decreases, so iterations <= initial
    deficit.  Ties break to the smallest vertex / smallest index.
    """
    oc = as_ocycle(g, oc)
    seq = list(oc.verts)
    adj = g.adj
    initial = _raw_deficit(adj, seq)
    prev = initial
    iters = 0
    while True:
        k = len(seq)
        pos = next(
            (i for i in range(k) if not adj[seq[i]] >> seq[(i + 1) % k] & 1),
            None,
        )
        if pos is None:
            break
        if iters >= initial:
            raise RealizationError("iteration count exceeded the initial deficit")
        if pos != k - 1:
            seq = seq[pos + 1:] + seq[:pos + 1]
        v1, vk = seq[0], seq[-1]
        used = 0
        for v in seq:
            used |= 1 << v
        common = adj[v1] & adj[vk] & ~used
        if common:
            x = (common & -common).bit_length() - 1
            seq.append(x)
        else:
            a1 = adj[v1]
            ak = adj[vk]
            j = next(
                (
                    j
                    for j in range(3, k)
                    if a1 >> seq[j - 1] & 1 and ak >> seq[j - 2] & 1
                ),
                None,
            )
            if j is None:
                raise RealizationError(
                    "no common outside neighbor and no crossing index: "
                    "input cannot be a valid o-cycle"
                )
            seq = seq[: j - 1] + list(reversed(seq[j - 1:]))
        iters += 1
        now = _raw_deficit(adj, seq)
        if now >= prev:
            raise RealizationError(f"deficit failed to decrease ({prev} -> {now})")
        prev = now
    return CycleSeq(g, tuple(seq)), iters


def realize(g: Graph, oc: Union[OCycleSeq, Sequence[int]]) -> CycleSeq:
    """A true cycle whose vertex set contains the o-cycle's vertex set."""
    return realize_info(g, oc)[0]


# -- no-heavy-cycle certificates -------------------------------------------

@dataclass(frozen=True)
class AcyclicTree:
    """The host is a tree (with no heavy vertex), so it has no cycle at all."""

    kind = "acyclic_tree"


@dataclass(frozen=True)
class OneHeavyStarCut:
    """Unique heavy vertex x whose removal leaves components with exactly one
    attachment each — no cycle can pass through x."""

    kind = "one_heavy_star_cut"
    x: int
    components: tuple[tuple[int, ...], ...]
    attach: tuple[int, ...]


@dataclass(frozen=True)
class TwoHeavyBridge:
    """Heavy pair x,y joined by a cut edge separating two dominated halves."""

    kind = "two_heavy_bridge"
    x: int
    y: int
    side_x: tuple[int, ...]
    side_y: tuple[int, ...]


NoHeavyCycleCertificate = Union[AcyclicTree, OneHeavyStarCut, TwoHeavyBridge]


def validate_certificate(
    g: Graph, cert: NoHeavyCycleCertificate
) -> tuple[bool, list[str]]:
    """Check every invariant of the certificate variant; (ok, reasons)."""
    if not is_connected(g):
        raise ValueError("certificate validation requires a connected host")
    reasons: list[str] = []
    hv = heavy_mask(g)
    n = g.n
    full = (1 << n) - 1

    if isinstance(cert, AcyclicTree):
        if g.edge_count != n - 1:
            reasons.append(f"not a tree: {g.edge_count} edges on {n} vertices")
        if hv:
            reasons.append(f"heavy set nonempty: {sorted(iter_bits(hv))}")
        return not reasons, reasons

    if isinstance(cert, OneHeavyStarCut):
        x = cert.x
        if not 0 <= x < n:
            return False, [f"x={x} out of range"]
        if hv != 1 << x:
            reasons.append(
                f"heavy set {sorted(iter_bits(hv))} is not exactly {{{x}}}"
            )
        rest = full & ~(1 << x)
        seen = 0
        comp_masks = []
        for comp in cert.components:
            m = 0
            for v in comp:
                if not 0 <= v < n or v == x:
                    reasons.append(f"component vertex {v} invalid")
                    m = -1
                    break
                m |= 1 << v
            if m < 0:
                continue
            comp_masks.append(m)
            if seen & m:
                reasons.append("components overlap")
            seen |= m
        if seen != rest:
            reasons.append("components do not partition the rest of the graph")
        if len(cert.attach) != len(cert.components):
            reasons.append("one attachment per component required")
        for m, a in zip(comp_masks, cert.attach):
            if closure_mask(g.adj, m & -m, m) != m:
                reasons.append(f"component {sorted(iter_bits(m))} not connected")
            if g.adj[x] & m != 1 << a:
                reasons.append(
                    f"component {sorted(iter_bits(m))} does not attach to x "
                    f"exactly at {a}"
                )
        if 2 * len(cert.components) < n:
            reasons.append(
                f"component count {len(cert.components)} below n/2 threshold"
            )
        return not reasons, reasons

    if isinstance(cert, TwoHeavyBridge):
        x, y = cert.x, cert.y
        for v in (x, y):
            if not 0 <= v < n:
                return False, [f"vertex {v} out of range"]
        if hv != (1 << x) | (1 << y):
            reasons.append(
                f"heavy set {sorted(iter_bits(hv))} is not exactly {{{x},{y}}}"
            )
        if not g.adj[x] >> y & 1:
            reasons.append(f"xy=({x},{y}) is not an edge")
            return False, reasons
        sx = 0
        for v in cert.side_x:
            sx |= 1 << v
        sy = 0
        for v in cert.side_y:
            sy |= 1 << v
        if sx & sy or sx | sy != full:
            reasons.append("sides do not partition the vertex set")
        if not (sx >> x & 1 and sy >> y & 1):
            reasons.append("x/y not in their own sides")
        if n % 2 or 2 * len(cert.side_x) != n or 2 * len(cert.side_y) != n:
            reasons.append(f"sides must both have n/2 vertices (n={n})")
        # xy must be a cut edge with exactly these sides
        reach_x = closure_mask(g.adj, 1 << x, full & ~(1 << y))
        cross = sum(
            1 for v in iter_bits(sx) for u in iter_bits(g.adj[v] & sy)
        )
        if cross != 1:
            reasons.append(f"{cross} edges cross between sides; only xy allowed")
        elif reach_x != sx:
            reasons.append("removing xy does not separate the stated sides")
        if g.adj[x] & sx != sx & ~(1 << x):
            reasons.append("x is not adjacent to all of its side")
        if g.adj[y] & sy != sy & ~(1 << y):
            reasons.append("y is not adjacent to all of its side")
        return not reasons, reasons

    return False, [f"unknown certificate type {type(cert).__name__}"]


# -- certificate builders (pure structure scans) ---------------------------

def _components_avoiding(g: Graph, x: int) -> list[int]:
    full = ((1 << g.n) - 1) & ~(1 << x)
    comps = []
    seen = 0
    while seen != full:
        start = (full & ~seen) & -(full & ~seen)
        comp = closure_mask(g.adj, start, full)
        comps.append(comp)
        seen |= comp
    return comps


def _build_star_cut(g: Graph, x: int) -> OneHeavyStarCut:
    comps = _components_avoiding(g, x)
    comps.sort()
    attach = []
    for m in comps:
        nb = g.adj[x] & m
        attach.append((nb & -nb).bit_length() - 1 if nb else -1)
    return OneHeavyStarCut(
        x=x,
        components=tuple(tuple(iter_bits(m)) for m in comps),
        attach=tuple(attach),
    )


def _build_bridge(g: Graph, x: int, y: int) -> TwoHeavyBridge:
    full = (1 << g.n) - 1
    mask_x = closure_mask(_adj_without_edge(g, x, y), 1 << x, full)
    return TwoHeavyBridge(
        x=x,
        y=y,
        side_x=tuple(iter_bits(mask_x)),
        side_y=tuple(iter_bits(full & ~mask_x)),
    )


def _adj_without_edge(g: Graph, x: int, y: int) -> tuple[int, ...]:
    adj = list(g.adj)
    adj[x] &= ~(1 << y)
    adj[y] &= ~(1 << x)
    return tuple(adj)


def structural_certificate(g: Graph) -> NoHeavyCycleCertificate | None:
    """Detect a valid no-heavy-cycle certificate directly from the structure,
    independent of the constructive search."""
    if not is_connected(g):
        raise ValueError("certificate detection requires a connected host")
    hv = heavy_mask(g)
    h = hv.bit_count()
    candidates: list[NoHeavyCycleCertificate] = []
    if h == 0:
        candidates.append(AcyclicTree())
    elif h == 1:
        candidates.append(_build_star_cut(g, hv.bit_length() - 1))
    elif h == 2:
        x = (hv & -hv).bit_length() - 1
        y = (hv & ~(1 << x)).bit_length() - 1
        if g.adj[x] >> y & 1:
            candidates.append(_build_bridge(g, x, y))
    for cert in candidates:
        ok, _ = validate_certificate(g, cert)
        if ok:
            return cert
    return None


# -- the dichotomy ---------------------------------------------------------

def find_any_cycle(g: Graph) -> list[int] | None:
    """Some cycle (as a vertex list) via DFS back edges, or None."""
    n = g.n
    state = [0] * n  # 0 unseen, 1 on stack, 2 done
    for root in range(n):
        if state[root]:
            continue
        path = [root]
        iters = [iter(g.neighbors(root))]
        parent = {root: -1}
        state[root] = 1
        while path:
            v = path[-1]
            advanced = False
            for u in iters[-1]:
                if state[u] == 1 and u != parent[v]:
                    return path[path.index(u):]
                if state[u] == 0:
                    parent[u] = v
                    state[u] = 1
                    path.append(u)
                    iters.append(iter(g.neighbors(u)))
                    advanced = True
                    break
            if not advanced:
                state[v] = 2
                path.pop()
                iters.pop()
    return None


def _exhaustive_heavy_cycle(g: Graph) -> CycleSeq | None:
    """Subset-DP search for any cycle covering the heavy set (n <= 16)."""
    from .circumference import cycle_with_required_mask

    return cycle_with_required_mask(g, heavy_mask(g))


def heavy_cycle_or_certificate(g: Graph) -> Union[CycleSeq, NoHeavyCycleCertificate]:
    """A true cycle through every heavy vertex, or structural evidence that
    none exists (tree / star cut / dominated bridge).

    Strategy by heavy count h: h >= 3 realizes the circular order of the
    heavies (pairwise relaxed-adjacent); h = 2 closes any x-y path of >= 3
    vertices into an o-cycle, else the bridge certificate; h = 1 finds a
    cycle through x via a doubly-attached component, else the star cut;
    h = 0 takes any cycle, else the tree certificate.
    """
    if not is_connected(g):
        raise ValueError("heavy_cycle_or_certificate requires a connected graph")
    hv = heavy_mask(g)
    h = hv.bit_count()

    if h >= 3:
        return realize(g, tuple(iter_bits(hv)))

    if h == 2:
        x = (hv & -hv).bit_length() - 1
        y = (hv & ~(1 << x)).bit_length() - 1
        if g.adj[x] >> y & 1:
            prev = shortest_path(
                Graph(g.n, _adj_without_edge(g, x, y)), x, y
            )
        else:
            prev = shortest_path(g, x, y)
        if prev is not None and len(prev) >= 3:
            return realize(g, tuple(prev))
        cert = _build_bridge(g, x, y) if g.adj[x] >> y & 1 else None
        return _certify_or_fail(g, cert, "case (3): two heavy vertices joined by a bridge")

    if h == 1:
        x = hv.bit_length() - 1
        for comp in _components_avoiding(g, x):
            nb = g.adj[x] & comp
            if nb.bit_count() >= 2:
                a = (nb & -nb).bit_length() - 1
                b = (nb & ~(1 << a) & -(nb & ~(1 << a))).bit_length() - 1
                path = shortest_path(g, a, b, forbidden=~comp & ((1 << g.n) - 1))
                return CycleSeq(g, (x, *path))
        return _certify_or_fail(g, _build_star_cut(g, x), "case (2): star cut at the heavy vertex")

    cyc = find_any_cycle(g)
    if cyc is not None:
        return CycleSeq(g, tuple(cyc))
    return _certify_or_fail(g, AcyclicTree(), "case (1): acyclic host")


def _certify_or_fail(
    g: Graph, cert: NoHeavyCycleCertificate | None, clause: str
) -> Union[CycleSeq, NoHeavyCycleCertificate]:
    reasons = ["no certificate pattern constructed"]
    if cert is not None:
        ok, reasons = validate_certificate(g, cert)
        if ok:
            return cert
    # The structural dichotomy says this is unreachable; double-check by
    # exhaustive search before failing loudly.
    if g.n <= 16:
        found = _exhaustive_heavy_cycle(g)
        if found is not None:
            return found
    raise CertificateError(
        f"dichotomy failure in {clause}: certificate invalid ({'; '.join(reasons)}) "
        "and no heavy cycle found"
    )
