"""Exact longest-cycle engines.

Two engines, cross-validated against each other:

* subset DP (n <= 18): Held-Karp-style table over vertex subsets anchored at
  the subset's minimum vertex; dp[mask] is the bitmask of endpoints of paths
  from min(mask) spanning exactly mask.  Exact, no budget needed.

* branch and bound (any n): biconnected-block decomposition, contraction of
  degree-2 chains into weighted parallel edges, then anchored DFS over the
  contracted multigraph with an admissible reachability bound and a
  dominance table.  Reports exhausted=false when a budget trips.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .graphs import (
    Graph,
    biconnected_component_masks,
    closure_mask,
    induced_mask,
    iter_bits,
)
from .heavy import heavy_mask
from .ocycle import CycleSeq

DP_MAX_N = 18
ENUMERATION_MAX_N = 14
SUPPORT_MAX_N = 16


@dataclass(frozen=True)
class Budget:
    """Search limits for the branch-and-bound engine."""

    max_seconds: float = 600.0
    max_nodes: int = 100_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class CircumferenceResult:
    """length 0 means acyclic; exhausted means optimality was proven.

    upper_bound equals length when exhausted; otherwise it is the best
    proven upper bound (trivially n when the search was cut off early).
    """

    length: int
    witness: Optional[CycleSeq]
    exhausted: bool
    upper_bound: int


# -- subset DP engine ------------------------------------------------------

def _dp_table(g: Graph) -> list[int]:
    """dp[mask] = endpoint bitmask of paths from min(mask) spanning mask."""
    n = g.n
    adj = g.adj
    size = 1 << n
    dp = [0] * size
    for v in range(n):
        dp[1 << v] = 1 << v
    above = [(size - 1) & ~((1 << (a + 1)) - 1) for a in range(n)]
    for mask in range(1, size):
        ep = dp[mask]
        if not ep:
            continue
        a = (mask & -mask).bit_length() - 1
        nbr = 0
        e = ep
        while e:
            low = e & -e
            nbr |= adj[low.bit_length() - 1]
            e ^= low
        cand = nbr & above[a] & ~mask
        while cand:
            low = cand & -cand
            dp[mask | low] |= low
            cand ^= low
    return dp


def _reconstruct(g: Graph, dp: list[int], mask: int, endpoint: int) -> list[int]:
    """Walk a spanning path of mask from min(mask) to endpoint backwards."""
    adj = g.adj
    path = [endpoint]
    cur = endpoint
    m = mask
    while m != m & -m:
        pm = m & ~(1 << cur)
        prev_opts = dp[pm] & adj[cur]
        assert prev_opts, "dp reconstruction lost its trail"
        cur = (prev_opts & -prev_opts).bit_length() - 1
        path.append(cur)
        m = pm
    path.reverse()
    return path


def subset_dp_circumference(g: Graph) -> CircumferenceResult:
    """Exact circumference by subset DP; guard n <= 18."""
    n = g.n
    if n > DP_MAX_N:
        raise ValueError(f"subset DP guard is n <= {DP_MAX_N}, got {n}")
    adj = g.adj
    dp = _dp_table(g)
    best_len = 0
    best = None  # (mask, endpoint)
    for mask in range(1, 1 << n):
        ep = dp[mask]
        if not ep:
            continue
        k = mask.bit_count()
        if k < 3 or k <= best_len:
            continue
        a = (mask & -mask).bit_length() - 1
        closers = ep & adj[a]
        if closers:
            best_len = k
            best = (mask, (closers & -closers).bit_length() - 1)
    if best is None:
        return CircumferenceResult(0, None, True, 0)
    witness = CycleSeq(g, tuple(_reconstruct(g, dp, best[0], best[1])))
    return CircumferenceResult(best_len, witness, True, best_len)


def cycle_with_required_mask(g: Graph, required: int) -> Optional[CycleSeq]:
    """Some cycle whose vertex set contains the required mask, or None.

    Exhaustive over all cycle supports; guard n <= 16.
    """
    n = g.n
    if n > SUPPORT_MAX_N:
        raise ValueError(f"cycle-support search guard is n <= {SUPPORT_MAX_N}, got {n}")
    if n < 3:
        return None
    adj = g.adj
    dp = _dp_table(g)
    for mask in range(1, 1 << n):
        if mask & required != required:
            continue
        ep = dp[mask]
        if not ep or mask.bit_count() < 3:
            continue
        a = (mask & -mask).bit_length() - 1
        closers = ep & adj[a]
        if closers:
            endpoint = (closers & -closers).bit_length() - 1
            return CycleSeq(g, tuple(_reconstruct(g, dp, mask, endpoint)))
    return None


def has_heavy_cycle_brute(g: Graph) -> bool:
    """Exhaustive check: does any cycle contain every heavy vertex?"""
    return cycle_with_required_mask(g, heavy_mask(g)) is not None


def longest_cycle_through_dp(g: Graph, x: int) -> CircumferenceResult:
    """Longest cycle through x by DP anchored at x; 0 if none (n <= 18)."""
    n = g.n
    if n > DP_MAX_N:
        raise ValueError(f"subset DP guard is n <= {DP_MAX_N}, got {n}")
    g.check_vertex(x)
    adj = g.adj
    size = 1 << n
    xbit = 1 << x
    dp = [0] * size
    dp[xbit] = xbit
    best_len = 0
    best = None
    for mask in range(xbit, size):
        if not mask & xbit:
            continue
        ep = dp[mask]
        if not ep:
            continue
        k = mask.bit_count()
        if k >= 3 and k > best_len and ep & adj[x]:
            closers = ep & adj[x]
            best_len = k
            best = (mask, (closers & -closers).bit_length() - 1)
        nbr = 0
        e = ep
        while e:
            low = e & -e
            nbr |= adj[low.bit_length() - 1]
            e ^= low
        cand = nbr & ~mask
        while cand:
            low = cand & -cand
            dp[mask | low] |= low
            cand ^= low
    if best is None:
        return CircumferenceResult(0, None, True, 0)
    witness = CycleSeq(g, tuple(_reconstruct_anchor(g, dp, best[0], best[1], x)))
    return CircumferenceResult(best_len, witness, True, best_len)


def _reconstruct_anchor(
    g: Graph, dp: list[int], mask: int, endpoint: int, anchor: int
) -> list[int]:
    adj = g.adj
    path = [endpoint]
    cur = endpoint
    m = mask
    while m != 1 << anchor:
        pm = m & ~(1 << cur)
        prev_opts = dp[pm] & adj[cur]
        assert prev_opts, "dp reconstruction lost its trail"
        cur = (prev_opts & -prev_opts).bit_length() - 1
        path.append(cur)
        m = pm
    path.reverse()
    return path


# -- branch and bound engine -----------------------------------------------

class _BudgetTracker:
    __slots__ = ("deadline", "max_nodes", "nodes", "tripped")

    def __init__(self, budget: Budget):
        self.deadline = time.monotonic() + budget.max_seconds
        self.max_nodes = budget.max_nodes
        self.nodes = 0
        self.tripped = False

    def tick(self) -> bool:
        """Account one search node; True while within budget."""
        self.nodes += 1
        if self.nodes > self.max_nodes:
            self.tripped = True
        elif not self.nodes & 0x3FF and time.monotonic() > self.deadline:
            self.tripped = True
        return not self.tripped


class _Contracted:
    """Weighted multigraph after contracting degree-2 chains of a block.

    Vertices are the block's branch vertices (degree >= 3).  Each edge is a
    chain (a, b, weight, interior): weight counts interior vertices; the
    interior tuple is oriented from a to b in block-local vertex ids.
    """

    __slots__ = ("m", "branch", "edges", "adj", "nbr")

    def __init__(self, block: Graph):
        deg = block.degrees
        self.branch = [v for v in range(block.n) if deg[v] >= 3]
        index = {v: i for i, v in enumerate(self.branch)}
        self.m = len(self.branch)
        self.edges: list[tuple[int, int, int, tuple[int, ...]]] = []
        self.adj: list[list[tuple[int, int, int]]] = [[] for _ in range(self.m)]
        self.nbr = [0] * self.m  # simple (parallel-collapsed) adjacency masks
        seen_arcs = set()
        for b in self.branch:
            for w0 in block.neighbors(b):
                if (b, w0) in seen_arcs:
                    continue
                prev, cur = b, w0
                interior = []
                while deg[cur] == 2:
                    interior.append(cur)
                    nxt_mask = block.adj[cur] & ~(1 << prev)
                    prev, cur = cur, nxt_mask.bit_length() - 1
                seen_arcs.add((b, w0))
                seen_arcs.add((cur, prev))
                assert cur != b, "chain loop inside a non-cycle 2-connected block"
                eid = len(self.edges)
                a_i, b_i = index[b], index[cur]
                self.edges.append((a_i, b_i, len(interior), tuple(interior)))
                self.adj[a_i].append((eid, b_i, len(interior)))
                self.adj[b_i].append((eid, a_i, len(interior)))
                self.nbr[a_i] |= 1 << b_i
                self.nbr[b_i] |= 1 << a_i

    def expand(self, steps: list[tuple[int, int]]) -> list[int]:
        """Turn [(vertex_index, edge_id), ...] into block-local vertex ids.

        Each step leaves its vertex along its edge; the last edge returns to
        the first vertex.
        """
        out: list[int] = []
        for v_i, eid in steps:
            a_i, b_i, _w, interior = self.edges[eid]
            out.append(self.branch[v_i])
            out.extend(interior if v_i == a_i else reversed(interior))
        return out


def _blocks_between(nbr: list[int], mask: int, s: int, t: int) -> int:
    """Union of the biconnected blocks on the s-to-t path of the block-cut
    tree of the graph (nbr rows) restricted to mask.  Any simple s-t path
    stays inside these blocks.  Assumes s and t are connected within mask."""
    if s == t:
        return 1 << s
    # iterative lowpoint DFS with an edge stack, restricted to mask
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    parent: dict[int, int] = {s: -1}
    timer = 0
    edge_stack: list[tuple[int, int]] = []
    blocks: list[int] = []
    stack = [(s, iter_bits(nbr[s] & mask))]
    disc[s] = low[s] = timer
    timer += 1
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if u not in disc:
                parent[u] = v
                edge_stack.append((v, u))
                disc[u] = low[u] = timer
                timer += 1
                stack.append((u, iter_bits(nbr[u] & mask)))
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
                    bmask = 0
                    while edge_stack:
                        a, b = edge_stack.pop()
                        bmask |= 1 << a | 1 << b
                        if (a, b) == (p, v):
                            break
                    blocks.append(bmask)
    # BFS over the block-cut incidence structure from s to t
    prev: dict[tuple[str, int], tuple[str, int] | None] = {}
    frontier: list[tuple[str, int]] = [("v", s)]
    prev[("v", s)] = None
    goal = ("v", t)
    while frontier and goal not in prev:
        nxt: list[tuple[str, int]] = []
        for node in frontier:
            if node[0] == "v":
                for i, b in enumerate(blocks):
                    if b >> node[1] & 1 and ("b", i) not in prev:
                        prev[("b", i)] = node
                        nxt.append(("b", i))
            else:
                for u in iter_bits(blocks[node[1]]):
                    if ("v", u) not in prev:
                        prev[("v", u)] = node
                        nxt.append(("v", u))
                        if u == t:
                            nxt = [("v", t)]
                            break
        frontier = nxt
    if goal not in prev:
        return (1 << s) | (1 << t)  # should not happen when connected
    ok = 0
    node: tuple[str, int] | None = goal
    while node is not None:
        if node[0] == "b":
            ok |= blocks[node[1]]
        node = prev[node]
    return ok


class _BlockSearch:
    """Anchored DFS over a contracted block with bound + dominance pruning."""

    def __init__(self, cg: _Contracted, tracker: _BudgetTracker):
        self.cg = cg
        self.tracker = tracker
        self.best = 0
        self.best_steps: list[tuple[int, int]] | None = None
        # heaviest chain per vertex pair, descending — a simple closing path
        # uses at most one chain between any two branch vertices
        pair_best: dict[tuple[int, int], int] = {}
        for a_i, b_i, w, _ in cg.edges:
            key = (min(a_i, b_i), max(a_i, b_i))
            if w > pair_best.get(key, -1):
                pair_best[key] = w
        self.weighted_pairs = sorted(
            ((w, a_i, b_i) for (a_i, b_i), w in pair_best.items() if w > 0),
            reverse=True,
        )
        self.memo: dict[tuple[int, int], int] = {}
        self.exhausted = True

    def _closure(self, start_bit: int, residual: int) -> int:
        nbr = self.cg.nbr
        reach = start_bit
        frontier = reach
        while frontier:
            grow = 0
            while frontier:
                low = frontier & -frontier
                grow |= nbr[low.bit_length() - 1]
                frontier ^= low
            frontier = grow & residual & ~reach
            reach |= frontier
        return reach

    def _gain(self, ok: int, q: int) -> int:
        """Top chain weights usable by a closing path with q interior vertices."""
        budget_edges = q + 1
        gain = 0
        for w, a_i, b_i in self.weighted_pairs:
            if budget_edges == 0:
                break
            if ok >> a_i & 1 and ok >> b_i & 1:
                gain += w
                budget_edges -= 1
        return gain

    def _bound(self, e: int, anchor: int, visited: int, length: int, allowed: int) -> int:
        """Admissible overestimate of the best cycle extending this path.

        Tier 1: the closing path from e to the anchor can only use residual
        vertices reachable from e; with q of them it uses q+1 chains, so the
        gain is at most q plus the q+1 heaviest per-pair chain weights.
        Tier 2 (only when tier 1 fails to prune): restrict further to the
        biconnected blocks on the e-to-anchor path of the residual graph —
        a simple path cannot enter a pendant block and come back.
        """
        residual = (allowed & ~visited) | (1 << anchor) | (1 << e)
        reach = self._closure(1 << e, residual) & residual
        if not reach >> anchor & 1:
            return -1  # cannot close
        q = (reach & ~(1 << anchor) & ~(1 << e)).bit_count()
        ub = length + q + self._gain(reach, q)
        if ub <= self.best:
            return ub
        ok = _blocks_between(self.cg.nbr, reach, e, anchor)
        q = (ok & ~(1 << anchor) & ~(1 << e)).bit_count()
        return length + q + self._gain(ok, q)

    def _record(self, steps: list[tuple[int, int]], length: int) -> None:
        self.best = length
        self.best_steps = list(steps)

    def pair_cycles(self, anchor_filter=None, required_edge: int | None = None) -> None:
        """Cycles on two branch vertices via parallel chains (2 + w1 + w2)."""
        cg = self.cg
        by_pair: dict[tuple[int, int], list[tuple[int, int]]] = {}
        for eid, (a_i, b_i, w, _) in enumerate(cg.edges):
            key = (min(a_i, b_i), max(a_i, b_i))
            by_pair.setdefault(key, []).append((w, eid))
        for (a_i, b_i), lst in by_pair.items():
            if len(lst) < 2:
                continue
            if anchor_filter is not None and anchor_filter not in (a_i, b_i):
                continue
            lst.sort(reverse=True)
            if required_edge is not None:
                pool = [we for we in lst if we[1] == required_edge]
                if not pool:
                    continue
                w1, e1 = pool[0]
                others = [we for we in lst if we[1] != required_edge]
                if not others:
                    continue
                w2, e2 = others[0]
            else:
                (w1, e1), (w2, e2) = lst[0], lst[1]
            total = 2 + w1 + w2
            if total >= 3 and total > self.best:
                self._record([(a_i, e1), (b_i, e2)], total)

    def run_anchor(
        self,
        anchor: int,
        allowed: int,
        stop_at: int | None,
        start: tuple[int, int, int, list[tuple[int, int]]] | None = None,
    ) -> None:
        """DFS all cycles (>= 3 branch vertices) with the given anchor.

        allowed restricts which branch vertices may appear.  start optionally
        pre-loads a forced first move (endpoint, visited, length, steps).
        """
        cg = self.cg
        self.memo.clear()  # states are only comparable under one anchor
        memo = self.memo
        tracker = self.tracker

        def rec(e: int, visited: int, length: int, steps: list[tuple[int, int]]) -> bool:
            if not tracker.tick():
                self.exhausted = False
                return False
            key = (visited, e)
            prior = memo.get(key)
            if prior is not None and prior >= length:
                return True
            if len(memo) < 4_000_000:
                memo[key] = length
            if self._bound(e, anchor, visited, length, allowed) <= self.best:
                return True
            for eid, u, w in cg.adj[e]:
                if u == anchor:
                    if visited.bit_count() >= 3:
                        total = length + w
                        if total > self.best:
                            self._record(steps + [(e, eid)], total)
                            if stop_at is not None and self.best >= stop_at:
                                return False
                elif not visited >> u & 1 and allowed >> u & 1:
                    if not rec(u, visited | 1 << u, length + w + 1, steps + [(e, eid)]):
                        return False
            return True

        if start is not None:
            e0, visited0, len0, steps0 = start
            rec(e0, visited0, len0, steps0)
            return
        for eid, u, w in cg.adj[anchor]:
            if not allowed >> u & 1 or u == anchor:
                continue
            if not rec(u, (1 << anchor) | (1 << u), 2 + w, [(anchor, eid)]):
                return


def _search_block(
    block: Graph,
    tracker: _BudgetTracker,
    require_local: int | None,
    stop_at: int | None,
) -> tuple[int, list[int] | None, bool]:
    """Longest cycle in one biconnected block (>= 3 vertices).

    Returns (length, block-local witness, exhausted).  require_local forces
    the cycle through that block-local vertex.
    """
    if all(d == 2 for d in block.degrees):
        # the block is a single cycle
        return block.n, list(range_cycle(block)), True
    cg = _Contracted(block)
    search = _BlockSearch(cg, tracker)
    if require_local is None:
        search.pair_cycles()
        for anchor in range(cg.m):
            if stop_at is not None and search.best >= stop_at:
                break
            allowed = ((1 << cg.m) - 1) & ~((1 << anchor) - 1)
            search.run_anchor(anchor, allowed, stop_at)
            if not search.exhausted:
                break
    else:
        deg = block.degrees
        allowed = (1 << cg.m) - 1
        if deg[require_local] >= 3:
            rx = cg.branch.index(require_local)
            search.pair_cycles(anchor_filter=rx)
            if stop_at is None or search.best < stop_at:
                search.run_anchor(rx, allowed, stop_at)
        else:
            # interior of exactly one chain: force that chain edge
            ce = next(
                eid
                for eid, (_a, _b, _w, interior) in enumerate(cg.edges)
                if require_local in interior
            )
            a_i, b_i, w, _ = cg.edges[ce]
            search.pair_cycles(anchor_filter=None, required_edge=ce)
            if stop_at is None or search.best < stop_at:
                search.run_anchor(
                    a_i,
                    allowed,
                    stop_at,
                    start=(b_i, (1 << a_i) | (1 << b_i), 2 + w, [(a_i, ce)]),
                )
    witness = cg.expand(search.best_steps) if search.best_steps else None
    return search.best, witness, search.exhausted


def range_cycle(block: Graph) -> Iterator[int]:
    """Traverse a block that is itself a cycle, starting at 0."""
    prev, cur = -1, 0
    for _ in range(block.n):
        yield cur
        nxt_mask = block.adj[cur] & ~(1 << prev) if prev >= 0 else block.adj[cur]
        prev, cur = cur, (nxt_mask & -nxt_mask).bit_length() - 1


def branch_and_bound_circumference(
    g: Graph,
    budget: Budget = DEFAULT_BUDGET,
    require_vertex: int | None = None,
    stop_at: int | None = None,
) -> CircumferenceResult:
    """Longest cycle (optionally through require_vertex) by decomposition +
    branch and bound.  stop_at short-circuits once a cycle that long is found.
    """
    if require_vertex is not None:
        g.check_vertex(require_vertex)
    tracker = _BudgetTracker(budget)
    best_len = 0
    best_verts: list[int] | None = None
    exhausted = True
    blocks = [m for m in biconnected_component_masks(g) if m.bit_count() >= 3]
    if require_vertex is not None:
        blocks = [m for m in blocks if m >> require_vertex & 1]
    # search big blocks first: they carry the incumbent
    blocks.sort(key=lambda m: -m.bit_count())
    for mask in blocks:
        if stop_at is not None and best_len >= stop_at:
            break
        block, remap = induced_mask(g, mask)
        inverse = {new: old for old, new in remap.items()}
        require_local = remap[require_vertex] if require_vertex is not None else None
        length, verts, block_done = _search_block(
            block, tracker, require_local, stop_at
        )
        if length > best_len:
            best_len = length
            best_verts = [inverse[v] for v in verts] if verts is not None else None
        if not block_done:
            exhausted = False
            break
    witness = CycleSeq(g, tuple(best_verts)) if best_verts else None
    if stop_at is not None and best_len >= stop_at:
        # existence proven; exhaustiveness of the remainder is irrelevant
        return CircumferenceResult(best_len, witness, True, g.n)
    upper = best_len if exhausted else g.n
    return CircumferenceResult(best_len, witness, exhausted, upper)


# -- public dispatch -------------------------------------------------------

def circumference(g: Graph, budget: Budget = DEFAULT_BUDGET) -> CircumferenceResult:
    """Exact circumference: subset DP for n <= 18, else branch and bound."""
    if g.n <= DP_MAX_N:
        return subset_dp_circumference(g)
    return branch_and_bound_circumference(g, budget)


def has_cycle_through_at_least(
    g: Graph, x: int, target: int, budget: Budget = DEFAULT_BUDGET
) -> tuple[bool, bool]:
    """(found, proven): is there a cycle through x with >= target vertices?

    proven=True means the answer is definitive (search exhausted or witness
    found); proven=False means the budget tripped with no witness.
    """
    if g.n <= DP_MAX_N:
        res = longest_cycle_through_dp(g, x)
        return res.length >= target, True
    res = branch_and_bound_circumference(
        g, budget, require_vertex=x, stop_at=target
    )
    if res.length >= target:
        return True, True
    return False, res.exhausted


# -- longest-cycle enumeration ---------------------------------------------

def _iter_longest_cycles(g: Graph, target: int) -> Iterator[tuple[int, ...]]:
    """All cycles of exactly target vertices, one orientation each, by
    anchored DFS with admissible reachability pruning."""
    n = g.n
    adj = g.adj
    full = (1 << n) - 1
    path = [0] * target

    def rec(a: int, v: int, mask: int, depth: int, allowed: int) -> Iterator[tuple[int, ...]]:
        if depth == target:
            if adj[v] >> a & 1 and path[1] < path[-1]:
                yield tuple(path)
            return
        avail = allowed & ~mask
        reach = closure_mask(adj, adj[v] & avail, avail)
        if reach.bit_count() < target - depth or not reach & adj[a]:
            return
        for u in iter_bits(adj[v] & avail):
            path[depth] = u
            yield from rec(a, u, mask | 1 << u, depth + 1, allowed)

    for a in range(n):
        allowed = full & ~((1 << a) - 1)
        path[0] = a
        yield from rec(a, a, 1 << a, 1, allowed)


def all_longest_cycles(g: Graph) -> list[CycleSeq]:
    """Every maximum-length cycle, deduplicated up to rotation/reflection.

    Guard n <= 14; raises on acyclic input.
    """
    if g.n > ENUMERATION_MAX_N:
        raise ValueError(
            f"all_longest_cycles guard is n <= {ENUMERATION_MAX_N} (got {g.n}); "
            "use every_longest_cycle_heavy's sampling mode for larger graphs"
        )
    res = subset_dp_circumference(g)
    if res.length == 0:
        raise ValueError("graph is acyclic: there are no cycles to enumerate")
    return [CycleSeq(g, t) for t in sorted(_iter_longest_cycles(g, res.length))]


@dataclass(frozen=True)
class HeavyLongestCycles:
    """Outcome of the universal 'every longest cycle is heavy' check."""

    holds: bool
    counterexample: Optional[CycleSeq]
    partial: bool  # True when only sampled witnesses were checked
    cycles_checked: int


def every_longest_cycle_heavy(
    g: Graph, budget: Budget = DEFAULT_BUDGET
) -> HeavyLongestCycles:
    """Does every maximum-length cycle contain all heavy vertices?

    Exhaustive for n <= 14; beyond the guard only engine witnesses are
    sampled and the result carries partial=True.
    """
    hv = heavy_mask(g)
    if g.n <= ENUMERATION_MAX_N:
        res = subset_dp_circumference(g)
        if res.length == 0:
            raise ValueError("graph is acyclic: no longest cycle exists")
        checked = 0
        for verts in _iter_longest_cycles(g, res.length):
            checked += 1
            m = 0
            for v in verts:
                m |= 1 << v
            if hv & ~m:
                return HeavyLongestCycles(False, CycleSeq(g, verts), False, checked)
        return HeavyLongestCycles(True, None, False, checked)
    res = circumference(g, budget)
    if res.length == 0:
        raise ValueError("graph is acyclic: no longest cycle exists")
    if res.witness is not None and hv & ~res.witness.mask:
        return HeavyLongestCycles(False, res.witness, True, 1)
    return HeavyLongestCycles(True, None, True, 1 if res.witness else 0)
