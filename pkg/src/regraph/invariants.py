"""Exact combinatorial invariants: matching and induced matching numbers,
cochordal cover number, maximum privacy degree, and the weighted
pattern-packing generalization of the induced matching number."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import GraphInputError
from .graph import Graph, bits, mask_of


def _strip_isolated(adj: tuple[int, ...], mask: int) -> int:
    out = mask
    for v in bits(mask):
        if not adj[v] & mask:
            out ^= 1 << v
    return out


def matching_number(g: Graph) -> int:
    """Maximum matching size by branch and bound (no blossom machinery;
    desk-scale inputs only)."""
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        mask = _strip_isolated(adj, mask)
        if not mask:
            return 0
        got = memo.get(mask)
        if got is not None:
            return got
        v = next(bits(mask))
        best = rec(mask & ~(1 << v))  # v unmatched
        for u in bits(adj[v] & mask):
            best = max(best, 1 + rec(mask & ~(1 << v) & ~(1 << u)))
        memo[mask] = best
        return best

    return rec(g.vertex_mask)


def induced_matching_number(g: Graph) -> int:
    """Maximum induced matching: branch on the lowest non-isolated vertex,
    either excluding it or taking one of its edges and deleting both closed
    neighborhoods."""
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        mask = _strip_isolated(adj, mask)
        if not mask:
            return 0
        got = memo.get(mask)
        if got is not None:
            return got
        v = next(bits(mask))
        best = rec(mask & ~(1 << v))
        for u in bits(adj[v] & mask):
            rest = mask & ~(adj[v] | adj[u] | 1 << v | 1 << u)
            best = max(best, 1 + rec(rest))
        memo[mask] = best
        return best

    return rec(g.vertex_mask)


def privacy_degree(g: Graph) -> int:
    """max |N[x] \\ N[y]| over ordered adjacent pairs (x, y)."""
    if g.num_edges == 0:
        raise GraphInputError("privacy degree needs at least one edge")
    best = 0
    for x in range(g.n):
        cx = g.adj[x] | 1 << x
        for y in bits(g.adj[x]):
            cy = g.adj[y] | 1 << y
            best = max(best, (cx & ~cy).bit_count())
    return best


# -- cochordal cover ------------------------------------------------------------


@dataclass(frozen=True)
class CochordResult:
    lower: int
    upper: int
    exact: bool
    cover: Optional[tuple[tuple[tuple[int, int], ...], ...]]
    nodes_used: int

    @property
    def value(self) -> int:
        if not self.exact:
            raise GraphInputError("cover search was inexact; use lower/upper")
        return self.upper

    @property
    def flags(self) -> list[str]:
        return [] if self.exact else ["INEXACT"]


class _BudgetUp(Exception):
    pass


def _edge_subgraph(g: Graph, edge_idx: list[tuple[int, int]],
                   emask: int) -> tuple[Graph, list[int]]:
    vs = 0
    es = []
    for i in bits(emask):
        u, v = edge_idx[i]
        vs |= 1 << u | 1 << v
        es.append((u, v))
    keep = list(bits(vs))
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), [(pos[u], pos[v]) for u, v in es]), keep


def _chordless_cycle(g: Graph) -> Optional[list[int]]:
    """Some induced cycle of length >= 4, or None when g is chordal.

    For every path u-v-w with uw a non-edge, a shortest u-w path avoiding
    N[v] \\ {u, w} closes a chordless cycle through v.
    """
    for v in range(g.n):
        nbrs = list(bits(g.adj[v]))
        for i, u in enumerate(nbrs):
            for w in nbrs[i + 1:]:
                if g.adj[u] >> w & 1:
                    continue
                allowed = g.vertex_mask & ~(g.adj[v] | 1 << v)
                allowed |= 1 << u | 1 << w
                # BFS from u to w inside allowed; shortest paths are induced
                prev = {u: -1}
                frontier = [u]
                while frontier and w not in prev:
                    nxt = []
                    for x in frontier:
                        for y in bits(g.adj[x] & allowed):
                            if y not in prev:
                                prev[y] = x
                                nxt.append(y)
                    frontier = nxt
                if w in prev:
                    cyc = [w]
                    while cyc[-1] != u:
                        cyc.append(prev[cyc[-1]])
                    cyc.append(v)
                    return cyc
    return None


def cochordal_cover_number(g: Graph, node_budget: int = 10_000_000) -> CochordResult:
    """Exact minimum number of cochordal subgraphs covering E(G).

    A cover of size k exists iff E partitions into k parts that each extend
    to a cochordal subgraph inside E(G) (completions may overlap, parts need
    not).  Extendability is hereditary, so the edge-by-edge assignment search
    with first-use symmetry breaking prunes soundly; the extendability oracle
    branches over the obstruction cycle found in the complement of a part.

    On budget exhaustion returns certified bounds instead: the greedy cover
    size above, im(G) (and any bin count fully refuted) below, flagged INEXACT.
    """
    edges = g.edges()
    m = len(edges)
    if m == 0:
        return CochordResult(0, 0, True, (), 0)
    if g.is_cochordal():
        return CochordResult(1, 1, True, (tuple(edges),), 0)

    edge_index = {e: i for i, e in enumerate(edges)}
    nodes = 0

    cochordal_memo: dict[int, bool] = {}
    extend_memo: dict[int, bool] = {}

    def bin_cochordal(emask: int) -> bool:
        got = cochordal_memo.get(emask)
        if got is None:
            got = _edge_subgraph(g, edges, emask)[0].is_cochordal()
            cochordal_memo[emask] = got
        return got

    def extendable(emask: int) -> bool:
        """Is there a cochordal H with part ⊆ H ⊆ E(G)?"""
        nonlocal nodes
        got = extend_memo.get(emask)
        if got is not None:
            return got
        nodes += 1
        if nodes > node_budget:
            raise _BudgetUp
        sub, keep = _edge_subgraph(g, edges, emask)
        cyc = _chordless_cycle(sub.complement())
        if cyc is None:
            extend_memo[emask] = True
            return True
        # every cochordal completion adds some consecutive pair of the
        # obstruction cycle as an edge; those pairs must exist in E(G)
        ok = False
        k = len(cyc)
        for i in range(k):
            a, b = keep[cyc[i]], keep[cyc[(i + 1) % k]]
            e = (a, b) if a < b else (b, a)
            j = edge_index.get(e)
            if j is not None and not emask >> j & 1 and extendable(emask | 1 << j):
                ok = True
                break
        extend_memo[emask] = ok
        return ok

    # greedy upper bound: repeatedly extract a maximal cochordal subgraph
    greedy: list[int] = []
    uncovered = (1 << m) - 1
    while uncovered:
        binmask = 0
        for i in bits(uncovered):
            if bin_cochordal(binmask | 1 << i):
                binmask |= 1 << i
        greedy.append(binmask)
        uncovered &= ~binmask
    upper = len(greedy)

    solution: list[int] = []

    def dfs(i: int, bins: list[int], k: int) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise _BudgetUp
        if i == m:
            solution[:] = bins
            return True
        bit = 1 << i
        for b in range(len(bins)):
            cand = bins[b] | bit
            if extendable(cand):
                old = bins[b]
                bins[b] = cand
                if dfs(i + 1, bins, k):
                    return True
                bins[b] = old
        if len(bins) < k:
            bins.append(bit)
            if dfs(i + 1, bins, k):
                return True
            bins.pop()
        return False

    def complete_part(emask: int) -> int:
        """Grow an extendable part into an actual cochordal subgraph."""
        while not bin_cochordal(emask):
            sub, keep = _edge_subgraph(g, edges, emask)
            cyc = _chordless_cycle(sub.complement())
            k = len(cyc)
            for i in range(k):
                a, b = keep[cyc[i]], keep[cyc[(i + 1) % k]]
                e = (a, b) if a < b else (b, a)
                j = edge_index.get(e)
                if j is not None and not emask >> j & 1 and extendable(emask | 1 << j):
                    emask |= 1 << j
                    break
            else:
                raise RuntimeError("extendable part admits no completion step")
        return emask

    refuted = 1  # k = 1 refuted above: g is not cochordal
    try:
        for k in range(2, upper):
            if dfs(0, [], k):
                cover = tuple(tuple(edges[i] for i in bits(complete_part(bm)))
                              for bm in solution)
                return CochordResult(k, k, True, cover, nodes)
            refuted = k
    except _BudgetUp:
        lower = max(induced_matching_number(g), refuted + 1)
        return CochordResult(lower, upper, False, None, nodes)
    cover = tuple(tuple(edges[i] for i in bits(bm)) for bm in greedy)
    return CochordResult(upper, upper, True, cover, nodes)


# -- generalized induced matching number ----------------------------------------


@dataclass(frozen=True)
class WeightedPattern:
    """Connected pattern graphs with non-negative weights."""

    patterns: tuple[Graph, ...]
    weights: tuple[int, ...]

    def __post_init__(self):
        if len(self.patterns) != len(self.weights):
            raise GraphInputError("patterns and weights must have equal length")
        for t in self.patterns:
            if t.n < 2 or not t.is_connected():
                raise GraphInputError("patterns must be connected with >= 2 vertices")
        if any(w < 0 for w in self.weights):
            raise GraphInputError("weights must be non-negative")


def _induced_embeddings(g: Graph, mask: int, pattern: Graph, pivot: int) -> set[int]:
    """Vertex sets P ⊆ mask containing ``pivot`` with G[P] isomorphic to the
    pattern, by backtracking over induced-embedding maps."""
    k = pattern.n
    if not mask >> pivot & 1:
        return set()
    found: set[int] = set()
    for start in range(k):
        # connected search order anchored at the pattern vertex sent to pivot
        order = [start]
        placed = 1 << start
        while len(order) < k:
            nxt = next(v for v in range(k)
                       if not placed >> v & 1 and pattern.adj[v] & placed)
            order.append(nxt)
            placed |= 1 << nxt
        slot = {t: i for i, t in enumerate(order)}
        image = [0] * k  # image[slot] = graph vertex
        image[0] = pivot

        def rec(step: int, used: int) -> None:
            if step == k:
                found.add(used)
                return
            t = order[step]
            anchor = next(u for u in bits(pattern.adj[t]) if slot[u] < step)
            for v in bits(g.adj[image[slot[anchor]]] & mask & ~used):
                ok = True
                for i in range(step):
                    w = image[i]
                    if bool(pattern.adj[t] >> order[i] & 1) != bool(g.adj[v] >> w & 1):
                        ok = False
                        break
                if ok:
                    image[step] = v
                    rec(step + 1, used | 1 << v)

        rec(1, 1 << pivot)
    return found


def generalized_im(g: Graph, wp: WeightedPattern) -> int:
    """Maximum total weight of pairwise-disjoint vertex sets, each inducing a
    copy of some pattern, with no edges of G between distinct sets; 0 when no
    packing exists."""
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if not mask:
            return 0
        got = memo.get(mask)
        if got is not None:
            return got
        v = next(bits(mask))
        best = rec(mask & ~(1 << v))
        for t, w in zip(wp.patterns, wp.weights):
            for placement in sorted(_induced_embeddings(g, mask, t, v)):
                closed = placement
                for u in bits(placement):
                    closed |= adj[u]
                best = max(best, w + rec(mask & ~closed))
        memo[mask] = best
        return best

    return rec(g.vertex_mask)
