"""Immutable simple graphs on at most 64 vertices.

Adjacency is stored as one machine-word bit set per vertex, so vertex sets
everywhere in this package are plain ints (bit i = vertex i).  All operations
are pure: editing primitives return new Graph values.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .errors import CapacityError, GraphInputError

MAX_VERTICES = 64


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def as_mask(s) -> int:
    """Accept either an int bit mask or an iterable of vertex indices."""
    if isinstance(s, int):
        return s
    return mask_of(s)


class Graph:
    """Simple undirected graph; ``adj[v]`` is the open neighborhood of v as a bit set."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphInputError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def from_adj(cls, adj: tuple[int, ...]) -> "Graph":
        """Wrap a prevalidated adjacency tuple (symmetry/irreflexivity checked)."""
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g.check()
        return g

    def check(self) -> None:
        n, adj = self.n, self.adj
        if n > MAX_VERTICES:
            raise CapacityError(f"vertex count {n} > {MAX_VERTICES}")
        full = (1 << n) - 1
        for v in range(n):
            row = adj[v]
            if row & ~full:
                raise GraphInputError(f"adjacency bits of {v} exceed n={n}")
            if row >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
            for u in bits(row):
                if not adj[u] >> v & 1:
                    raise GraphInputError(f"asymmetric edge ({v},{u})")

    # -- basic queries ------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> int:
        return self.adj[v]

    def closed_neighbors(self, v: int) -> int:
        return self.adj[v] | 1 << v

    def neighbors_of_set(self, s) -> int:
        """Open neighborhood of a vertex set (may intersect the set itself)."""
        m = as_mask(s)
        out = 0
        for v in bits(m):
            out |= self.adj[v]
        return out

    def closed_neighbors_of_set(self, s) -> int:
        m = as_mask(s)
        return m | self.neighbors_of_set(m)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1) << (v + 1)
            for u in bits(row):
                out.append((v, u))
        return out

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()!r})"

    # -- editing primitives -------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphInputError("add_edge endpoints must be distinct")
        if self.has_edge(u, v):
            raise GraphInputError(f"edge ({u},{v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        g = object.__new__(Graph)
        g.n, g.adj = self.n, tuple(adj)
        return g

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphInputError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        g = object.__new__(Graph)
        g.n, g.adj = self.n, tuple(adj)
        return g

    def induced_subgraph(self, s) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph G[S] with order-preserving compaction.

        Returns (graph, keep) where keep[new_index] = original index.
        """
        m = as_mask(s)
        if m & ~self.vertex_mask:
            raise GraphInputError("subset contains out-of-range vertices")
        keep = tuple(bits(m))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = self.adj[v] & m
            adj.append(mask_of(pos[u] for u in bits(row)))
        g = object.__new__(Graph)
        g.n, g.adj = len(keep), tuple(adj)
        return g, keep

    def delete_vertices(self, s) -> "Graph":
        m = as_mask(s)
        if m & ~self.vertex_mask:
            raise GraphInputError("vertex set contains out-of-range vertices")
        return self.induced_subgraph(self.vertex_mask & ~m)[0]

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.delete_vertices(1 << v)

    def complement(self) -> "Graph":
        full = self.vertex_mask
        adj = tuple(full & ~(row | 1 << v) for v, row in enumerate(self.adj))
        g = object.__new__(Graph)
        g.n, g.adj = self.n, adj
        return g

    def append_vertices(self, k: int, edges: Iterable[tuple[int, int]] = ()) -> "Graph":
        """Add k fresh vertices n..n+k-1, then the given edges (old or new indices)."""
        n = self.n + k
        if n > MAX_VERTICES:
            raise CapacityError(f"appending {k} vertices exceeds capacity ({n} > {MAX_VERTICES})")
        adj = list(self.adj) + [0] * k
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise GraphInputError(f"bad edge ({u},{v}) while appending")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        g = object.__new__(Graph)
        g.n, g.adj = n, tuple(adj)
        return g

    # -- structural predicates ----------------------------------------------

    def component_of(self, v: int, within: Optional[int] = None) -> int:
        m = self.vertex_mask if within is None else within
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= self.adj[u] & m
            frontier = nxt & ~comp
            comp |= frontier
        return comp

    def components(self, within: Optional[int] = None) -> list[int]:
        m = self.vertex_mask if within is None else within
        out = []
        while m:
            v = (m & -m).bit_length() - 1
            c = self.component_of(v, m)
            out.append(c)
            m &= ~c
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_of(0) == self.vertex_mask

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def bipartition(self) -> Optional[tuple[int, int]]:
        """Return (side0, side1) masks, or None if an odd cycle exists."""
        color = {}
        for start in range(self.n):
            if start in color:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for u in bits(self.adj[v]):
                    if u not in color:
                        color[u] = 1 - color[v]
                        queue.append(u)
                    elif color[u] == color[v]:
                        return None
        side0 = mask_of(v for v, c in color.items() if c == 0)
        return side0, self.vertex_mask & ~side0

    def distance(self, u: int, v: int) -> Optional[int]:
        """BFS distance, or None when u and v are in different components."""
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            return 0
        seen = 1 << u
        frontier = seen
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for w in bits(frontier):
                nxt |= self.adj[w]
            nxt &= ~seen
            if nxt >> v & 1:
                return d
            seen |= nxt
            frontier = nxt
        return None

    def girth(self) -> Optional[int]:
        """Length of a shortest cycle; None when the graph is acyclic."""
        best = None
        for root in range(self.n):
            dist = {root: 0}
            frontier = [root]
            parent = {root: -1}
            while frontier:
                nxt = []
                for v in frontier:
                    for u in bits(self.adj[v]):
                        if u not in dist:
                            dist[u] = dist[v] + 1
                            parent[u] = v
                            nxt.append(u)
                        elif u != parent[v]:
                            # Non-tree edge: the closed walk through the root
                            # bounds the girth from above; exact for some root
                            # on a shortest cycle.
                            cyc = dist[u] + dist[v] + 1
                            if best is None or cyc < best:
                                best = cyc
                frontier = nxt
        return best

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def clique_number(self) -> int:
        adj = self.adj
        best = 0

        def rec(size: int, cand: int) -> None:
            nonlocal best
            if size > best:
                best = size
            while cand:
                if size + cand.bit_count() <= best:
                    return
                b = cand & -cand
                cand ^= b
                rec(size + 1, cand & adj[b.bit_length() - 1])

        rec(0, self.vertex_mask)
        return best

    def independence_number(self) -> int:
        return self.complement().clique_number()

    def is_claw_free(self) -> bool:
        """No induced K_{1,3}: every neighborhood misses an independent triple."""
        for v in range(self.n):
            nbrs = list(bits(self.adj[v]))
            k = len(nbrs)
            for i in range(k):
                a = nbrs[i]
                for j in range(i + 1, k):
                    b = nbrs[j]
                    if self.adj[a] >> b & 1:
                        continue
                    rest = self.adj[v] & ~self.adj[a] & ~self.adj[b]
                    rest &= ~(1 << a) & ~(1 << b)
                    if rest:
                        return False
        return True

    def is_2k2_free(self) -> bool:
        edges = self.edges()
        for i, (a, b) in enumerate(edges):
            ab = 1 << a | 1 << b
            closed = self.adj[a] | self.adj[b] | ab
            for c, d in edges[i + 1:]:
                if not closed >> c & 1 and not closed >> d & 1:
                    return False
        return True

    def is_chordal(self) -> bool:
        """Maximum-cardinality search, then verify the reverse order is a
        perfect elimination ordering."""
        n = self.n
        if n == 0:
            return True
        weight = [0] * n
        numbered = 0
        order = []  # MCS visit order; elimination order is its reverse
        for _ in range(n):
            v = max((u for u in range(n) if not numbered >> u & 1),
                    key=lambda u: (weight[u], -u))
            order.append(v)
            numbered |= 1 << v
            for u in bits(self.adj[v] & ~numbered):
                weight[u] += 1
        elim = order[::-1]
        rank = {v: i for i, v in enumerate(elim)}
        for v in elim:
            later = [u for u in bits(self.adj[v]) if rank[u] > rank[v]]
            if not later:
                continue
            u = min(later, key=lambda w: rank[w])
            rest = mask_of(later) & ~(1 << u)
            if rest & ~self.adj[u]:
                return False
        return True

    def is_cochordal(self) -> bool:
        return self.complement().is_chordal()

    def _has_long_induced_cycle(self) -> bool:
        adj = self.adj
        for m in range(1 << self.n):
            if m.bit_count() < 5:
                continue
            ok = True
            mm = m
            while mm:
                b = mm & -mm
                mm ^= b
                if (adj[b.bit_length() - 1] & m).bit_count() != 2:
                    ok = False
                    break
            if ok and self.component_of((m & -m).bit_length() - 1, m) == m:
                return True
        return False

    def is_weakly_chordal(self, size_cap: int = 20) -> Optional[bool]:
        """True iff neither G nor its complement has an induced cycle of
        length >= 5; None (unknown) above the exactness cap."""
        if self.n > size_cap:
            return None
        if self._has_long_induced_cycle():
            return False
        return not self.complement()._has_long_induced_cycle()

    def dominated_pairs(self) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
        """Ordered pairs (x, y), x != y, with N(x) ⊆ N(y) (open) and with
        N[x] ⊆ N[y] (closed), reported separately."""
        open_pairs = []
        closed_pairs = []
        for x in range(self.n):
            nx, cx = self.adj[x], self.adj[x] | 1 << x
            for y in range(self.n):
                if x == y:
                    continue
                if not nx & ~self.adj[y]:
                    open_pairs.append((x, y))
                if not cx & ~(self.adj[y] | 1 << y):
                    closed_pairs.append((x, y))
        return open_pairs, closed_pairs

    def disjoint_union(self, other: "Graph") -> "Graph":
        n = self.n + other.n
        if n > MAX_VERTICES:
            raise CapacityError(f"union has {n} > {MAX_VERTICES} vertices")
        shift = self.n
        adj = list(self.adj) + [row << shift for row in other.adj]
        g = object.__new__(Graph)
        g.n, g.adj = n, tuple(adj)
        return g
