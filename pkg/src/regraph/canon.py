"""Canonical labeling by color refinement with individualization backtracking.

Two graphs have equal canonical keys iff they are isomorphic.  Canonical forms
are the main dedup primitive: homology memoization, small-graph enumeration
and mate-search visited sets all key on them.
"""

from __future__ import annotations

from functools import lru_cache

from .graph import Graph, bits


def _pair_index(i: int, j: int) -> int:
    if i > j:
        i, j = j, i
    return j * (j - 1) // 2 + i


def _encode(adj: tuple[int, ...], order: list[int]) -> int:
    """Adjacency of the relabeled graph packed as an int, bit per vertex pair."""
    pos = [0] * len(order)
    for new, old in enumerate(order):
        pos[old] = new
    out = 0
    for v, row in enumerate(adj):
        pv = pos[v]
        r = row >> (v + 1) << (v + 1)
        while r:
            b = r & -r
            r ^= b
            out |= 1 << _pair_index(pv, pos[b.bit_length() - 1])
    return out


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    n = len(colors)
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in bits(adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return new
        colors = new


def _search(adj: tuple[int, ...], colors: list[int]) -> tuple[int, list[int]]:
    """Smallest encoding over all refinement-compatible discrete orderings."""
    colors = _refine(adj, colors)
    n = len(colors)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        order = sorted(range(n), key=lambda v: colors[v])
        return _encode(adj, order), order
    best = None
    best_order = None
    for v in target:
        child = [2 * c for c in colors]
        child[v] -= 1
        key, order = _search(adj, child)
        if best is None or key < best:
            best, best_order = key, order
    return best, best_order


@lru_cache(maxsize=1 << 17)
def _canon_connected(n: int, adj: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    if n == 0:
        return 0, ()
    degs = [row.bit_count() for row in adj]
    if all(d == n - 1 for d in degs):  # complete graphs would branch factorially
        return _encode(adj, list(range(n))), tuple(range(n))
    key, order = _search(adj, degs)
    return key, tuple(order)


def canonical_form(g: Graph) -> tuple[tuple[int, ...], tuple[int, int]]:
    """Return (labeling, key).

    labeling[new_index] = old vertex; key = (n, packed adjacency) of the
    relabeled graph.  Components are canonicalized independently and
    concatenated in sorted key order, which keeps highly symmetric disjoint
    unions cheap.
    """
    comps = g.components()
    pieces = []
    for comp in comps:
        sub, keep = g.induced_subgraph(comp)
        key, order = _canon_connected(sub.n, sub.adj)
        pieces.append((sub.n, key, tuple(keep[v] for v in order)))
    pieces.sort(key=lambda t: (t[0], t[1]))
    labeling: list[int] = []
    for _, _, order in pieces:
        labeling.extend(order)
    return tuple(labeling), (g.n, _encode(g.adj, labeling))


def canonical_key(g: Graph) -> tuple[int, int]:
    return canonical_form(g)[1]


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabeled copy of g."""
    labeling, _ = canonical_form(g)
    pos = [0] * g.n
    for new, old in enumerate(labeling):
        pos[old] = new
    return Graph(g.n, [(pos[u], pos[v]) for u, v in g.edges()])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_key(g) == canonical_key(h)
