"""Small-graph enumeration (exhaustive, up to isomorphism) and seeded random
corpora for the verification harnesses."""

from __future__ import annotations

import random
from typing import Callable, Iterable, Optional

from .canon import canonical_graph, canonical_key
from .errors import GraphInputError
from .graph import Graph

CONNECTED_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}


def all_labeled_graphs(n: int) -> Iterable[Graph]:
    """Every labeled graph on n vertices (oracle for tiny n only)."""
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Graph(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def nonisomorphic_graphs(n: int, predicate: Optional[Callable[[Graph], bool]] = None
                         ) -> list[Graph]:
    """All graphs on exactly n vertices up to isomorphism, grown one vertex at
    a time with canonical dedup.

    With a predicate, only graphs in an induced-hereditary class are kept;
    correctness needs the class to be closed under vertex deletion (every
    member minus its last vertex is again a member, so layer filtering loses
    nothing).
    """
    if n < 0:
        raise GraphInputError("need n >= 0")
    layer = {canonical_key(Graph(0)): Graph(0)}
    for k in range(1, n + 1):
        nxt: dict = {}
        for h in layer.values():
            for nbrs in range(1 << (k - 1)):
                g = h.append_vertices(1, [(k - 1, u) for u in range(k - 1)
                                          if nbrs >> u & 1])
                if predicate is not None and not predicate(g):
                    continue
                key = canonical_key(g)
                if key not in nxt:
                    nxt[key] = canonical_graph(g)
        layer = nxt
    return [layer[k] for k in sorted(layer)]


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, n <= 7."""
    if n > 7:
        raise GraphInputError("exhaustive enumeration is capped at n = 7; "
                              "use external graph6 streams beyond that")
    if n < 1:
        raise GraphInputError("need n >= 1")
    out = [g for g in nonisomorphic_graphs(n) if g.is_connected()]
    expect = CONNECTED_COUNTS[n]
    if len(out) != expect:
        raise RuntimeError(f"connected count mismatch at n={n}: "
                           f"{len(out)} vs {expect}")
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Graph(n, edges)


def random_corpus(seed: int, count: int, ns=(5, 6, 7, 8, 9),
                  ps=(0.2, 0.4, 0.6), min_edges: int = 1) -> list[Graph]:
    """Deterministic Erdos-Renyi corpus cycling over the (n, p) grid."""
    rng = random.Random(seed)
    out = []
    grid = [(n, p) for n in ns for p in ps]
    i = 0
    while len(out) < count:
        n, p = grid[i % len(grid)]
        i += 1
        g = random_graph(n, p, rng)
        if g.num_edges >= min_edges:
            out.append(g)
    return out
