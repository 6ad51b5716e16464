"""Named graphs and parameterized families used as golden-test fixtures."""

from __future__ import annotations

from .errors import CapacityError, GraphInputError
from .graph import Graph


def path(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphInputError("complete graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, n: int) -> Graph:
    if m < 1 or n < 1:
        raise GraphInputError("complete bipartite needs m, n >= 1")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def complement(g: Graph) -> Graph:
    return g.complement()


def disjoint_union(graphs) -> Graph:
    out = Graph(0)
    for g in graphs:
        out = out.disjoint_union(g)
    return out


def nk2(n: int) -> Graph:
    """n pairwise disjoint edges."""
    if n < 0:
        raise GraphInputError("nk2 needs n >= 0")
    return Graph(2 * n, [(2 * i, 2 * i + 1) for i in range(n)])


def claw() -> Graph:
    return complete_bipartite(1, 3)


def moebius_kantor() -> Graph:
    """Generalized Petersen graph G(8, 3): outer cycle 0..7, spokes to 8..15,
    inner edges 8+i ~ 8+((i+3) mod 8).  3-regular, bipartite, girth 6."""
    edges = []
    for i in range(8):
        edges.append((i, (i + 1) % 8))
        edges.append((i, 8 + i))
        edges.append((8 + i, 8 + (i + 3) % 8))
    return Graph(16, edges)


# Edge list read off the published drawing; x_k is vertex k-1.
_MV_EDGES = [
    (6, 8), (6, 9), (8, 10), (9, 7), (10, 7),
    (6, 3), (8, 3), (9, 4), (6, 4),
    (4, 2), (8, 2), (10, 2),
    (3, 1), (4, 1), (7, 1), (10, 1),
    (2, 5), (3, 5), (7, 5), (9, 5),
    (11, 1), (11, 2), (11, 3), (11, 4), (11, 5),
]


def morey_villarreal() -> Graph:
    """11-vertex graph whose regularity depends on the field characteristic."""
    return Graph(11, [(u - 1, v - 1) for u, v in _MV_EDGES])


def r_graph(n: int) -> Graph:
    """(n+1) disjoint pentagons plus an apex joined to vertex 0 of each."""
    if n < 0:
        raise GraphInputError("r_graph needs n >= 0")
    total = 5 * (n + 1) + 1
    if total > 64:
        raise CapacityError(f"r_graph({n}) needs {total} > 64 vertices")
    edges = []
    apex = total - 1
    for c in range(n + 1):
        base = 5 * c
        for i in range(5):
            edges.append((base + i, base + (i + 1) % 5))
        edges.append((apex, base))
    return Graph(total, edges)


BUILDERS = {
    "p": path,
    "c": cycle,
    "k": complete,
}

NAMED = {
    "claw": claw,
    "mk": moebius_kantor,
    "moebius-kantor": moebius_kantor,
    "mv": morey_villarreal,
    "morey-villarreal": morey_villarreal,
}


def by_name(name: str) -> Graph:
    """Resolve catalog names: c5, p4, k3, k2,3, r1, 3k2, mk, mv, claw."""
    s = name.strip().lower()
    if s in NAMED:
        return NAMED[s]()
    try:
        if s.startswith("r") and s[1:].isdigit():
            return r_graph(int(s[1:]))
        if s.startswith("k") and "," in s:
            m, n = s[1:].split(",")
            return complete_bipartite(int(m), int(n))
        if s and s[0] in BUILDERS and s[1:].isdigit():
            return BUILDERS[s[0]](int(s[1:]))
        if s.endswith("k2") and s[:-2].isdigit():
            return nk2(int(s[:-2]))
    except (ValueError, IndexError) as exc:
        raise GraphInputError(f"cannot parse catalog name {name!r}") from exc
    raise GraphInputError(f"unknown catalog name {name!r}")
