"""Graph rewriting operations with exact regularity/induced-matching contracts:
Lozin transforms, edge subdivisions and contractions, genuine/true pair
contractions and expansions, degree-based reductions, and breadth-first mate
search certifying lower bounds on the virtual induced matching number."""

from __future__ import annotations

import re
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .canon import canonical_key
from .errors import GraphInputError
from .graph import Graph, bits, mask_of
from .invariants import induced_matching_number

__all__ = [
    "LozinSpec", "Pairing", "MateMove", "MateTrace", "MateSearchResult",
    "lozin_transform", "lozin_of_vertex", "subdivide_edge", "double_subdivision",
    "triple_subdivision", "double_all", "contract_edge", "fake_contract",
    "is_g_pair", "g_pairs", "g_contract", "g_expand",
    "t_witnesses", "t_pairs", "t_contract", "t_expand",
    "deg2_candidates", "apply_deg2", "degree_reductions",
    "mate_search", "vim_lower_bound", "construct_reg_im", "replay_trace",
]


@dataclass(frozen=True)
class LozinSpec:
    """Vertex x with a split N(x) = Y ∪ Z (either side may be empty)."""

    x: int
    y_side: int  # vertex mask
    z_side: int


@dataclass(frozen=True)
class Pairing:
    """Disjoint vertex sets [A, B]; complete in a host graph when every a-b
    pair is an edge."""

    a_side: int
    b_side: int


@dataclass(frozen=True)
class MateMove:
    kind: str  # EXPAND | CONTRACT | DEG2MATE
    params: tuple

    def serialize(self) -> str:
        if self.kind == "EXPAND":
            z, a, b, w = self.params
            sa = ",".join(str(v) for v in bits(a))
            sb = ",".join(str(v) for v in bits(b))
            return f"EXPAND {z} A={{{sa}}} B={{{sb}}} witness={w}"
        if self.kind == "CONTRACT":
            x, y, w = self.params
            return f"CONTRACT {x} {y} witness={w}"
        a, b, c, d = self.params
        return f"DEG2MATE {a} {b} {c} {d}"


@dataclass
class MateTrace:
    moves: list[MateMove] = dc_field(default_factory=list)

    def serialize(self) -> str:
        return "\n".join(m.serialize() for m in self.moves)

    @classmethod
    def parse(cls, text: str) -> "MateTrace":
        moves = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.strip()
            if not line:
                continue
            parts = line.split()
            try:
                if parts[0] == "EXPAND":
                    z = int(parts[1])
                    ma = re.fullmatch(r"A=\{([\d,]*)\}", parts[2])
                    mb = re.fullmatch(r"B=\{([\d,]*)\}", parts[3])
                    mw = re.fullmatch(r"witness=(\d+)", parts[4])
                    if not (ma and mb and mw):
                        raise ValueError
                    a = mask_of(int(t) for t in ma.group(1).split(",") if t)
                    b = mask_of(int(t) for t in mb.group(1).split(",") if t)
                    moves.append(MateMove("EXPAND", (z, a, b, int(mw.group(1)))))
                elif parts[0] == "CONTRACT":
                    x, y = int(parts[1]), int(parts[2])
                    mw = re.fullmatch(r"witness=(\d+)", parts[3])
                    if not mw:
                        raise ValueError
                    moves.append(MateMove("CONTRACT", (x, y, int(mw.group(1)))))
                elif parts[0] == "DEG2MATE":
                    moves.append(MateMove("DEG2MATE", tuple(int(t) for t in parts[1:5])))
                else:
                    raise ValueError
            except (ValueError, IndexError) as exc:
                raise GraphInputError(f"bad trace line {lineno}: {raw!r}") from exc
        return cls(moves)


# -- Lozin transform -------------------------------------------------------------


def lozin_transform(g: Graph, spec: LozinSpec) -> Graph:
    """Replace x by a 4-path y-a-b-z, wiring y to the Y side and z to the Z
    side of the neighborhood split.  New vertices are appended in the order
    y, a, b, z.  An isolated x yields (G - x) plus a disjoint 4-path."""
    x, ys, zs = spec.x, spec.y_side, spec.z_side
    g._check_vertex(x)
    if ys & zs:
        raise GraphInputError("Y and Z must be disjoint")
    if (ys | zs) != g.adj[x]:
        raise GraphInputError("Y ∪ Z must equal N(x)")
    rest, keep = g.induced_subgraph(g.vertex_mask & ~(1 << x))
    pos = {old: new for new, old in enumerate(keep)}
    n = rest.n
    y, a, b, z = n, n + 1, n + 2, n + 3
    edges = [(y, a), (a, b), (b, z)]
    edges += [(y, pos[u]) for u in bits(ys)]
    edges += [(z, pos[u]) for u in bits(zs)]
    return rest.append_vertices(4, edges)


def lozin_of_vertex(g: Graph, x: int, y_side) -> Graph:
    """Convenience wrapper: Y given, Z = N(x) minus Y."""
    ys = y_side if isinstance(y_side, int) else mask_of(y_side)
    return lozin_transform(g, LozinSpec(x, ys, g.adj[x] & ~ys))


# -- subdivisions and contractions ------------------------------------------------


def subdivide_edge(g: Graph, u: int, v: int, k: int) -> Graph:
    """Replace the edge uv by a path with k internal vertices, appended in
    order starting from the u side."""
    if k < 1:
        raise GraphInputError("subdivision needs k >= 1 internal vertices")
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u},{v}) is not an edge")
    n = g.n
    chain = [(u, n)] + [(n + i, n + i + 1) for i in range(k - 1)] + [(n + k - 1, v)]
    return g.delete_edge(u, v).append_vertices(k, chain)


def double_subdivision(g: Graph, u: int, v: int) -> Graph:
    return subdivide_edge(g, u, v, 2)


def triple_subdivision(g: Graph, u: int, v: int) -> Graph:
    return subdivide_edge(g, u, v, 3)


def double_all(g: Graph) -> Graph:
    """Double-subdivide every edge of g (original labels are stable)."""
    out = g
    for u, v in g.edges():
        out = subdivide_edge(out, u, v, 2)
    return out


def contract_edge(g: Graph, u: int, v: int) -> Graph:
    """G/e: u and v merge into a vertex with the union neighborhood, appended
    after order-preserving compaction of the rest."""
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u},{v}) is not an edge")
    nbhd = (g.adj[u] | g.adj[v]) & ~(1 << u) & ~(1 << v)
    rest, keep = g.induced_subgraph(g.vertex_mask & ~(1 << u) & ~(1 << v))
    pos = {old: new for new, old in enumerate(keep)}
    w = rest.n
    return rest.append_vertices(1, [(w, pos[t]) for t in bits(nbhd)])


def fake_contract(g: Graph, u: int, v: int) -> Graph:
    """Contraction of a non-edge: add uv, then contract it."""
    if u == v or g.has_edge(u, v):
        raise GraphInputError("fake contraction needs distinct non-adjacent vertices")
    return contract_edge(g.add_edge(u, v), u, v)


# -- genuine and true pairs --------------------------------------------------------


def is_g_pair(g: Graph, x: int, y: int) -> tuple[bool, Optional[tuple[int, int]]]:
    """Non-adjacent pair spanning no induced 2K2.  Equivalent test: the
    private neighborhoods [N(x)\\N(y), N(y)\\N(x)] form a complete pairing.
    Returns (ok, offending (a, b)) with ab the missing cross edge."""
    g._check_vertex(x)
    g._check_vertex(y)
    if x == y or g.has_edge(x, y):
        return False, None
    a_side = g.adj[x] & ~g.adj[y]
    b_side = g.adj[y] & ~g.adj[x]
    for a in bits(a_side):
        missing = b_side & ~g.adj[a]
        if missing:
            return False, (a, next(bits(missing)))
    return True, None


def g_pairs(g: Graph) -> list[tuple[int, int]]:
    out = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            if is_g_pair(g, x, y)[0]:
                out.append((x, y))
    return out


def g_contract(g: Graph, x: int, y: int) -> Graph:
    """Merge a genuine pair into a vertex adjacent exactly to N(x) ∩ N(y)."""
    ok, bad = is_g_pair(g, x, y)
    if not ok:
        if bad is None:
            raise GraphInputError(f"{{{x},{y}}} must be distinct and non-adjacent")
        a, b = bad
        raise GraphInputError(
            f"{{{x},{y}}} is not a genuine pair: {{{x},{a},{y},{b}}} induces 2K2")
    common = g.adj[x] & g.adj[y]
    rest, keep = g.induced_subgraph(g.vertex_mask & ~(1 << x) & ~(1 << y))
    pos = {old: new for new, old in enumerate(keep)}
    w = rest.n
    return rest.append_vertices(1, [(w, pos[t]) for t in bits(common)])


def check_complete_pairing(g: Graph, within: int, p: Pairing) -> Optional[tuple[int, int]]:
    """None when [A, B] is a complete pairing inside the given vertex set,
    else the first missing (a, b) edge."""
    if (p.a_side | p.b_side) & ~within:
        raise GraphInputError("pairing leaves the host vertex set")
    if p.a_side & p.b_side:
        raise GraphInputError("pairing sides must be disjoint")
    for a in bits(p.a_side):
        missing = p.b_side & ~g.adj[a]
        if missing:
            return a, next(bits(missing))
    return None


def g_expand(g: Graph, z: int, p: Pairing) -> Graph:
    """Replace z by x_z, y_z (appended in that order), both wired to N(z),
    with x_z also wired to A and y_z to B; [A, B] must be a complete pairing
    in G - N[z]."""
    g._check_vertex(z)
    outside = g.vertex_mask & ~(g.adj[z] | 1 << z)
    bad = check_complete_pairing(g, outside, p)
    if bad is not None:
        raise GraphInputError(
            f"[A,B] is not a complete pairing in G-N[{z}]: missing edge {bad}")
    rest, keep = g.induced_subgraph(g.vertex_mask & ~(1 << z))
    pos = {old: new for new, old in enumerate(keep)}
    xz, yz = rest.n, rest.n + 1
    edges = [(xz, pos[u]) for u in bits(g.adj[z])]
    edges += [(yz, pos[u]) for u in bits(g.adj[z])]
    edges += [(xz, pos[u]) for u in bits(p.a_side)]
    edges += [(yz, pos[u]) for u in bits(p.b_side)]
    return rest.append_vertices(2, edges)


def t_witnesses(g: Graph, x: int, y: int) -> tuple[int, ...]:
    """Common neighbors u with N[u] ⊆ N[x] ∪ N[y] (for a genuine pair)."""
    if not is_g_pair(g, x, y)[0]:
        return ()
    union = g.adj[x] | g.adj[y] | 1 << x | 1 << y
    return tuple(u for u in bits(g.adj[x] & g.adj[y])
                 if not (g.adj[u] | 1 << u) & ~union)


def t_pairs(g: Graph) -> list[tuple[int, int, tuple[int, ...]]]:
    out = []
    for x in range(g.n):
        for y in range(x + 1, g.n):
            ws = t_witnesses(g, x, y)
            if ws:
                out.append((x, y, ws))
    return out


def t_contract(g: Graph, x: int, y: int) -> tuple[Graph, MateMove]:
    ws = t_witnesses(g, x, y)
    if not ws:
        raise GraphInputError(f"{{{x},{y}}} is not a true pair (no witness)")
    return g_contract(g, x, y), MateMove("CONTRACT", (x, y, ws[0]))


def t_expansion_witnesses(g: Graph, z: int, p: Pairing) -> tuple[int, ...]:
    covered = p.a_side | p.b_side | g.adj[z] | 1 << z
    return tuple(v for v in bits(g.adj[z])
                 if not (g.adj[v] | 1 << v) & ~covered)


def t_expand(g: Graph, z: int, p: Pairing) -> tuple[Graph, MateMove]:
    if not g.adj[z]:
        raise GraphInputError("true expansions need a non-isolated vertex")
    ws = t_expansion_witnesses(g, z, p)
    if not ws:
        raise GraphInputError(f"[A,B] is not a true pairing of {z} (no witness)")
    return g_expand(g, z, p), MateMove("EXPAND", (z, p.a_side, p.b_side, ws[0]))


# -- degree reductions --------------------------------------------------------------


def degree_reductions(g: Graph) -> tuple[Graph, list[tuple[int, int, int]]]:
    """Exhaustively delete z whenever x-y-z is a path with deg(x) = 1 and
    deg(y) = 2; each step preserves the regularity.  Log entries carry labels
    valid in the graph state before that step."""
    log = []
    while True:
        found = None
        for x in range(g.n):
            if g.degree(x) != 1:
                continue
            y = next(bits(g.adj[x]))
            if g.degree(y) != 2:
                continue
            z = next(bits(g.adj[y] & ~(1 << x)))
            found = (x, y, z)
            break
        if found is None:
            return g, log
        log.append(found)
        g = g.delete_vertex(found[2])


# -- mate search ----------------------------------------------------------------------


def deg2_candidates(g: Graph) -> list[tuple[int, int, int, int]]:
    """4-paths a-b-c-d (not necessarily induced) with deg(b) = deg(c) = 2,
    mirrors (d,c,b,a) deduped."""
    out = set()
    for b in range(g.n):
        if g.degree(b) != 2:
            continue
        for c in bits(g.adj[b]):
            if g.degree(c) != 2:
                continue
            for a in bits(g.adj[b] & ~(1 << c)):
                for d in bits(g.adj[c] & ~(1 << b)):
                    if d != a:
                        out.add((a, b, c, d) if a < d else (d, c, b, a))
    return sorted(out)


def apply_deg2(g: Graph, a: int, b: int, c: int, d: int) -> Graph:
    """Mate rewrite for a 4-path with two middle vertices of degree 2:
    delete {a,b,c,d} when ad is an edge, otherwise fake-contract d,a in
    G - {b,c}; either way a fresh disjoint edge is appended."""
    for u, v in ((a, b), (b, c), (c, d)):
        if not g.has_edge(u, v):
            raise GraphInputError(f"({u},{v}) is not an edge of the 4-path")
    if g.degree(b) != 2 or g.degree(c) != 2:
        raise GraphInputError("middle vertices must have degree 2")
    if g.has_edge(a, d):
        core = g.delete_vertices(mask_of((a, b, c, d)))
    else:
        rest, keep = g.induced_subgraph(g.vertex_mask & ~(1 << b) & ~(1 << c))
        pos = {old: new for new, old in enumerate(keep)}
        core = fake_contract(rest, pos[d], pos[a])
    n = core.n
    return core.append_vertices(2, [(n, n + 1)])


def _expansion_moves(g: Graph, z: int, cap: int) -> list[tuple[int, int, int]]:
    """Candidate true pairings of z: (A, B, witness).  Pairings cover some
    witness's private neighborhood exactly and stay within the second
    neighborhood of z; smallest |A ∪ B| first, capped."""
    seen: set[tuple[int, int]] = set()
    cands: list[tuple[int, int, int, int]] = []  # (size, A, B, witness)
    for v in bits(g.adj[z]):
        # exact coverage of the witness's private neighborhood N(v) \ N[z]
        need = g.adj[v] & ~(g.adj[z] | 1 << z | 1 << v)
        elems = list(bits(need))
        if len(elems) > 12:
            continue
        for split in range(1 << len(elems)):
            a = mask_of(e for i, e in enumerate(elems) if split >> i & 1)
            b = need & ~a
            if (min(a, b), max(a, b)) in seen:
                continue
            ok = True
            for x in bits(a):
                if b & ~g.adj[x]:
                    ok = False
                    break
            if ok:
                seen.add((min(a, b), max(a, b)))
                cands.append((need.bit_count(), a, b, v))
    cands.sort()
    return [(a, b, w) for _, a, b, w in cands[:cap]]


@dataclass
class MateSearchResult:
    best_im: int
    best_graph: Graph
    trace: MateTrace
    visited: int
    flags: list[str]


def mate_search(g: Graph, depth_budget: int = 6, vertex_budget: Optional[int] = None,
                node_budget: int = 4000, expansions_per_vertex: int = 200
                ) -> MateSearchResult:
    """Breadth-first exploration of the mate class of g under true
    contractions, capped true expansions and the degree-2 path macro-rewrite.
    Returns the best induced matching number seen: a certified lower bound on
    the virtual induced matching number."""
    if vertex_budget is None:
        vertex_budget = min(g.n + 6, 64)
    flags: list[str] = []
    visited = {canonical_key(g)}
    best_im = induced_matching_number(g)
    best_graph, best_trace = g, []
    frontier: list[tuple[Graph, list[MateMove]]] = [(g, [])]
    nodes = 1
    exhausted = False
    for _ in range(depth_budget):
        if exhausted or not frontier:
            break
        nxt: list[tuple[Graph, list[MateMove]]] = []
        for cur, trace in frontier:
            children: list[tuple[Graph, MateMove]] = []
            for a, b, c, d in deg2_candidates(cur):
                children.append((apply_deg2(cur, a, b, c, d),
                                 MateMove("DEG2MATE", (a, b, c, d))))
            for x, y, ws in t_pairs(cur):
                children.append((g_contract(cur, x, y),
                                 MateMove("CONTRACT", (x, y, ws[0]))))
            if cur.n + 1 <= vertex_budget:
                for z in range(cur.n):
                    if not cur.adj[z]:
                        continue
                    for a, b, w in _expansion_moves(cur, z, expansions_per_vertex):
                        children.append((g_expand(cur, z, Pairing(a, b)),
                                         MateMove("EXPAND", (z, a, b, w))))
            for child, move in children:
                key = canonical_key(child)
                if key in visited:
                    continue
                visited.add(key)
                nodes += 1
                im = induced_matching_number(child)
                ctrace = trace + [move]
                if im > best_im:
                    best_im, best_graph, best_trace = im, child, ctrace
                nxt.append((child, ctrace))
                if nodes >= node_budget:
                    flags.append("BUDGET")
                    exhausted = True
                    break
            if exhausted:
                break
        frontier = nxt
    return MateSearchResult(best_im, best_graph, MateTrace(best_trace), nodes, flags)


def vim_lower_bound(g: Graph, depth_budget: int = 6, vertex_budget: Optional[int] = None,
                    node_budget: int = 4000) -> int:
    """Certified lower bound on the virtual induced matching number."""
    return mate_search(g, depth_budget, vertex_budget, node_budget).best_im


def replay_trace(g: Graph, trace: MateTrace) -> Graph:
    """Re-apply a move sequence, revalidating every witness condition."""
    for move in trace.moves:
        if move.kind == "EXPAND":
            z, a, b, _ = move.params
            g, _ = t_expand(g, z, Pairing(a, b))
        elif move.kind == "CONTRACT":
            x, y, _ = move.params
            g, _ = t_contract(g, x, y)
        else:
            g = apply_deg2(g, *move.params)
    return g


# -- reg/im pair construction ----------------------------------------------------------


def construct_reg_im(seed: Graph, u: int, v: int, k: int) -> Graph:
    """Apply k-1 triple subdivisions along the evolving middle edge of uv;
    the output gains k-1 in both regularity and induced matching number."""
    if k < 1:
        raise GraphInputError("construct_reg_im needs k >= 1")
    if not seed.has_edge(u, v):
        raise GraphInputError(f"({u},{v}) is not an edge of the seed")
    g = seed
    for _ in range(k - 1):
        n = g.n
        g = subdivide_edge(g, u, v, 3)
        u, v = n, n + 1  # first two internal vertices form the new middle edge
    return g
