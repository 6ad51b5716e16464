"""Independence complexes and reduced simplicial homology over prime fields.

The chain complex is reduced: the empty face lives in degree -1, so a profile
is a tuple ``betti`` with ``betti[i] = dim H~_{i-1}``.  Profiles are stored
with trailing zeros stripped; the all-zero (contractible) profile is ``()``
and the profile of the complex {∅} is ``(1,)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .canon import canonical_key
from .errors import GraphInputError, ResourceError
from .graph import Graph, bits

DEFAULT_FACE_BUDGET = 5_000_000

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime_int(p: int) -> bool:
    if p < 2:
        return False
    for q in _SMALL_PRIMES:
        if p % q == 0:
            return p == q
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _SMALL_PRIMES:  # deterministic Miller-Rabin for p < 3.3e24
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """GF(p) coefficients for homology; 2 <= p < 2^31."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not (2 <= p < 2 ** 31) or not _is_prime_int(p):
            raise GraphInputError(f"{p} is not a prime in [2, 2^31)")
        self.p = p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.p == other.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


GF2 = PrimeField(2)
GF3 = PrimeField(3)


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers b~_{-1}, b~_0, ..., trailing zeros stripped."""

    betti: tuple[int, ...]

    def betti_at(self, d: int) -> int:
        i = d + 1
        if 0 <= i < len(self.betti):
            return self.betti[i]
        return 0

    @property
    def top_degree(self) -> Optional[int]:
        """Largest d with b~_d != 0, or None when all homology vanishes."""
        if not self.betti:
            return None
        return len(self.betti) - 2

    @property
    def is_zero(self) -> bool:
        return not self.betti


@dataclass(frozen=True)
class RankedComplex:
    """Faces of an independence complex grouped by dimension (empty face implicit)."""

    faces_by_dim: tuple[tuple[int, ...], ...]
    total_faces: int  # non-empty faces

    @property
    def dimension(self) -> int:
        return len(self.faces_by_dim) - 1


@dataclass
class ReductionLog:
    folds: list[tuple[int, int]] = dc_field(default_factory=list)  # (kept u, deleted v)
    contractible: bool = False
    kept: tuple[int, ...] = ()


# -- face enumeration ---------------------------------------------------------


def _faces_by_size(adj: tuple[int, ...], mask: int, budget: int) -> list[list[int]]:
    """faces[s] = masks of the size-s independent sets of the graph induced on
    ``mask``, for s >= 1.  Deterministic DFS order."""
    faces: list[list[int]] = [[] for _ in range(mask.bit_count() + 1)]
    count = 0

    def rec(chosen: int, size: int, avail: int) -> None:
        nonlocal count
        while avail:
            b = avail & -avail
            avail ^= b
            nc = chosen | b
            count += 1
            if count > budget:
                raise ResourceError(f"face budget {budget} exceeded")
            faces[size + 1].append(nc)
            rec(nc, size + 1, avail & ~adj[b.bit_length() - 1])

    rec(0, 0, mask)
    while len(faces) > 1 and not faces[-1]:
        faces.pop()
    return faces


def independence_complex(g: Graph, budget: int = DEFAULT_FACE_BUDGET) -> RankedComplex:
    """All independent sets of g grouped by dimension."""
    faces = _faces_by_size(g.adj, g.vertex_mask, budget)
    by_dim = tuple(tuple(sorted(faces[s])) for s in range(1, len(faces)))
    return RankedComplex(by_dim, sum(len(f) for f in by_dim))


# -- exact rank over GF(p) ----------------------------------------------------


def _rank_gf2(cols: list[int]) -> int:
    cols = sorted(cols, key=int.bit_count)
    pivots: dict[int, int] = {}
    rank = 0
    for col in cols:
        while col:
            low = col & -col
            piv = pivots.get(low)
            if piv is None:
                pivots[low] = col
                rank += 1
                break
            col ^= piv
    return rank


def _rank_gfp(cols: list[dict[int, int]], p: int) -> int:
    cols = sorted(cols, key=len)
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for col in cols:
        col = dict(col)
        while col:
            r = min(col)
            piv = pivots.get(r)
            if piv is None:
                inv = pow(col[r], -1, p)
                pivots[r] = {row: v * inv % p for row, v in col.items()}
                rank += 1
                break
            c = col.pop(r)
            for row, v in piv.items():
                if row == r:
                    continue
                nv = (col.get(row, 0) - c * v) % p
                if nv:
                    col[row] = nv
                else:
                    col.pop(row, None)
    return rank


def _vertices_ascending(mask: int) -> list[int]:
    return list(bits(mask))


def _profile_from_faces(faces: list[list[int]], p: int) -> tuple[int, ...]:
    """Reduced Betti tuple from size-grouped faces (faces[0] unused, f_0 = 1)."""
    top = len(faces) - 1
    fcounts = [1] + [len(faces[s]) for s in range(1, top + 1)]
    ranks = [0] * (top + 2)  # ranks[s] = rank of d: C_s -> C_{s-1}
    if top >= 1 and fcounts[1]:
        ranks[1] = 1  # boundary of every vertex is the empty face
    for s in range(2, top + 1):
        index = {m: i for i, m in enumerate(faces[s - 1])}
        if p == 2:
            cols = []
            for f in faces[s]:
                col = 0
                for v in _vertices_ascending(f):
                    col |= 1 << index[f ^ (1 << v)]
                cols.append(col)
            ranks[s] = _rank_gf2(cols)
        else:
            cols = []
            for f in faces[s]:
                col = {}
                for i, v in enumerate(_vertices_ascending(f)):
                    col[index[f ^ (1 << v)]] = p - 1 if i & 1 else 1
                cols.append(col)
            ranks[s] = _rank_gfp(cols, p)
    betti = []
    for s in range(0, top + 1):
        betti.append(fcounts[s] - ranks[s] - ranks[s + 1])
    if any(b < 0 for b in betti):
        raise RuntimeError(f"negative Betti number from ranks {ranks}: {betti}")
    euler_faces = sum(f * (-1 if s & 1 == 0 else 1) for s, f in enumerate(fcounts))
    euler_betti = sum(b * (-1 if s & 1 == 0 else 1) for s, b in enumerate(betti))
    if euler_faces != euler_betti:
        raise RuntimeError(
            f"Euler characteristic mismatch: faces {euler_faces} vs betti {euler_betti}")
    while betti and betti[-1] == 0:
        betti.pop()
    return tuple(betti)


# -- homotopy-preserving reduction ---------------------------------------------


def _fold_mask(adj: tuple[int, ...], mask: int) -> tuple[Optional[int], list[tuple[int, int]]]:
    """Delete dominating vertices (N(u) ⊆ N(v) within the induced graph, u
    non-isolated => drop v) until stable.  Returns (None, folds) when an
    isolated vertex makes the complex a cone, else (reduced mask, folds)."""
    folds: list[tuple[int, int]] = []
    while True:
        verts = _vertices_ascending(mask)
        rows = {v: adj[v] & mask for v in verts}
        for v in verts:
            if not rows[v]:
                return None, folds
        deleted = False
        for u in verts:
            nu = rows[u]
            for v in verts:
                if v != u and not nu & ~rows[v]:
                    mask ^= 1 << v
                    folds.append((u, v))
                    deleted = True
                    break
            if deleted:
                break
        if not deleted:
            return mask, folds


def reduce_complex(g: Graph) -> tuple[Graph, ReductionLog]:
    """Apply open-domination folds to g; flag the cone case.

    The returned graph is the induced subgraph on the surviving vertices
    (order-preserving compaction; ``log.kept`` maps new -> old indices).
    """
    log = ReductionLog()
    mask = g.vertex_mask
    while True:
        verts = _vertices_ascending(mask)
        rows = {v: g.adj[v] & mask for v in verts}
        if any(not rows[v] for v in verts):
            log.contractible = True
            break
        deleted = False
        for u in verts:
            nu = rows[u]
            for v in verts:
                if v != u and not nu & ~rows[v]:
                    mask ^= 1 << v
                    log.folds.append((u, v))
                    deleted = True
                    break
            if deleted:
                break
        if not deleted:
            break
    reduced, keep = g.induced_subgraph(mask)
    log.kept = keep
    return reduced, log


# -- cached profiles with join decomposition -----------------------------------

_PROFILE_CACHE: dict[tuple, tuple[int, ...]] = {}


def clear_profile_cache() -> None:
    _PROFILE_CACHE.clear()


def profile_cache_size() -> int:
    return len(_PROFILE_CACHE)


def _join_profiles(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Betti numbers of a simplicial join; over a field this is a convolution
    (position i holds degree i-1, and join degrees satisfy d+1 = (i+1)+(j+1))."""
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return tuple(out)


def _connected_profile(g: Graph, comp: int, p: int, budget: int) -> tuple[int, ...]:
    sub, _ = g.induced_subgraph(comp)
    key = (p,) + canonical_key(sub)
    got = _PROFILE_CACHE.get(key)
    if got is None:
        got = _profile_from_faces(_faces_by_size(sub.adj, sub.vertex_mask, budget), p)
        _PROFILE_CACHE[key] = got
    return got


def _mask_profile(g: Graph, mask: int, p: int, budget: int) -> tuple[int, ...]:
    """Profile of Ind(G[mask]); components are computed separately and joined."""
    prof: tuple[int, ...] = (1,)
    for comp in g.components(within=mask):
        prof = _join_profiles(prof, _connected_profile(g, comp, p, budget))
        if not prof:
            return ()
    return prof


def reduced_homology(g: Graph, field: PrimeField = GF2, *, reduce: bool = True,
                     budget: int = DEFAULT_FACE_BUDGET) -> HomologyProfile:
    """Reduced homology dimensions of Ind(g) over GF(p).

    With ``reduce=False`` the faces of the whole complex are enumerated and
    the boundary ranks computed directly, with no folds, no component
    splitting and no caching; this is the independent cross-validation path.
    """
    if not reduce:
        return HomologyProfile(_profile_from_faces(
            _faces_by_size(g.adj, g.vertex_mask, budget), field.p))
    mask, _ = _fold_mask(g.adj, g.vertex_mask)
    if mask is None:
        return HomologyProfile(())
    return HomologyProfile(_mask_profile(g, mask, field.p, budget))


# -- isolating edges ------------------------------------------------------------


def is_isolating_edge(g: Graph, e: tuple[int, int]) -> tuple[bool, Optional[int]]:
    """True iff some vertex is isolated in G - N[e]; the witness is returned.

    Defined for edges and (for the addition direction) non-edges alike, since
    N[e] does not depend on whether uv itself is present.
    """
    u, v = e
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphInputError("isolating edge endpoints must be distinct")
    closed = g.adj[u] | g.adj[v] | 1 << u | 1 << v
    rest = g.vertex_mask & ~closed
    for w in bits(rest):
        if not g.adj[w] & rest:
            return True, w
    return False, None


def isolating_edge_toggle(g: Graph, e: tuple[int, int], w: int) -> Graph:
    """Add or remove the edge e, checking that w witnesses the isolating
    condition; the homotopy type of the independence complex is preserved."""
    u, v = e
    ok, _ = is_isolating_edge(g, e)
    closed = g.adj[u] | g.adj[v] | 1 << u | 1 << v
    rest = g.vertex_mask & ~closed
    if not ok or not rest >> w & 1 or g.adj[w] & rest:
        raise GraphInputError(f"vertex {w} is not isolated in G - N[{u}{v}]")
    if g.has_edge(u, v):
        return g.delete_edge(u, v)
    return g.add_edge(u, v)
