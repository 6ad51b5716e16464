"""Prime decompositions and factorizations, plus the prime-vertex reduction
algorithm with its counter bound."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Optional

from .canon import canonical_key
from .errors import GraphInputError
from .graph import Graph, as_mask, bits
from .homology import GF2, PrimeField
from .regularity import DEFAULT_SWEEP_CAP, is_prime_graph, reg


@dataclass(frozen=True)
class Decomposition:
    parts: tuple[int, ...]  # vertex masks, pairwise disjoint, no cross edges
    kind: str  # "INDUCED" | "PRIME"


@dataclass
class ReductionResult:
    counter: int
    residual: Graph
    residual_mask: int
    log: list[tuple[int, str]] = dc_field(default_factory=list)


_PRIME_CACHE: dict[tuple, bool] = {}


def _is_prime_cached(g: Graph, field: PrimeField, cap: int) -> bool:
    key = (field.p,) + canonical_key(g)
    got = _PRIME_CACHE.get(key)
    if got is None:
        got = is_prime_graph(g, field, cap=cap)
        _PRIME_CACHE[key] = got
    return got


def prime_part_masks(g: Graph, field: PrimeField = GF2, *,
                     cap: int = DEFAULT_SWEEP_CAP) -> list[int]:
    """Vertex sets (|R| >= 2) inducing connected prime subgraphs."""
    out = []
    for mask in range(3, 1 << g.n):
        if mask.bit_count() < 2:
            continue
        sub, _ = g.induced_subgraph(mask)
        if not sub.is_connected():
            continue
        if _is_prime_cached(sub, field, cap):
            out.append(mask)
    return out


def check_decomposition(g: Graph, parts, field: Optional[PrimeField] = None, *,
                        cap: int = DEFAULT_SWEEP_CAP) -> None:
    """Raise unless parts are pairwise disjoint, each of size >= 2, with no
    cross edges; with a field, additionally require connected prime parts."""
    seen = 0
    masks = [as_mask(p) for p in parts]
    for m in masks:
        if m.bit_count() < 2:
            raise GraphInputError("decomposition parts need >= 2 vertices")
        if m & seen:
            raise GraphInputError("decomposition parts must be disjoint")
        seen |= m
    for i, m in enumerate(masks):
        closed = g.closed_neighbors_of_set(m)
        for other in masks[i + 1:]:
            if closed & other:
                raise GraphInputError("cross edge between decomposition parts")
    if field is not None:
        for m in masks:
            sub, _ = g.induced_subgraph(m)
            if not sub.is_connected() or not _is_prime_cached(sub, field, cap):
                raise GraphInputError(f"part {m:#x} is not a connected prime graph")


def prime_decompositions(g: Graph, field: PrimeField = GF2, *,
                         budget: int = 200_000, max_results: int = 10_000,
                         cap: int = DEFAULT_SWEEP_CAP
                         ) -> tuple[list[Decomposition], bool]:
    """Maximal families of disjoint, cross-edge-free, connected prime parts.

    Families are enumerated by smallest-available-vertex anchoring, so each is
    produced exactly once.  A family is maximal iff the vertices untouched by
    any part's closed neighborhood induce an edgeless graph (any leftover edge
    would admit a 2-vertex prime part).  Returns (families, complete_flag).
    """
    parts = prime_part_masks(g, field, cap=cap)
    by_anchor: dict[int, list[int]] = {}
    for m in parts:
        by_anchor.setdefault((m & -m).bit_length() - 1, []).append(m)

    out: list[Decomposition] = []
    nodes = 0
    complete = True

    def maximal(chosen: list[int]) -> bool:
        blocked = 0
        for m in chosen:
            blocked |= g.closed_neighbors_of_set(m)
        free = g.vertex_mask & ~blocked
        for v in bits(free):
            if g.adj[v] & free:
                return False
        return True

    def rec(avail: int, chosen: list[int]) -> None:
        nonlocal nodes, complete
        nodes += 1
        if nodes > budget or len(out) >= max_results:
            complete = False
            return
        if not avail:
            if maximal(chosen):
                out.append(Decomposition(tuple(chosen), "PRIME"))
            return
        v = (avail & -avail).bit_length() - 1
        rec(avail & ~(1 << v), chosen)
        for m in by_anchor.get(v, ()):
            if m & ~avail:
                continue
            chosen.append(m)
            rec(avail & ~g.closed_neighbors_of_set(m), chosen)
            chosen.pop()

    rec(g.vertex_mask, [])
    return out, complete


def max_factorization(g: Graph, field: PrimeField = GF2, *,
                      cap: int = DEFAULT_SWEEP_CAP) -> tuple[int, tuple[int, ...]]:
    """Maximum sum of part regularities over disjoint cross-edge-free families
    of connected prime parts, with a witnessing family.

    Maximality of families is irrelevant for the maximum: every prime part
    has regularity >= 1, so enlarging a family never lowers the sum.
    """
    parts = prime_part_masks(g, field, cap=cap)
    weights = {}
    for m in parts:
        sub, _ = g.induced_subgraph(m)
        weights[m] = reg(sub, field, cap=cap)
    by_anchor: dict[int, list[int]] = {}
    for m in parts:
        by_anchor.setdefault((m & -m).bit_length() - 1, []).append(m)

    memo: dict[int, tuple[int, tuple[int, ...]]] = {}

    def best(avail: int) -> tuple[int, tuple[int, ...]]:
        if not avail:
            return 0, ()
        got = memo.get(avail)
        if got is not None:
            return got
        v = (avail & -avail).bit_length() - 1
        res = best(avail & ~(1 << v))
        for m in by_anchor.get(v, ()):
            if m & ~avail:
                continue
            sub_sum, sub_parts = best(avail & ~g.closed_neighbors_of_set(m))
            if weights[m] + sub_sum > res[0]:
                res = (weights[m] + sub_sum, (m,) + sub_parts)
        memo[avail] = res
        return res

    return best(g.vertex_mask)


def prime_factorization_check(g: Graph, field: PrimeField = GF2, *,
                              cap: int = DEFAULT_SWEEP_CAP) -> dict:
    """Compare reg(G) with the best prime-decomposition sum; report a witness."""
    r = reg(g, field, cap=cap)
    total, parts = max_factorization(g, field, cap=cap)
    return {
        "reg": r,
        "best_sum": total,
        "parts": [sorted(bits(m)) for m in parts],
        "part_regs": [reg(g.induced_subgraph(m)[0], field, cap=cap) for m in parts],
        "equal": r == total,
    }


def reduction_algorithm(g: Graph, f, field: PrimeField = GF2, *,
                        cap: int = DEFAULT_SWEEP_CAP) -> ReductionResult:
    """Scan F in ascending order on the evolving graph: a prime vertex removes
    its closed neighborhood and bumps the counter, any other vertex is simply
    deleted.  reg(G) <= counter + reg(residual) always holds (checked in
    tests, never assumed by the regularity engine)."""
    fmask = as_mask(f)
    if fmask & ~g.vertex_mask:
        raise GraphInputError("F contains out-of-range vertices")
    gmask = g.vertex_mask
    counter = 0
    log: list[tuple[int, str]] = []
    while fmask:
        v = (fmask & -fmask).bit_length() - 1
        cur, keep = g.induced_subgraph(gmask)
        pos = {old: new for new, old in enumerate(keep)}
        rv = reg(cur, field, cap=cap)
        rd = reg(cur.delete_vertex(pos[v]), field, cap=cap)
        if rd < rv:
            closed = (g.adj[v] | 1 << v) & gmask
            gmask &= ~closed
            fmask &= ~closed
            counter += 1
            log.append((v, "prime"))
        else:
            gmask &= ~(1 << v)
            fmask &= ~(1 << v)
            log.append((v, "delete"))
    residual, _ = g.induced_subgraph(gmask)
    return ReductionResult(counter, residual, gmask, log)
