"""Regularity of edge ideals via the homology of induced subcomplexes.

``regularity`` runs the literal subset sweep (the oracle path): for every
S ⊆ V it takes the top nonvanishing reduced homology degree of Ind(G[S]) and
maximizes j = degree + 1.  Pruning skips S whenever the independence number of
G[S] cannot beat the running maximum.  ``reg`` is the cached fast path used by
prime tests and harnesses; it splits into connected components (regularity is
additive over disjoint unions) and memoizes values by canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canon import canonical_key
from .errors import ResourceError
from .graph import Graph, bits
from .homology import (DEFAULT_FACE_BUDGET, GF2, PrimeField, _fold_mask,
                       _mask_profile)

DEFAULT_SWEEP_CAP = 18


@dataclass(frozen=True)
class RegularityCertificate:
    value: int
    witness_subset: int  # vertex mask S with b~_{value-1}(Ind(G[S])) != 0
    witness_degree: int
    field: PrimeField


@dataclass(frozen=True)
class BettiTable:
    entries: dict  # (i, j) -> beta_{i,j}
    field: PrimeField

    def regularity(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def projective_like_max_i(self) -> int:
        return max(i for (i, _) in self.entries)


def _alpha_table(adj: tuple[int, ...], n: int) -> bytearray:
    """Independence number of every induced subgraph, indexed by vertex mask."""
    tab = bytearray(1 << n)
    for s in range(1, 1 << n):
        b = s & -s
        v = b.bit_length() - 1
        skip = tab[s ^ b]
        take = 1 + tab[s & ~(adj[v] | b)]
        tab[s] = take if take > skip else skip
    return tab


def _subsets_by_size(n: int) -> list[int]:
    return sorted(range(1 << n), key=int.bit_count)


def regularity(g: Graph, field: PrimeField = GF2, *, cap: int = DEFAULT_SWEEP_CAP,
               prune: bool = True, face_budget: int = DEFAULT_FACE_BUDGET
               ) -> RegularityCertificate:
    """Full Hochster sweep with certificate."""
    n = g.n
    if n > cap:
        raise ResourceError(
            f"Hochster sweep needs 2^{n} subsets; raise cap (currently {cap})")
    adj = g.adj
    alpha = _alpha_table(adj, n)
    best_j = 0
    best_s = 0
    for s in _subsets_by_size(n):
        if prune and alpha[s] <= best_j:
            continue
        folded, _ = _fold_mask(adj, s)
        if folded is None:
            continue
        prof = _mask_profile(g, folded, field.p, face_budget)
        if not prof:
            continue
        j = len(prof) - 1  # top degree is len-2, contribution is degree+1
        if j > best_j:
            best_j, best_s = j, s
    return RegularityCertificate(best_j, best_s, best_j, field)


_REG_CACHE: dict[tuple, int] = {}


def clear_reg_cache() -> None:
    _REG_CACHE.clear()


def reg(g: Graph, field: PrimeField = GF2, *, cap: int = DEFAULT_SWEEP_CAP,
        face_budget: int = DEFAULT_FACE_BUDGET) -> int:
    """Regularity value, component-split and memoized by canonical form."""
    total = 0
    for comp in g.components():
        sub, _ = g.induced_subgraph(comp)
        key = (field.p,) + canonical_key(sub)
        got = _REG_CACHE.get(key)
        if got is None:
            got = regularity(sub, field, cap=cap, face_budget=face_budget).value
            _REG_CACHE[key] = got
        total += got
    return total


def betti_table(g: Graph, field: PrimeField = GF2, *, cap: int = DEFAULT_SWEEP_CAP,
                face_budget: int = DEFAULT_FACE_BUDGET) -> BettiTable:
    """Graded Betti numbers beta_{i,j} = sum over |S| = j of b~_{j-i-1}(Ind(G[S]))."""
    n = g.n
    if n > cap:
        raise ResourceError(
            f"Betti table needs 2^{n} subsets; raise cap (currently {cap})")
    entries: dict[tuple[int, int], int] = {(0, 0): 1}
    adj = g.adj
    for s in range(1, 1 << n):
        folded, _ = _fold_mask(adj, s)
        if folded is None:
            continue
        prof = _mask_profile(g, folded, field.p, face_budget)
        j = s.bit_count()
        for idx, b in enumerate(prof):
            if b:
                d = idx - 1
                key = (j - d - 1, j)
                entries[key] = entries.get(key, 0) + b
    return BettiTable(entries, field)


def is_prime_vertex(g: Graph, v: int, field: PrimeField = GF2, *,
                    cap: int = DEFAULT_SWEEP_CAP) -> bool:
    """True iff deleting v strictly drops the regularity."""
    g._check_vertex(v)
    return reg(g.delete_vertex(v), field, cap=cap) < reg(g, field, cap=cap)


def is_prime_graph(g: Graph, field: PrimeField = GF2, *, cap: int = DEFAULT_SWEEP_CAP,
                   fast_path: bool = True) -> bool:
    """Connected graph whose regularity drops on every single-vertex deletion.

    Disconnected input returns False (primeness is defined for connected
    graphs only).  The fast path rejects, without any homology, graphs with an
    open-dominated vertex or a closed-dominated vertex whose dominator has
    degree >= 2.
    """
    if g.n == 0:
        return False
    if not g.is_connected():
        return False
    if fast_path:
        open_pairs, closed_pairs = g.dominated_pairs()
        if open_pairs:
            return False
        if any(g.degree(y) >= 2 for _, y in closed_pairs):
            return False
    r = reg(g, field, cap=cap)
    for v in range(g.n):
        if reg(g.delete_vertex(v), field, cap=cap) >= r:
            return False
    return True


def mv_dhs_check(g: Graph, field: PrimeField = GF2, *,
                 cap: int = DEFAULT_SWEEP_CAP) -> list[dict]:
    """Per-vertex check that reg(G) <= max(reg(G-v), reg(G-N[v])+1) and that
    reg(G) equals one of the two branches."""
    r = reg(g, field, cap=cap)
    rows = []
    for v in range(g.n):
        rd = reg(g.delete_vertex(v), field, cap=cap)
        rl = reg(g.delete_vertices(g.closed_neighbors(v)), field, cap=cap)
        rows.append({
            "vertex": v,
            "reg": r,
            "reg_deletion": rd,
            "reg_link_plus1": rl + 1,
            "upper_bound_holds": r <= max(rd, rl + 1),
            "attained": r == rd or r == rl + 1,
        })
    return rows
