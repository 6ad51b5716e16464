"""Command-line interface.

Graphs are given as a literal graph6 line, a literal edge list ("n m" header
then "u v" lines), a path to a file holding either format, or a catalog name
via --catalog (c5, p4, k3, k2,3, 3k2, r1, mk, mv, claw).  JSON reports go to
stdout, logs to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .decomposition import (max_factorization, prime_decompositions,
                            reduction_algorithm)
from .errors import GraphInputError, ResourceError
from .formats import edge_list_encode, graph6_encode, parse_graph
from .graph import Graph, bits, mask_of
from .homology import GF2, PrimeField, reduced_homology
from .invariants import (cochordal_cover_number, induced_matching_number,
                         matching_number, privacy_degree)
from .regularity import betti_table, is_prime_graph, is_prime_vertex, reg, regularity
from .suites import DEFAULT_SUITES, SUITES
from .transforms import (LozinSpec, MateTrace, Pairing, contract_edge, double_all,
                         fake_contract, g_contract, g_expand, lozin_transform,
                         mate_search, replay_trace, subdivide_edge, t_contract,
                         t_expand)


def _load_graph(args) -> Graph:
    if getattr(args, "catalog", None):
        return catalog.by_name(args.catalog)
    text = getattr(args, "input", None)
    if text is None:
        text = sys.stdin.read()
    elif os.path.isfile(text):
        with open(text) as fh:
            text = fh.read()
    return parse_graph(text)


def _field(args) -> PrimeField:
    return PrimeField(args.field)


def _emit(args, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for k, v in payload.items():
            print(f"{k}: {v}")


def _vset(text: str) -> int:
    if not text.strip():
        return 0
    return mask_of(int(t) for t in text.split(","))


def _cmd_reg(args) -> int:
    g = _load_graph(args)
    cert = regularity(g, _field(args), cap=args.cap)
    _emit(args, {
        "reg": cert.value,
        "witness_subset": sorted(bits(cert.witness_subset)),
        "witness_degree": cert.witness_degree,
        "field": args.field,
    })
    return 0


def _cmd_betti(args) -> int:
    g = _load_graph(args)
    table = betti_table(g, _field(args), cap=args.cap)
    entries = {f"{i},{j}": v for (i, j), v in sorted(table.entries.items())}
    _emit(args, {"betti": entries, "reg": table.regularity(), "field": args.field})
    return 0


def _cmd_prime(args) -> int:
    g = _load_graph(args)
    f = _field(args)
    out = {"prime": is_prime_graph(g, f, cap=args.cap), "field": args.field}
    if args.vertices:
        out["prime_vertices"] = [v for v in range(g.n)
                                 if is_prime_vertex(g, v, f, cap=args.cap)]
    _emit(args, out)
    return 0


def _cmd_invariants(args) -> int:
    g = _load_graph(args)
    cc = cochordal_cover_number(g, node_budget=args.budget or 10_000_000)
    out = {
        "n": g.n,
        "edges": g.num_edges,
        "matching": matching_number(g),
        "induced_matching": induced_matching_number(g),
        "cochord_lower": cc.lower,
        "cochord_upper": cc.upper,
        "cochord_exact": cc.exact,
        "max_degree": g.max_degree(),
        "min_degree": g.min_degree(),
        "girth": g.girth(),
        "connected": g.is_connected(),
        "bipartite": g.is_bipartite(),
        "claw_free": g.is_claw_free(),
        "2k2_free": g.is_2k2_free(),
        "chordal": g.is_chordal(),
        "cochordal": g.is_cochordal(),
        "weakly_chordal": g.is_weakly_chordal(),
    }
    if g.num_edges:
        out["privacy_degree"] = privacy_degree(g)
    _emit(args, out)
    return 0 if cc.exact or args.allow_inexact else 1


def _out_graph(args, g: Graph) -> None:
    if args.out == "edges":
        print(edge_list_encode(g))
    else:
        print(graph6_encode(g))


def _cmd_transform(args) -> int:
    g = _load_graph(args)
    kind = args.kind
    if kind == "lozin":
        y = _vset(args.Y) if args.Y is not None else g.adj[args.vertex]
        z = g.adj[args.vertex] & ~y if args.Z is None else _vset(args.Z)
        h = lozin_transform(g, LozinSpec(args.vertex, y, z))
    elif kind == "subdivide":
        u, v = args.edge
        h = subdivide_edge(g, u, v, args.k)
    elif kind == "contract":
        u, v = args.edge
        h = contract_edge(g, u, v)
    elif kind == "fake-contract":
        u, v = args.edge
        h = fake_contract(g, u, v)
    elif kind == "double-all":
        h = double_all(g)
    elif kind == "g-contract":
        u, v = args.edge
        h = g_contract(g, u, v)
    elif kind == "t-contract":
        u, v = args.edge
        h, move = t_contract(g, u, v)
        print(move.serialize(), file=sys.stderr)
    elif kind == "g-expand":
        h = g_expand(g, args.vertex, Pairing(_vset(args.A), _vset(args.B)))
    elif kind == "t-expand":
        h, move = t_expand(g, args.vertex, Pairing(_vset(args.A), _vset(args.B)))
        print(move.serialize(), file=sys.stderr)
    else:
        raise GraphInputError(f"unknown transform {kind!r}")
    _out_graph(args, h)
    return 0


def _cmd_decompose(args) -> int:
    g = _load_graph(args)
    f = _field(args)
    total, parts = max_factorization(g, f, cap=args.cap)
    r = reg(g, f, cap=args.cap)
    payload = {
        "reg": r,
        "best_sum": total,
        "equal": bool(r == total),
        "parts": [sorted(bits(m)) for m in parts],
        "part_regs": [reg(g.induced_subgraph(m)[0], f, cap=args.cap) for m in parts],
        "field": args.field,
    }
    if args.list:
        decs, complete = prime_decompositions(g, f, budget=args.budget or 200_000,
                                              cap=args.cap)
        payload["maximal_decompositions"] = [
            [sorted(bits(m)) for m in d.parts] for d in decs]
        payload["complete"] = complete
    _emit(args, payload)
    return 0 if payload["equal"] else 1


def _cmd_vim(args) -> int:
    g = _load_graph(args)
    res = mate_search(g, depth_budget=args.depth,
                      vertex_budget=args.vertex_budget,
                      node_budget=args.budget or 4000)
    payload = {
        "im": induced_matching_number(g),
        "vim_lower": res.best_im,
        "visited": res.visited,
        "flags": res.flags,
        "trace": res.trace.serialize().splitlines(),
    }
    _emit(args, payload)
    return 0


def _cmd_replay(args) -> int:
    g = _load_graph(args)
    with open(args.trace) as fh:
        trace = MateTrace.parse(fh.read())
    h = replay_trace(g, trace)
    _out_graph(args, h)
    return 0


def _cmd_reduce(args) -> int:
    g = _load_graph(args)
    res = reduction_algorithm(g, mask_of(args.set) if args.set else g.vertex_mask,
                              _field(args), cap=args.cap)
    _emit(args, {
        "counter": res.counter,
        "residual_vertices": sorted(bits(res.residual_mask)),
        "residual_reg": reg(res.residual, _field(args), cap=args.cap),
        "log": [f"{v}:{what}" for v, what in res.log],
    })
    return 0


def _cmd_homology(args) -> int:
    g = _load_graph(args)
    prof = reduced_homology(g, _field(args), reduce=not args.raw)
    _emit(args, {"betti_from_minus1": list(prof.betti), "field": args.field})
    return 0


def _cmd_verify(args) -> int:
    names = args.suites or DEFAULT_SUITES
    if "all" in names:
        names = list(SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        print(f"unknown suite(s): {', '.join(unknown)}", file=sys.stderr)
        print(f"available: {', '.join(SUITES)}", file=sys.stderr)
        return 2
    reports = []
    ok = True
    for name in names:
        rep = SUITES[name](seed=args.seed, budget=args.budget, slow=args.slow)
        reports.append(rep)
        passed = not rep["failures"]
        inexact = "INEXACT" in rep["flags"] and not args.allow_inexact
        if not passed or inexact:
            ok = False
        if not args.json:
            status = "PASS" if passed else "FAIL"
            flags = f" [{','.join(rep['flags'])}]" if rep["flags"] else ""
            print(f"{status} {rep['suite']}: {rep['count']} instances, "
                  f"{len(rep['failures'])} failures, {rep['wall_ms']} ms{flags}")
            for f in rep["failures"][:10]:
                print(f"  failure: {json.dumps(f, sort_keys=True)}")
    if args.json:
        print(json.dumps(reports, indent=2, sort_keys=True))
    return 0 if ok else 1


def _add_common(p, with_field=True):
    p.add_argument("input", nargs="?", help="graph6/edge-list literal or file; stdin if omitted")
    p.add_argument("--catalog", help="catalog name instead of input")
    if with_field:
        p.add_argument("--field", type=int, default=2, help="prime field characteristic")
    p.add_argument("--cap", type=int, default=18, help="subset-sweep vertex cap")
    p.add_argument("--json", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="regraph",
                                 description="Exact regularity of graph edge ideals "
                                             "and the transforms that control it")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reg", help="regularity with witness certificate")
    _add_common(p)
    p.set_defaults(fn=_cmd_reg)

    p = sub.add_parser("betti", help="graded Betti table")
    _add_common(p)
    p.set_defaults(fn=_cmd_betti)

    p = sub.add_parser("prime", help="prime graph test")
    _add_common(p)
    p.add_argument("--vertices", action="store_true", help="also list prime vertices")
    p.set_defaults(fn=_cmd_prime)

    p = sub.add_parser("homology", help="reduced homology of the independence complex")
    _add_common(p)
    p.add_argument("--raw", action="store_true", help="skip fold reductions")
    p.set_defaults(fn=_cmd_homology)

    p = sub.add_parser("invariants", help="matching/cochordal/degree invariants")
    _add_common(p, with_field=False)
    p.add_argument("--budget", type=int, help="cochordal cover node budget")
    p.add_argument("--allow-inexact", action="store_true")
    p.set_defaults(fn=_cmd_invariants)

    p = sub.add_parser("transform", help="apply a graph rewriting operation")
    p.add_argument("kind", choices=["lozin", "subdivide", "contract", "fake-contract",
                                    "double-all", "g-contract", "t-contract",
                                    "g-expand", "t-expand"])
    _add_common(p, with_field=False)
    p.add_argument("--vertex", type=int, help="vertex for lozin/expand")
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("-k", type=int, default=1, help="internal vertices for subdivide")
    p.add_argument("--Y", help="comma list for the Lozin Y side")
    p.add_argument("--Z", help="comma list for the Lozin Z side")
    p.add_argument("--A", default="", help="comma list for expansion side A")
    p.add_argument("--B", default="", help="comma list for expansion side B")
    p.add_argument("--out", choices=["graph6", "edges"], default="graph6")
    p.set_defaults(fn=_cmd_transform)

    p = sub.add_parser("decompose", help="prime factorization of the regularity")
    _add_common(p)
    p.add_argument("--budget", type=int, help="enumeration node budget")
    p.add_argument("--list", action="store_true", help="list maximal decompositions")
    p.set_defaults(fn=_cmd_decompose)

    p = sub.add_parser("vim", help="mate search lower bound on vim")
    _add_common(p, with_field=False)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--vertex-budget", type=int, default=None)
    p.add_argument("--budget", type=int, help="visited-mate budget")
    p.set_defaults(fn=_cmd_vim)

    p = sub.add_parser("replay", help="replay a mate-move trace")
    _add_common(p, with_field=False)
    p.add_argument("--trace", required=True, help="trace file")
    p.add_argument("--out", choices=["graph6", "edges"], default="graph6")
    p.set_defaults(fn=_cmd_replay)

    p = sub.add_parser("reduce", help="prime-vertex reduction algorithm")
    _add_common(p)
    p.add_argument("--set", type=int, nargs="*", help="vertices to scan (default all)")
    p.set_defaults(fn=_cmd_reduce)

    p = sub.add_parser("verify", help="run theorem-verification suites")
    p.add_argument("suites", nargs="*", help=f"suites ({', '.join(SUITES)}) or 'all'")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--budget", type=int)
    p.add_argument("--slow", action="store_true", help="enable heavy golden checks")
    p.add_argument("--allow-inexact", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_verify)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (GraphInputError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
