"""Command-line interface.

One binary, subcommand style; graphs come from FILE or stdin (graph6 lines
by default, edge-list via --format or file extension), results go to stdout
as text or JSON.  Exit codes: 0 success / property true, 1 property false,
2 usage or input error, 3 theorem violation (from ``reduce``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .cover import CoverSpec, has_cover, truss_decompose
from .errors import (CliqueCoverError, GraphParseError, ParameterError,
                     TheoremViolationError)
from .extremal import (build_extremal, cocktail_party_counterexample,
                       min_edges_components, min_edges_kcover,
                       min_edges_vertex_kcover, recognize_extremal)
from .formats import (decode_edgelist, encode_graph6, iter_graph6_lines,
                      to_dot)
from .graphs import Graph, contract_edge, make_edge
from .oracle import SearchSpec, search_report
from .reduction import reduce_to_k4_covered
from .shrink import POLICIES, run_procedure
from . import verify as verify_mod

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_VIOLATION = 3


def _add_common(parser, with_input=True):
    parser.add_argument("--json", action="store_true",
                        help="machine-readable JSON output (one object per line)")
    if with_input:
        parser.add_argument("file", nargs="?", metavar="FILE",
                            help="input graph(s); stdin when omitted")
        parser.add_argument("--format", choices=("graph6", "edgelist"),
                            help="input format (default: by extension, else graph6)")
    parser.add_argument("--dot", metavar="PATH",
                        help="also write the (first) graph as DOT")
    parser.add_argument("--workers", type=int, default=1,
                        help="worker threads for exhaustive searches")
    parser.add_argument("--seed", type=int, default=0,
                        help="RNG seed for randomized checks")


def _read_text(path):
    if path is None or path == "-":
        return sys.stdin.read(), None
    with open(path, "r", encoding="ascii") as fh:
        return fh.read(), path


def _load_graphs(args):
    text, path = _read_text(getattr(args, "file", None))
    fmt = getattr(args, "format", None)
    if fmt is None and path is not None:
        if path.endswith((".el", ".edges", ".edgelist")):
            fmt = "edgelist"
    if fmt is None:
        fmt = "graph6"
    if fmt == "edgelist":
        return [decode_edgelist(text)]
    graphs = list(iter_graph6_lines(text))
    if not graphs:
        raise GraphParseError("no graphs in input")
    return graphs


def _emit(args, obj, text):
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _maybe_dot(args, g: Graph):
    if getattr(args, "dot", None):
        with open(args.dot, "w", encoding="ascii") as fh:
            fh.write(to_dot(g))


def _cmd_cover_check(args):
    spec = CoverSpec(args.k, args.l)
    worst = EXIT_OK
    for i, g in enumerate(_load_graphs(args)):
        if i == 0:
            _maybe_dot(args, g)
        report = has_cover(g, spec)
        _emit(args, report.to_json_dict(),
              f"({spec.k},{spec.l})-cover {'holds' if report.holds else 'fails'}"
              f" on {g.n} vertices, {g.edge_count} edges"
              + ("" if report.holds else
                 f"; {len(report.defects)} defective edge(s)"))
        if not report.holds:
            worst = EXIT_FALSE
    return worst


def _cmd_truss(args):
    for i, g in enumerate(_load_graphs(args)):
        if i == 0:
            _maybe_dot(args, g)
        trusses = truss_decompose(g, args.l)
        obj = {"l": args.l,
               "trusses": [{"graph6": encode_graph6(t),
                            "vertices": list(vmap)} for t, vmap in trusses]}
        _emit(args, obj,
              f"{len(trusses)} truss(es) at l={args.l}: "
              + (", ".join(f"{t.n}v/{t.edge_count}e" for t, _ in trusses)
                 or "none"))
    return EXIT_OK


def _cmd_bound(args):
    if args.vertex_variant and args.components is not None:
        raise ParameterError("--vertex-variant and --components are exclusive")
    if args.vertex_variant:
        value = min_edges_vertex_kcover(args.n, args.k)
        variant = "vertex"
    elif args.components is not None:
        value = min_edges_components(args.n, args.k, args.components)
        variant = "components"
    else:
        value = min_edges_kcover(args.n, args.k)
        variant = "edge"
    _emit(args, {"n": args.n, "k": args.k, "variant": variant,
                 "components": args.components, "edges": value},
          str(value))
    return EXIT_OK


def _cmd_construct(args):
    g = build_extremal(args.n, args.k, args.shape)
    _maybe_dot(args, g)
    _emit(args, {"n": g.n, "k": args.k, "shape": args.shape,
                 "edges": g.edge_count, "graph6": encode_graph6(g)},
          encode_graph6(g))
    return EXIT_OK


def _cmd_recognize(args):
    worst = EXIT_OK
    for i, g in enumerate(_load_graphs(args)):
        if i == 0:
            _maybe_dot(args, g)
        res = recognize_extremal(g, args.k)
        obj = {"extremal": res.extremal, "reason": res.reason,
               "witness": res.witness.to_json_dict() if res.witness else None}
        _emit(args, obj,
              "extremal" if res.extremal else f"not extremal ({res.reason})")
        if not res.extremal:
            worst = EXIT_FALSE
    return worst


def _cmd_shrink(args):
    for i, g in enumerate(_load_graphs(args)):
        if i == 0:
            _maybe_dot(args, g)
        trace = run_procedure(g, args.k, args.policy)
        _emit(args, trace.to_json_dict(),
              f"bound {trace.bound} <= {g.edge_count} edges "
              f"({trace.step_count} steps, policy {args.policy})")
    return EXIT_OK


def _cmd_contract(args):
    try:
        u, v = (int(x) for x in args.e.split(","))
    except ValueError:
        raise ParameterError(f"--e expects 'u,v', got {args.e!r}")
    worst = EXIT_OK
    for g in _load_graphs(args):
        h, cmap = contract_edge(g, make_edge(u, v))
        _maybe_dot(args, h)
        _emit(args, {"contracted": [cmap.merged.u, cmap.merged.v],
                     "image": cmap.image, "map": list(cmap.mapping),
                     "n": h.n, "edges": h.edge_count,
                     "graph6": encode_graph6(h)},
              encode_graph6(h))
    return worst


def _cmd_reduce(args):
    for i, g in enumerate(_load_graphs(args)):
        if i == 0:
            _maybe_dot(args, g)
        final, chain = reduce_to_k4_covered(g)
        if args.json:
            for rep in chain:
                print(json.dumps(rep.to_json_dict(), sort_keys=True))
            print(json.dumps({"final": {"n": final.n,
                                        "edges": final.edge_count,
                                        "graph6": encode_graph6(final)}},
                             sort_keys=True))
        else:
            print(f"{len(chain)} contraction(s) -> {final.n} vertices, "
                  f"{final.edge_count} edges: {encode_graph6(final)}")
    return EXIT_OK


def _cmd_search(args):
    spec = SearchSpec(
        n=args.n, k=args.k, l=args.l,
        require_connected=args.components is None,
        component_count=args.components,
        condition="vertex_cover" if args.vertex_variant else "edge_cover")
    report = search_report(spec, collect_all=args.all, workers=args.workers)
    if args.json:
        print(json.dumps(report.to_json_dict(), sort_keys=True))
    else:
        if report.minimum is None:
            print(f"no graph satisfies the spec "
                  f"(searched m={report.m_searched[0]}..{report.m_searched[1]})")
        else:
            print(f"minimum {report.minimum} edges "
                  f"({report.subsets_examined:,} subsets examined, "
                  f"{report.wall_time:.2f}s)")
            for m in report.minimizers:
                print(encode_graph6(m.graph))
    return EXIT_OK if report.minimum is not None else EXIT_FALSE


def _cmd_counterexample(args):
    rep = cocktail_party_counterexample(args.l_half)
    _emit(args, rep.to_json_dict(),
          f"n={rep.graph.n}: {rep.edges} edges, cover "
          f"{'holds' if rep.cover_holds else 'FAILS'}, bound {rep.thm1_bound}, "
          f"{'strictly below' if rep.strictly_smaller else 'not below'}")
    return EXIT_OK


def _cmd_verify(args):
    if args.list:
        for cid, title, _ in verify_mod.CRITERIA:
            print(f"{cid}: {title}")
        return EXIT_OK
    results = verify_mod.run_all(only=args.only or None, workers=args.workers,
                                 seed=args.seed)
    if args.json:
        print(json.dumps({
            "ok": all(r.ok for r in results),
            "criteria": [{"id": r.cid, "title": r.title, "ok": r.ok,
                          "detail": r.detail, "elapsed": r.elapsed}
                         for r in results]}, sort_keys=True))
    else:
        print(verify_mod.format_table(results))
    return EXIT_OK if all(r.ok for r in results) else EXIT_FALSE


def build_parser():
    p = argparse.ArgumentParser(
        prog="cliquecover",
        description="Edge-minimal graphs under clique-cover constraints")
    sub = p.add_subparsers(dest="cmd", required=True)

    cover = sub.add_parser("cover", help="cover predicates")
    cover_sub = cover.add_subparsers(dest="cover_cmd", required=True)
    chk = cover_sub.add_parser("check", help="test the (k,l)-cover condition")
    chk.add_argument("-k", type=int, required=True)
    chk.add_argument("-l", type=int, default=1)
    _add_common(chk)
    chk.set_defaults(fn=_cmd_cover_check)

    truss = sub.add_parser("truss", help="l-truss decomposition")
    truss.add_argument("-l", type=int, required=True)
    _add_common(truss)
    truss.set_defaults(fn=_cmd_truss)

    bound = sub.add_parser("bound", help="closed-form minimum edge count")
    bound.add_argument("--n", type=int, required=True)
    bound.add_argument("--k", type=int, required=True)
    bound.add_argument("--components", type=int)
    bound.add_argument("--vertex-variant", action="store_true")
    _add_common(bound, with_input=False)
    bound.set_defaults(fn=_cmd_bound)

    cons = sub.add_parser("construct", help="build a minimum-edge graph")
    cons.add_argument("--n", type=int, required=True)
    cons.add_argument("--k", type=int, required=True)
    cons.add_argument("--shape", choices=("path", "star"), default="star")
    _add_common(cons, with_input=False)
    cons.set_defaults(fn=_cmd_construct)

    rec = sub.add_parser("recognize", help="test extremality structurally")
    rec.add_argument("-k", type=int, required=True)
    _add_common(rec)
    rec.set_defaults(fn=_cmd_recognize)

    shr = sub.add_parser("shrink", help="run the clique-peeling bound")
    shr.add_argument("-k", type=int, required=True)
    shr.add_argument("--policy", choices=POLICIES, default="lex")
    _add_common(shr)
    shr.set_defaults(fn=_cmd_shrink)

    con = sub.add_parser("contract", help="contract one edge")
    con.add_argument("-e", required=True, metavar="U,V")
    _add_common(con)
    con.set_defaults(fn=_cmd_contract)

    red = sub.add_parser("reduce", help="contract no-K4 edges to a fixpoint")
    _add_common(red)
    red.set_defaults(fn=_cmd_reduce)

    sea = sub.add_parser("search", help="exhaustive minimum-edge search")
    sea.add_argument("--n", type=int, required=True)
    sea.add_argument("--k", type=int, required=True)
    sea.add_argument("--l", type=int, default=1)
    sea.add_argument("--all", action="store_true",
                     help="collect all minimizers up to isomorphism")
    sea.add_argument("--vertex-variant", action="store_true")
    sea.add_argument("--components", type=int)
    _add_common(sea, with_input=False)
    sea.set_defaults(fn=_cmd_search)

    ce = sub.add_parser("counterexample",
                        help="clique-minus-matching comparison report")
    ce.add_argument("--l-half", type=int, required=True, dest="l_half")
    _add_common(ce, with_input=False)
    ce.set_defaults(fn=_cmd_counterexample)

    ver = sub.add_parser("verify-paper",
                         help="run the full verification suite")
    ver.add_argument("--only", action="append", metavar="ID",
                     help="run only the named criterion (repeatable)")
    ver.add_argument("--list", action="store_true",
                     help="list criterion ids and exit")
    _add_common(ver, with_input=False)
    ver.set_defaults(fn=_cmd_verify)

    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args)
    except TheoremViolationError as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except GraphParseError as exc:
        offset = f" (byte offset {exc.offset})" if exc.offset is not None else ""
        print(f"error: {exc}{offset}", file=sys.stderr)
        return EXIT_USAGE
    except (CliqueCoverError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
