"""``demkit`` command line.

Exit codes: 0 ok, 1 a verification came out false, 2 bad usage or input,
3 exact-search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import kernels
from .families import FamilyError, generate
from .graph import GraphError
from .io import parse_graph, read_graph_file, write_graph
from .monitoring import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    MonitoringError,
    dem_number,
    greedy_dem,
    is_dem_set,
    monitored_edges,
    restrict_dem,
)
from .perturbation import revalidate_after_edge_deletion, scan
from .reproduce import SUITES, run_reproduce

OK, FAILED, USAGE, BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _vertex_list(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated vertex ids, got {text!r}") from None


def _pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected u,v got {text!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected u,v got {text!r}") from None


def _load(path):
    if path == "-":
        return parse_graph(sys.stdin.read())
    try:
        return read_graph_file(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _emit(args, payload, tsv_rows=None):
    if args.format == "json" or tsv_rows is None:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))


def _edge_text(G, edge_set):
    return [list(p) for p in edge_set.pairs(G)]


# commands ----------------------------------------------------------------------------


def cmd_gen(args):
    text = write_graph(generate(args.family))
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


def cmd_dem(args):
    G = _load(args.input)
    res = greedy_dem(G) if args.greedy else dem_number(G, budget=args.budget)
    payload = {"value": res.value, "method": res.method, "subsets_examined": res.subsets_examined}
    if args.basis or args.greedy:
        payload["basis"] = list(res.basis)
    rows = [["value", res.value], ["method", res.method]]
    if "basis" in payload:
        rows.append(["basis", ",".join(map(str, res.basis))])
    _emit(args, payload, rows)
    return OK


def cmd_em(args):
    G = _load(args.input)
    em = monitored_edges(G, args.x)
    _emit(args, {"x": args.x, "edges": _edge_text(G, em)}, [[u, v] for u, v in em.pairs(G)])
    return OK


def cmd_verify(args):
    G = _load(args.input)
    check = is_dem_set(G, args.M)
    _emit(args, {"dem_set": check.ok, "uncovered": _edge_text(G, check.uncovered)},
          [["dem_set", str(check.ok).lower()]] + [["uncovered", u, v] for u, v in check.uncovered.pairs(G)])
    return OK if check.ok else FAILED


def cmd_restrict(args):
    G = _load(args.input)
    H = _load(args.sub_edges)
    if H.n > G.n:
        raise UsageError("subgraph has more vertices than the host graph")
    res = restrict_dem(G, H.edges, budget=args.budget)
    _emit(args, {"value": res.value, "basis": list(res.basis)},
          [["value", res.value], ["basis", ",".join(map(str, res.basis))]])
    return OK


def cmd_perturb(args):
    G = _load(args.input)
    mode = "vertices" if args.vertices else "edges"
    if args.M is not None and mode == "vertices":
        raise UsageError("-M only applies to --edges")
    report = scan(G, mode, args.M, budget=args.budget)
    sys.stdout.write(report.to_json() + "\n" if args.format == "json" else report.to_tsv())
    return OK


def cmd_revalidate(args):
    G = _load(args.input)
    u, v = args.e
    try:
        e = G.edge_id(u, v)
    except KeyError:
        raise UsageError(f"{u},{v} is not an edge") from None
    check = revalidate_after_edge_deletion(G, args.M, e)
    H_edges = [p for i, p in enumerate(G.edges) if i != e]
    uncovered = [list(H_edges[i]) for i in check.uncovered]
    _emit(args, {"still_dem_set": check.ok, "uncovered": uncovered},
          [["still_dem_set", str(check.ok).lower()]] + [["uncovered", a, b] for a, b in uncovered])
    return OK if check.ok else FAILED


def cmd_reproduce(args):
    doc = run_reproduce(args.suite)
    out = doc.to_json(args.timings) + "\n" if args.format == "json" else doc.to_tsv(args.timings)
    sys.stdout.write(out)
    return OK if doc.passed else FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="demkit", description="Distance-edge monitoring sets of graphs.")
    p.add_argument("--threads", type=int, default=None, help="cap on numba worker threads")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, func, help, graph=True):
        sp = sub.add_parser(name, help=help)
        if graph:
            sp.add_argument("-i", "--input", required=True, help="graph file ('-' for stdin)")
        sp.add_argument("--format", choices=("json", "tsv"), default="json")
        sp.set_defaults(func=func)
        return sp

    sp = command("gen", cmd_gen, "write a family graph", graph=False)
    sp.add_argument("family", help="kind:params, e.g. kite:3,7")
    sp.add_argument("-o", "--output")

    sp = command("dem", cmd_dem, "dem number")
    sp.add_argument("--basis", action="store_true", help="also print the canonical basis")
    sp.add_argument("--greedy", action="store_true", help="greedy upper bound instead of exact search")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = command("em", cmd_em, "edges monitored by one vertex")
    sp.add_argument("-x", type=int, required=True)

    sp = command("verify", cmd_verify, "is a vertex set a DEM set")
    sp.add_argument("-M", type=_vertex_list, required=True)

    sp = command("restrict", cmd_restrict, "restricted dem on a subgraph")
    sp.add_argument("--sub-edges", required=True, help="graph file holding the subgraph's edges")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = command("perturb", cmd_perturb, "dem change for every single deletion")
    which = sp.add_mutually_exclusive_group(required=True)
    which.add_argument("--edges", action="store_true")
    which.add_argument("--vertices", action="store_true")
    sp.add_argument("-M", type=_vertex_list, default=None, help="monitor set to revalidate per edge")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = command("revalidate", cmd_revalidate, "does M survive the deletion of one edge")
    sp.add_argument("-M", type=_vertex_list, required=True)
    sp.add_argument("-e", type=_pair, required=True, metavar="U,V")

    sp = command("reproduce", cmd_reproduce, "run a check suite", graph=False)
    sp.add_argument("--suite", required=True, choices=SUITES + ("all",))
    sp.add_argument("--timings", action="store_true", help="add wall-clock seconds per case")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    kernels.set_threads(args.threads)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"demkit: {exc}", file=sys.stderr)
        return BUDGET
    except (UsageError, GraphError, MonitoringError, FamilyError, ValueError) as exc:
        print(f"demkit: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
