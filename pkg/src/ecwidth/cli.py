"""Command-line interface.

Exit codes: 0 solved, 1 validation failure, 2 parse error, 3 budget
refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__, fixtures
from .csp import CSPInstance, incidence_graph, run_csp
from .ecw import BudgetError, EcwResult, ecw_enumerate_oracle, ecw_exact, ecw_heuristic
from .edp import EDPInstance, run_edp
from .graph import DisconnectedGraphError, Graph, GraphError, ecw_of_tree
from .lcol import ListColoringInstance, run_list_coloring
from .mincca import MinCCAInstance, run_mincca
from .serialize import (
    ParseError,
    decomposition_from_doc,
    decomposition_to_doc,
    dump_instance,
    instance_to_doc,
    load_dimacs_graph,
    load_instance,
    tree_from_doc,
    tree_to_doc,
)
from .srti import SRTIInstance, acceptability_graph, run_maxsrti
from .treedecomp import tree_decomposition_from_ecw, validate_tree_decomposition

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def _load(path: str, want=None):
    try:
        if path.endswith(".col") or path.endswith(".dimacs"):
            obj = load_dimacs_graph(path)
        else:
            obj = load_instance(path)
    except (ParseError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    if want is not None and not isinstance(obj, want):
        print(f"error: expected a {want.__name__} file", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)
    return obj


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=1))
    else:
        for key, val in report.items():
            if key in ("format", "version"):
                continue
            print(f"{key}: {val}")


def _report(**fields) -> dict:
    return {"format": 1, "version": __version__, **fields}


def cmd_ecw(args) -> int:
    g = _load(args.input, Graph)
    start = time.perf_counter()
    try:
        if args.mode == "oracle":
            res = ecw_enumerate_oracle(g)
        elif args.mode == "heuristic":
            res = ecw_heuristic(g, seed=args.seed, iterations=args.iterations)
        else:
            res = _exact_per_component(g, args.budget)
    except BudgetError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    elapsed = time.perf_counter() - start
    _emit(_report(
        verdict=res.width, width=res.width, exact=res.exact,
        nodes_explored=res.nodes_explored, seed=args.seed,
        witness=[[v, p] for v, p in enumerate(res.witness.parent)
                 if p is not None],
        wall_time_s=round(elapsed, 6)), args.json)
    if args.out_tree:
        with open(args.out_tree, "w", encoding="utf-8") as fh:
            json.dump(tree_to_doc(res.witness), fh)
            fh.write("\n")
    return EXIT_OK


def _exact_per_component(g: Graph, budget) -> EcwResult:
    if g.is_connected():
        return ecw_exact(g, budget)
    from .graph import RootedSpanningTree
    width = 1
    exact = True
    nodes = 0
    parent: list[int | None] = [None] * g.n
    for comp in g.components():
        remap = sorted(comp)
        back = {i: v for i, v in enumerate(remap)}
        idx = {v: i for i, v in enumerate(remap)}
        sub = Graph(len(comp), [(idx[a], idx[b]) for a, b in g.edges
                                if a in idx and b in idx])
        res = ecw_exact(sub, budget)
        width = max(width, res.width)
        exact = exact and res.exact
        nodes += res.nodes_explored
        for v, p in enumerate(res.witness.parent):
            parent[back[v]] = None if p is None else back[p]
    roots = [v for v, p in enumerate(parent) if p is None]
    return EcwResult(width, RootedSpanningTree(g, parent, roots), exact, nodes)


def cmd_solve(args) -> int:
    inst = _load(args.input)
    expected = {"edp": EDPInstance, "lcol": ListColoringInstance,
                "csp": CSPInstance, "srti": SRTIInstance,
                "mincca": MinCCAInstance}[args.problem]
    if not isinstance(inst, expected):
        print(f"error: {args.input} is not a {args.problem} instance",
              file=sys.stderr)
        return EXIT_PARSE
    host = {
        "edp": lambda i: i.graph,
        "lcol": lambda i: i.graph,
        "csp": lambda i: incidence_graph(i)[0],
        "srti": acceptability_graph,
        "mincca": lambda i: i.shadow(),
    }[args.problem](inst)
    tree = None
    if args.tree:
        with open(args.tree, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        try:
            tree = tree_from_doc(doc, host)
        except ParseError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    elif host.is_connected() and host.n:
        # one width search up front so the report can carry the witness
        if host.n <= 12 and host.m <= 26:
            tree = ecw_exact(host).witness
        else:
            tree = ecw_heuristic(host).witness
    start = time.perf_counter()
    try:
        if args.problem == "edp":
            ok, stats = run_edp(inst, tree)
            verdict = "YES" if ok else "NO"
        elif args.problem == "lcol":
            ok, stats = run_list_coloring(inst, tree)
            verdict = "YES" if ok else "NO"
        elif args.problem == "csp":
            ok, stats = run_csp(inst, tree)
            verdict = "YES" if ok else "NO"
        elif args.problem == "srti":
            value, stats = run_maxsrti(inst, tree)
            verdict = "none" if value is None else value
        else:
            value, stats = run_mincca(inst, tree)
            verdict = "none" if value is None else value
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    elapsed = time.perf_counter() - start
    report = _report(verdict=verdict, width=stats.width,
                     max_table=stats.max_table,
                     wall_time_s=round(elapsed, 6))
    if tree is not None:
        report["witness"] = [[v, p] for v, p in enumerate(tree.parent)
                             if p is not None]
    if args.problem == "srti":
        value = None if verdict == "none" else verdict
        report["target"] = inst.target
        report["decision"] = (
            "YES" if value is not None and value >= inst.target else "NO")
    _emit(report, args.json)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        obj = _generate(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.out:
        dump_instance(obj, args.out)
    else:
        print(json.dumps(instance_to_doc(obj), indent=1))
    return EXIT_OK


def _generate(args):
    kind = args.family
    if kind == "ladder":
        return fixtures.ladder(args.size)[0]
    if kind == "gbt":
        return fixtures.glued_binary_trees(args.size)
    if kind == "random":
        return fixtures.random_graph(args.size, args.m, args.seed)
    if kind == "rand-edp":
        return fixtures.random_edp(args.size, args.m, args.k, args.seed)
    if kind == "rand-lcol":
        return fixtures.random_lists(args.size, args.m, args.k, args.seed)
    if kind == "rand-csp":
        return fixtures.random_csp(args.size, args.m, args.k, args.seed)
    if kind == "rand-srti":
        return fixtures.random_srti(args.size, args.seed)
    if kind == "rand-mincca":
        return fixtures.random_mincca(args.size, args.m, args.k, args.seed)
    raise AssertionError(kind)


def cmd_check_decomp(args) -> int:
    g = _load(args.graph, Graph)
    with open(args.decomp, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_PARSE
    try:
        td = decomposition_from_doc(doc)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ok, msg = validate_tree_decomposition(g, td)
    _emit(_report(valid=ok, width=td.width, detail=msg), args.json)
    return EXIT_OK if ok else EXIT_INVALID


def cmd_decompose(args) -> int:
    g = _load(args.input, Graph)
    try:
        res = _exact_per_component(g, args.budget)
    except BudgetError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    td = tree_decomposition_from_ecw(g, res.witness)
    print(json.dumps(decomposition_to_doc(td), indent=1))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ecwidth",
        description="Edge-cut width computations and spanning-tree DP solvers")
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("ecw", help="compute edge-cut width of a graph file")
    pe.add_argument("--input", required=True)
    pe.add_argument("--mode", choices=["exact", "heuristic", "oracle"],
                    default="exact")
    pe.add_argument("--budget", type=int, default=None,
                    help="node budget for exact mode")
    pe.add_argument("--seed", type=int, default=0)
    pe.add_argument("--iterations", type=int, default=1000)
    pe.add_argument("--out-tree", default=None,
                    help="write the witness tree to this JSON file")
    pe.add_argument("--json", action="store_true")
    pe.set_defaults(func=cmd_ecw)

    ps = sub.add_parser("solve", help="solve a problem instance file")
    ps.add_argument("problem", choices=["edp", "lcol", "csp", "srti", "mincca"])
    ps.add_argument("--input", required=True)
    ps.add_argument("--tree", default=None,
                    help="witness spanning-tree JSON; skips the width search")
    ps.add_argument("--json", action="store_true")
    ps.set_defaults(func=cmd_solve)

    pg = sub.add_parser("gen", help="generate instances deterministically")
    pg.add_argument("family", choices=["ladder", "gbt", "random", "rand-edp",
                                       "rand-lcol", "rand-csp", "rand-srti",
                                       "rand-mincca"])
    pg.add_argument("size", type=int)
    pg.add_argument("m", type=int, nargs="?", default=0,
                    help="edge/arc/constraint count where applicable")
    pg.add_argument("k", type=int, nargs="?", default=2,
                    help="demands/colors/arity knob where applicable")
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--out", default=None)
    pg.set_defaults(func=cmd_gen)

    pc = sub.add_parser("check-decomp", help="validate a tree decomposition")
    pc.add_argument("--graph", required=True)
    pc.add_argument("--decomp", required=True)
    pc.add_argument("--json", action="store_true")
    pc.set_defaults(func=cmd_check_decomp)

    pd = sub.add_parser("decompose",
                        help="emit a tree decomposition of width <= ecw")
    pd.add_argument("--input", required=True)
    pd.add_argument("--budget", type=int, default=None)
    pd.set_defaults(func=cmd_decompose)

    pb = sub.add_parser("bench", help="compare compiled and pure kernels")
    pb.add_argument("--rungs", type=int, default=5)
    pb.add_argument("--seed", type=int, default=7)
    pb.set_defaults(func=cmd_bench)
    return p


def cmd_bench(args) -> int:
    from .bench import run_benchmark
    run_benchmark(rungs=args.rungs, seed=args.seed)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = args.func(args)
    return code


if __name__ == "__main__":
    sys.exit(main())
