"""Command-line interface: analyze, tree, solve, verify, gen, and batch runs.

Exit codes: 0 success (verify: coloring accepted), 1 error or rejected
coloring, 2 unsupported graph shape. The ``CFC_BUDGET`` environment
variable overrides the exact-search step budget.
"""

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import checker, classify, families, formats, solver, trees
from .errors import CfcError, UnsupportedShapeError
from .graph import Graph, metrics


def _step_budget() -> int | None:
    raw = os.environ.get("CFC_BUDGET")
    if raw is None:
        return solver.DEFAULT_STEP_BUDGET
    return int(raw)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "graph6":
        return formats.parse_graph6(text.strip())
    return formats.parse_edge_list(text)


def _result_dict(res: classify.CfcResult) -> dict:
    out = {"lo": res.lo, "hi": res.hi, "method": res.method}
    if res.notes:
        out["notes"] = res.notes
    return out


def _format_result(name: str, res: classify.CfcResult) -> str:
    if res.exact:
        line = f"{name} = {res.lo} ({res.method})"
    else:
        line = f"{name} in [{res.lo}, {res.hi}] ({res.method})"
    if res.notes:
        line += f"  # {res.notes}"
    return line


def cmd_analyze(args) -> int:
    g = _load_graph(args.input, args.format)
    met = metrics(g)
    h = classify.h_value(g)
    budget = _step_budget()
    cfc = classify.classify_cfc(
        g, resolve=args.resolve, certificate=args.certificate, step_budget=budget
    )
    vcfc = classify.classify_vcfc(g, certificate=args.certificate, step_budget=budget)
    if args.json:
        payload = {
            "n": g.n,
            "m": g.m,
            "diameter": met.diameter,
            "radius": met.radius,
            "h": h,
            "cfc": _result_dict(cfc),
            "vcfc": _result_dict(vcfc),
        }
        if cfc.certificate is not None:
            payload["certificate"] = [[u, v, c] for (u, v), c in sorted(cfc.certificate.items())]
        if vcfc.certificate is not None:
            payload["vcfc_certificate"] = [[v, c] for v, c in sorted(vcfc.certificate.items())]
        print(json.dumps(payload, indent=2))
        return 0
    if args.dot:
        print(formats.to_dot(g, edge_coloring=cfc.certificate), end="")
        return 0
    print(f"n={g.n} m={g.m} diameter={met.diameter} radius={met.radius} h={h}")
    print(_format_result("cfc", cfc))
    print(_format_result("vcfc", vcfc))
    if cfc.certificate is not None:
        print("cfc coloring:")
        print(formats.emit_edge_coloring(cfc.certificate), end="")
    if vcfc.certificate is not None:
        print("vcfc coloring:")
        print(formats.emit_vertex_coloring(vcfc.certificate), end="")
    return 0


def cmd_tree(args) -> int:
    if args.p:
        degrees = [int(x) for x in args.p.split(",") if x]
        g = families.diam4_tree(degrees, args.l)
    elif args.input:
        g = _load_graph(args.input, args.format)
    else:
        print("error: provide --p or an input file", file=sys.stderr)
        return 1
    met = metrics(g)
    value = trees.cfc_tree(g)
    print(f"n={g.n} diameter={met.diameter}")
    if met.diameter == 4:
        shape = trees.diam4_params(g)
        b, offsets = trees._diam4_b(shape.degrees)
        print(f"k={shape.k} l={shape.pendant_count} d(u)={shape.center_degree}")
        print(f"p={list(shape.degrees)}")
        print(f"c={offsets}")
        print(f"b={b}")
    elif g.n >= 2:
        print(f"max degree={max(g.degree(v) for v in range(g.n))}")
    print(f"cfc = {value}")
    coloring = trees.construct_tree_coloring(g)
    if coloring:
        print("coloring:")
        print(formats.emit_edge_coloring(coloring), end="")
    return 0


def cmd_solve(args) -> int:
    g = _load_graph(args.input, args.format)
    budget = _step_budget()
    if args.mode == "cfc":
        report = solver.exact_cfc(
            g, args.min_colors, args.max_colors, step_budget=budget
        )
    else:
        report = solver.exact_vcfc(
            g, max(args.min_colors, 2), args.max_colors, step_budget=budget
        )
    print(f"{args.mode} = {report.value}")
    print(f"states examined: {report.states_examined}")
    print(f"elapsed: {report.elapsed:.3f}s")
    print("certificate:")
    if args.mode == "cfc":
        print(formats.emit_edge_coloring(report.certificate), end="")
    else:
        print(formats.emit_vertex_coloring(report.certificate), end="")
    return 0


def cmd_verify(args) -> int:
    g = _load_graph(args.graph, args.format)
    text = _read_text(args.coloring)
    if args.mode == "cfc":
        coloring = formats.parse_edge_coloring(text)
        failing = checker.failing_pair_edges(g, coloring)
    else:
        coloring = formats.parse_vertex_coloring(text)
        failing = checker.failing_pair_vertices(g, coloring)
    if failing is None:
        print("PASS")
        return 0
    print(f"FAIL: no conflict-free path between {failing[0]} and {failing[1]}")
    return 1


def cmd_gen(args) -> int:
    coloring = None
    name = args.family
    params = [int(x) for x in args.params]
    if name == "star":
        g = families.star(*params)
    elif name == "double-star":
        g = families.double_star(*params)
    elif name == "diam4-tree":
        degrees = [int(x) for x in args.params[0].split(",")]
        pendants = int(args.params[1]) if len(args.params) > 1 else 0
        g = families.diam4_tree(degrees, pendants)
    elif name == "exception":
        g = families.diam3_exception_graph()
    elif name == "two-color":
        g, coloring = families.two_color_family(*params)
    elif name == "three-color":
        g = families.three_color_family(*params)
    else:  # pragma: no cover - argparse choices guard this
        raise ValueError(f"unknown family {name}")
    if args.format == "graph6":
        payload = formats.emit_graph6(g).decode("ascii") + "\n"
    else:
        payload = formats.emit_edge_list(g)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(payload)
    else:
        print(payload, end="")
    if coloring is not None:
        coloring_text = formats.emit_edge_coloring(coloring)
        if args.coloring_out:
            with open(args.coloring_out, "w", encoding="ascii") as fh:
                fh.write(coloring_text)
        elif args.output:
            with open(args.output + ".coloring", "w", encoding="ascii") as fh:
                fh.write(coloring_text)
        else:
            print("coloring:")
            print(coloring_text, end="")
    return 0


def _batch_one(task: tuple[int, str, bool, int | None]) -> dict:
    index, line, run_solver, budget = task
    record: dict = {"index": index, "graph6": line}
    start = time.perf_counter()
    try:
        g = formats.parse_graph6(line)
        met = metrics(g)
        record.update(n=g.n, m=g.m, diameter=met.diameter)
        record["h"] = classify.h_value(g)
        cfc = classify.classify_cfc(g, step_budget=budget)
        vcfc = classify.classify_vcfc(g, step_budget=budget)
        record["cfc"] = _result_dict(cfc)
        record["vcfc"] = _result_dict(vcfc)
        if run_solver:
            sc = solver.exact_cfc(g, step_budget=budget)
            sv = solver.exact_vcfc(g, step_budget=budget)
            record["solver_cfc"] = sc.value
            record["solver_vcfc"] = sv.value
            record["agree"] = (
                cfc.lo <= sc.value <= cfc.hi and vcfc.lo <= sv.value <= vcfc.hi
            )
    except CfcError as exc:
        record["error"] = str(exc)
    record["elapsed"] = time.perf_counter() - start
    return record


def cmd_batch(args) -> int:
    budget = _step_budget()
    lines = [ln.strip() for ln in _read_text(args.corpus).splitlines() if ln.strip()]
    tasks = [(i, line, args.solve, budget) for i, line in enumerate(lines)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_batch_one, tasks))
    else:
        results = [_batch_one(t) for t in tasks]
    results.sort(key=lambda r: r["index"])
    errors = sum(1 for r in results if "error" in r)
    checked = sum(1 for r in results if "agree" in r)
    mismatches = [r["index"] for r in results if not r.get("agree", True)]
    report = {
        "total": len(results),
        "ok": len(results) - errors,
        "errors": errors,
        "agreement": {
            "checked": checked,
            "matches": checked - len(mismatches),
            "mismatches": mismatches,
        },
        "results": results,
    }
    payload = json.dumps(report, indent=2)
    if args.report:
        with open(args.report, "w", encoding="ascii") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    print(
        f"batch: {report['ok']}/{report['total']} analyzed, "
        f"{errors} errors, {len(mismatches)} disagreements",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cfcgraph",
        description="Conflict-free (vertex-)connection numbers of small-diameter graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format",
            choices=("edgelist", "graph6"),
            default="edgelist",
            help="input graph format (default: edgelist)",
        )

    p = sub.add_parser("analyze", help="classify cfc and vcfc of a connected graph")
    p.add_argument("input", help="graph file, or - for stdin")
    add_format(p)
    p.add_argument("--resolve", action="store_true", help="resolve open intervals by exact search")
    p.add_argument("--certificate", action="store_true", help="attach validated colorings")
    p.add_argument("--json", action="store_true", help="emit a JSON result object")
    p.add_argument("--dot", action="store_true", help="emit DOT output")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("tree", help="closed-form cfc of a tree with diameter at most 4")
    p.add_argument("input", nargs="?", help="tree file (alternative to --p)")
    add_format(p)
    p.add_argument("--p", help="comma-separated branch degrees, e.g. 4,2")
    p.add_argument("--l", type=int, default=0, help="pendant count at the center")
    p.set_defaults(func=cmd_tree)

    p = sub.add_parser("solve", help="exact search for cfc or vcfc")
    p.add_argument("input")
    add_format(p)
    p.add_argument("--mode", choices=("cfc", "vcfc"), default="cfc")
    p.add_argument("--min-colors", type=int, default=1)
    p.add_argument("--max-colors", type=int, default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring file against a graph")
    p.add_argument("graph")
    p.add_argument("coloring")
    add_format(p)
    p.add_argument("--mode", choices=("cfc", "vcfc"), default="cfc")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a named family member")
    p.add_argument(
        "family",
        choices=("star", "double-star", "diam4-tree", "exception", "two-color", "three-color"),
    )
    p.add_argument("params", nargs="*", help="family parameters")
    p.add_argument(
        "--format",
        choices=("edgelist", "graph6"),
        default="edgelist",
        help="output format (default: edgelist)",
    )
    p.add_argument("-o", "--output", help="write the graph here instead of stdout")
    p.add_argument("--coloring-out", help="write the shipped coloring here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("batch", help="classify every graph6 line of a corpus file")
    p.add_argument("corpus", help="file of graph6 lines, or - for stdin")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--report", help="write the JSON report here")
    p.add_argument("--solve", action="store_true", help="also run the exact solver and compare")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnsupportedShapeError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 2
    except (CfcError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
