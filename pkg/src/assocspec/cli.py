"""Command-line front end.

Exit codes: 0 success, 1 invalid request (e.g. witness for an
antiassociative graph), 2 usage error, 3 parse error, 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from typing import Sequence

from . import formulas
from .algebra import DEFAULT_MAX_HOMS, homomorphisms
from .classify import classify_undirected, is_antiassociative, is_associative
from .digraph import Digraph, parse_digraph
from .errors import (BracketingSyntaxError, BudgetExceeded, GraphFormatError,
                     InvalidStructureError)
from .spectrum import fine_spectrum, spectrum
from .trees import (DEFAULT_MAX_TREES, bracketing_to_dfs, dfs_to_bracketing, dfs_to_dyck,
                    enumerate_dfs_trees, format_bracketing, parse_bracketing)

EXIT_INVALID, EXIT_USAGE, EXIT_PARSE, EXIT_BUDGET = 1, 2, 3, 4

log = logging.getLogger("assocspec")


class _ParseFailure(Exception):
    pass


def _load_graph(path: str) -> Digraph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _ParseFailure(f"cannot read graph file {path!r}: {exc}") from exc
    return parse_digraph(text)


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def cmd_spectrum(args, out) -> int:
    g = _load_graph(args.graph)
    res = spectrum(g, args.n, method=args.method, max_trees=args.max_trees,
                   max_homs=args.max_homs)
    out.write(res.to_csv() if args.csv else res.to_json() + "\n")
    return 0


def cmd_fine(args, out) -> int:
    g = _load_graph(args.graph)
    classes = fine_spectrum(g, args.n, args.max_trees, args.max_homs)
    rows = [{
        "representative": ",".join(map(str, c[0].depths)),
        "term": format_bracketing(dfs_to_bracketing(c[0])),
        "size": len(c),
        "members": [",".join(map(str, t.depths)) for t in c],
    } for c in classes]
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["class", "representative", "term", "size", "members"])
        for i, r in enumerate(rows):
            w.writerow([i, r["representative"], r["term"], r["size"], " ".join(r["members"])])
    else:
        _emit_json({"n": args.n, "s_n": len(classes), "classes": rows}, out)
    return 0


def cmd_identity(args, out) -> int:
    g = _load_graph(args.graph)
    t, u = parse_bracketing(args.t), parse_bracketing(args.u)
    if t.size != u.size:
        raise InvalidStructureError(f"terms have different sizes ({t.size} vs {u.size})")
    a = homomorphisms(bracketing_to_dfs(t), g, args.max_homs)
    b = homomorphisms(bracketing_to_dfs(u), g, args.max_homs)
    ok = a == b
    if args.json:
        _emit_json({"t": format_bracketing(t), "u": format_bracketing(u),
                    "satisfied": ok, "hom_t": len(a), "hom_u": len(b)}, out)
    else:
        verdict = "SATISFIED" if ok else "NOT SATISFIED"
        out.write(f"{verdict} (|Hom(G(t),G)|={len(a)}, |Hom(G(u),G)|={len(b)})\n")
    return 0


def cmd_classify(args, out) -> int:
    g = _load_graph(args.graph)
    report = is_antiassociative(g, max_homs=args.max_homs)
    result = {
        "vertices": list(g.labels),
        "associative": is_associative(g),
        "antiassociative": report.antiassociative,
        "evidence": report.to_dict(),
    }
    if g.is_symmetric():
        uc = classify_undirected(g)
        result["undirected"] = {
            "class": uc.kind.value,
            "components": [{"vertices": [g.labels[v] for v in comp], "shape": tag}
                           for comp, tag in uc.components],
        }
    _emit_json(result, out)
    return 0


def cmd_witness(args, out) -> int:
    g = _load_graph(args.graph)
    report = is_antiassociative(g, verify_witness=args.verify, max_homs=args.max_homs)
    if report.antiassociative:
        raise InvalidStructureError(
            "graph is antiassociative; it satisfies no nontrivial bracketing identity")
    t, u = report.witness
    out.write(f"{format_bracketing(t)} = {format_bracketing(u)}\n")
    if args.verify:
        out.write(f"verified: {report.witness_verified}\n")
    return 0


def cmd_enumerate(args, out) -> int:
    render = {
        "zag": lambda T: ",".join(map(str, T.depths)),
        "dyck": dfs_to_dyck,
        "term": lambda T: format_bracketing(dfs_to_bracketing(T)),
    }[args.as_]
    for T in enumerate_dfs_trees(args.n, args.max_trees):
        out.write(render(T) + "\n")
    return 0


def _table1(args) -> tuple[list[str], list[list]]:
    sizes = list(range(1, args.max_n + 1))
    header = ["h"] + [f"n={n}" for n in sizes]
    rows = [[h] + [formulas.bounded_height_count(h, n) for n in sizes]
            for h in range(args.min_h, args.max_h + 1)]
    return header, rows


def _table2(args) -> tuple[list[str], list[list]]:
    sizes = list(range(1, args.max_n + 1))
    header = ["case", "edges", "formula"] + [f"s_{n}" for n in sizes] + ["matches"]
    rows = []
    for name, edges, formula in formulas.TWO_VERTEX_CASES:
        g = formulas.two_vertex_graph(name)
        got = spectrum(g, args.max_n, max_trees=args.max_trees,
                       max_homs=args.max_homs).values
        want = formulas.two_vertex_spectrum(name).values(args.max_n)
        es = " ".join(f"{'uv'[a]}{'uv'[b]}" for a, b in sorted(edges))
        rows.append([name, es, formula] + got + [got == want])
    return header, rows


def cmd_table(args, out) -> int:
    header, rows = (_table1 if args.which == "T1" else _table2)(args)
    if args.json:
        _emit_json([dict(zip(header, r)) for r in rows], out)
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
    return 0


def cmd_formulas(args, out) -> int:
    fam, p = args.family, args.param
    if fam == "path":
        f = formulas.path_family(p)
    elif fam == "path-loop":
        f = formulas.path_family(p, final_loop=True)
    elif fam == "cycle":
        f = formulas.cycle_family(p)
    elif fam == "two-vertex":
        f = formulas.two_vertex_spectrum(args.case)
    elif fam == "three-vertex":
        f = formulas.three_vertex_special_spectrum(args.case)
    elif fam == "bounded-height":
        f = formulas.ClosedFormSpectrum(f"T_{p}", "DP", lambda n: formulas.bounded_height_count(p, n))
    else:
        raise AssertionError(fam)
    vals = f.values(args.n)
    if args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "value"])
        w.writerows(enumerate(vals, start=1))
    else:
        _emit_json({"family": f.family, "formula": f.formula,
                    "values": [{"n": n, "value": v} for n, v in enumerate(vals, start=1)]}, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="assocspec", description="Associative spectra of graph algebras.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def budgets(p):
        p.add_argument("--max-trees", type=int, default=DEFAULT_MAX_TREES)
        p.add_argument("--max-homs", type=int, default=DEFAULT_MAX_HOMS)

    def graph(p):
        p.add_argument("-g", "--graph", required=True, help="edge-list file ('-' for stdin)")

    p = sub.add_parser("spectrum", help="s_1..s_N")
    graph(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=["hom", "table", "auto"], default="hom")
    p.add_argument("--csv", action="store_true")
    budgets(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("fine", help="classes of the fine spectrum at size N")
    graph(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    budgets(p)
    p.set_defaults(func=cmd_fine)

    p = sub.add_parser("identity", help="check a bracketing identity t = u")
    graph(p)
    p.add_argument("-t", required=True)
    p.add_argument("-u", required=True)
    p.add_argument("--json", action="store_true")
    budgets(p)
    p.set_defaults(func=cmd_identity)

    p = sub.add_parser("classify", help="associativity and antiassociativity verdicts")
    graph(p)
    budgets(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("witness", help="a nontrivial identity the graph satisfies")
    graph(p)
    p.add_argument("--no-verify", dest="verify", action="store_false")
    budgets(p)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("enumerate", help="list the bracketings of size N")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--as", dest="as_", choices=["zag", "dyck", "term"], default="zag")
    budgets(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("table", help="reproduce the bounded-height or two-vertex table")
    p.add_argument("--which", choices=["T1", "T2"], required=True)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--min-h", type=int, default=2)
    p.add_argument("--max-h", type=int, default=5)
    p.add_argument("--json", action="store_true")
    budgets(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("formulas", help="evaluate a closed-form spectrum")
    p.add_argument("--family", required=True, choices=[
        "path", "path-loop", "cycle", "two-vertex", "three-vertex", "bounded-height"])
    p.add_argument("--param", type=int, default=1, help="path length, cycle length or height")
    p.add_argument("--case", default=None, help="case name for two-/three-vertex families")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_formulas)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s", stream=sys.stderr)
    if args.command == "table" and args.max_n is None:
        args.max_n = 15 if args.which == "T1" else 7
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
        print("error: -n must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "formulas" and args.family in ("two-vertex", "three-vertex") and not args.case:
        print("error: --case is required for this family", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, out)
    except (GraphFormatError, BracketingSyntaxError, _ParseFailure) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidStructureError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())
