"""Command-line interface.

Graphs are read in the edge-list format ("p n m" then "e u v" lines; "-"
reads standard input). Colourings are JSON as written by TotalColouring.
Exit codes: 0 success, 1 a colouring failed verification, 2 bad input,
3 the exact search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import gadget as gadget_mod
from .caterpillar import PreconditionError, solve
from .colouring import ColouringError, TotalColouring, dense_elements, to_dot, total_m_degree, verify
from .exact import DEFAULT_CAP, BudgetExceeded, solve_exact
from .generators import FAMILIES, generate
from .graph import Graph, GraphError, format_edge_list, parse_edge_list, total_degree
from .partial import ConstructionError

EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


class InputError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _read_graph(path: str) -> Graph:
    try:
        return parse_edge_list(_read_text(path))
    except GraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _read_colouring(path: str) -> TotalColouring:
    try:
        return TotalColouring.from_json(_read_text(path))
    except ColouringError as exc:
        raise InputError(f"{path}: {exc}") from None


def _graph_dict(g: Graph) -> dict:
    return {"vertex_count": g.vertex_count, "edges": [list(e) for e in g.edges]}


def _emit(args, payload: dict, text: str, dot: str | None = None) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    elif args.dot and dot is not None:
        sys.stdout.write(dot)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    c = _read_colouring(args.colouring)
    try:
        report = verify(g, c)
    except ColouringError as exc:
        raise InputError(str(exc)) from None
    lines = [f"verdict {report.verdict.value}"] + [f"  {p}" for p in report.problems()]
    _emit(args, report.to_dict(), "\n".join(lines), to_dot(g, c))
    if not report.valid and not args.json:
        for p in report.problems():
            print(f"verify: {p}", file=sys.stderr)
    return 0 if report.valid else EXIT_INVALID


def cmd_mdegree(args) -> int:
    g = _read_graph(args.graph)
    try:
        m = total_m_degree(g)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    dense = dense_elements(g, m)
    payload = {
        "m_t": m,
        "dense": [{"element": repr(x), "total_degree": total_degree(g, x)} for x in dense],
    }
    text = f"m_t {m}\ndense " + " ".join(repr(x) for x in dense)
    _emit(args, payload, text, to_dot(g))
    return 0


def cmd_exact(args) -> int:
    g = _read_graph(args.graph)
    try:
        result = solve_exact(g, budget=args.budget, cap=args.cap)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    text = (
        f"phi_t {result.phi_t}\nnodes {result.nodes_explored}\n"
        f"refuted {' '.join(map(str, result.refuted)) or '-'}\n" + result.witness.to_json()
    )
    _emit(args, result.to_dict(), text, to_dot(g, result.witness))
    return 0


def cmd_caterpillar(args) -> int:
    g = _read_graph(args.graph)
    try:
        out = solve(g, allow_exact_fallback=args.fallback_exact, cap=args.cap, budget=args.budget)
    except (GraphError, PreconditionError) as exc:
        raise InputError(str(exc)) from None
    phi = "unknown" if out.phi_t is None else str(out.phi_t)
    text = f"phi_t {phi}\nmethod {out.method}\n"
    if out.colouring is not None:
        text += out.colouring.to_json()
    else:
        text += f"upper bound {out.certificate.get('upper_bound')}: {out.certificate.get('reason')}\n"
    _emit(args, out.to_dict(), text, to_dot(g, out.colouring))
    return 0


def cmd_generate(args) -> int:
    try:
        g = generate(args.family, args.params, seed=args.seed)
    except GraphError as exc:
        raise InputError(str(exc)) from None
    _emit(args, {"family": args.family, "params": args.params, "seed": args.seed, "graph": _graph_dict(g)},
          format_edge_list(g), to_dot(g))
    return 0


def cmd_reduce(args) -> int:
    g = _read_graph(args.graph)
    try:
        gd = gadget_mod.build_gadget(g)
    except gadget_mod.GadgetError as exc:
        raise InputError(str(exc)) from None
    lifted = None
    if args.with_colouring:
        try:
            lifted = gadget_mod.lift_colouring(gd, _read_colouring(args.with_colouring))
        except (gadget_mod.GadgetError, ColouringError) as exc:
            raise InputError(str(exc)) from None
    if args.sidecar:
        Path(args.sidecar).write_text(gd.sidecar_json())
    if lifted is not None and args.colouring_out:
        Path(args.colouring_out).write_text(lifted.to_json())
    labels = gd.labels()
    text = "".join(f"c name {vid} {label}\n" for vid, label in sorted(labels.items()))
    text += format_edge_list(gd.H)
    payload = {
        "graph": _graph_dict(gd.H),
        "names": gd.sidecar(),
        "colouring": None if lifted is None else lifted.to_dict(),
    }
    _emit(args, payload, text, to_dot(gd.H, lifted, labels))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="totalb", description="Total b-chromatic colourings.")
    common = argparse.ArgumentParser(add_help=False)
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", action="store_true", help="machine-readable output")
    out.add_argument("--dot", action="store_true", help="Graphviz output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a colouring; exit 0 iff total b-chromatic")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mdegree", parents=[common], help="total m-degree and dense elements")
    p.add_argument("graph")
    p.set_defaults(func=cmd_mdegree)

    p = sub.add_parser("exact", parents=[common], help="exact total b-chromatic number")
    p.add_argument("graph")
    p.add_argument("--budget", type=int, default=None, help="search node limit")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest element count accepted")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("caterpillar", parents=[common], help="constructive solver for caterpillars")
    p.add_argument("graph")
    p.add_argument("--fallback-exact", action="store_true", help="use the exact solver outside the proven cases")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_caterpillar)

    p = sub.add_parser("generate", parents=[common], help="instance generators: " + ", ".join(FAMILIES))
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("reduce", parents=[common], help="build the hardness gadget from a cubic bipartite graph")
    p.add_argument("graph")
    p.add_argument("--with-colouring", metavar="COLOURING", help="total 4-colouring of the input to lift")
    p.add_argument("--colouring-out", metavar="FILE", help="where to write the lifted colouring")
    p.add_argument("--sidecar", metavar="FILE", help="where to write the vertex naming map")
    p.set_defaults(func=cmd_reduce)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        return _fail(args, "InputError", str(exc), EXIT_INPUT)
    except BudgetExceeded as exc:
        return _fail(args, "BudgetExceeded", str(exc), EXIT_BUDGET)
    except ConstructionError as exc:
        return _fail(args, "ConstructionError", str(exc), EXIT_INPUT)


def _fail(args, kind: str, message: str, code: int) -> int:
    if getattr(args, "json", False):
        print(json.dumps({"error": {"type": kind, "message": message}}, indent=2))
    print(f"error: {message}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
