"""Command line interface: gen, spectrum, bounds, exact, table.

Exit codes: 0 success, 1 module error (the error class name is printed),
2 argument parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import bound_report, certified_floor, srg_hoffman
from .errors import AlphaBoundError, BadParams, TooLarge, UnknownFamily
from .exact import DEFAULT_NODE_BUDGET, max_independent_set
from .finite_geometry import (er_graph, field_for_order, measure_srg,
                              orthogonality_graph, predicted_derived_srg)
from .graphs import (Graph, cartesian_product, cone, derived_graph,
                     format_edge_list, generate_family, parse_edge_list)
from .spectral import laplacian_spectrum

ORACLE_SIZE_LIMIT = 60

TABLE_HEADER = ("id,n,m,Delta,delta,lambda_max,"
                "hoffman,hoffman_floor,gn,gn_floor,relative,relative_floor,"
                "alpha,sharp,srg_expected,srg_measured,"
                "viz,hofone,hoftwo,relprod,vizing")


def _read_graph(path: str) -> Graph:
    return parse_edge_list(Path(path).read_text())


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(v: float) -> str:
    return f"{v:.9f}"


# ---------------------------------------------------------------------------
# gen

_INT_FAMILIES = {
    "path": 1, "cycle": 1, "complete": 1, "empty": 1, "star": 1,
    "complete_bipartite": 2, "complete_split": 2, "er": 1, "ortho": 2,
}


def _cmd_gen(args) -> int:
    family = args.family.replace("-", "_")
    params = args.params
    if family == "cone":
        if len(params) != 1:
            raise BadParams("cone takes one edge-list file")
        g = cone(_read_graph(params[0]))
    elif family == "cartesian":
        if len(params) != 2:
            raise BadParams("cartesian takes two edge-list files")
        g = cartesian_product(_read_graph(params[0]), _read_graph(params[1]))
    elif family in _INT_FAMILIES:
        arity = _INT_FAMILIES[family]
        if len(params) != arity:
            raise BadParams(f"{args.family} takes {arity} integer parameter(s)")
        try:
            ints = [int(p) for p in params]
        except ValueError:
            raise BadParams(f"parameters for {args.family} must be integers")
        if family == "er":
            g = er_graph(ints[0])
        elif family == "ortho":
            g = orthogonality_graph(field_for_order(ints[1]), ints[0])
        else:
            g = generate_family(family, ints)
    else:
        raise UnknownFamily(f"unknown family {args.family!r}")
    _emit(format_edge_list(g), args.output)
    return 0


# ---------------------------------------------------------------------------
# spectrum / bounds / exact

def _cmd_spectrum(args) -> int:
    g = _read_graph(args.file)
    spec = laplacian_spectrum(g)
    if args.json:
        print(json.dumps([round(v, 12) for v in spec.values]))
    else:
        for v in spec.values:
            print(_fmt(v))
    return 0


def _cmd_bounds(args) -> int:
    g = _read_graph(args.file)
    report = bound_report(g, lambda_mode=args.lam, recursive=args.recursive)
    if args.json:
        print(report.to_json())
        return 0
    print(f"n {report.n}")
    print(f"m {report.m}")
    print(f"Delta {report.Delta}")
    print(f"delta {report.delta}")
    print(f"lambda {_fmt(report.lam)} ({'exact' if report.lambda_is_exact else 'upper'})")
    print(f"alpha_prime {report.alpha_prime}")
    floors = report.floors()
    for name in ("hoffman", "relative", "gn", "basic"):
        print(f"{name} {_fmt(report.bounds[name])} floor {floors[name]}")
    if args.recursive and report.trace:
        print("trace:")
        for lvl in report.trace:
            print(f"  {lvl.method} n={lvl.order} m={lvl.size} "
                  f"Delta={lvl.Delta} delta={lvl.delta} lambda={_fmt(lvl.lam)} "
                  f"alpha_prime={lvl.alpha_prime} value={_fmt(lvl.value)}")
    return 0


def _cmd_exact(args) -> int:
    g = _read_graph(args.file)
    if g.order > ORACLE_SIZE_LIMIT and not args.force_exact:
        raise TooLarge(f"{g.order} vertices exceed the oracle limit "
                       f"{ORACLE_SIZE_LIMIT}; pass --force-exact to override")
    result = max_independent_set(g, node_budget=args.node_limit)
    if result.exhausted:
        print(f"alpha {result.alpha}")
    else:
        print(f"alpha_lower_bound {result.alpha}")
    print("witness " + " ".join(str(v) for v in result.witness))
    print(f"nodes {result.nodes_explored}")
    print(f"exhausted {'true' if result.exhausted else 'false'}")
    return 0


# ---------------------------------------------------------------------------
# table

def _table_instances(selector: str):
    """Yield (id, graph, kind) rows for one selector, in a fixed order."""
    if selector == "paths":
        for n in range(3, 51):
            yield f"P{n}", generate_family("path", [n]), "plain"
    elif selector == "cones":
        bases = [("C4", generate_family("cycle", [4])),
                 ("C5", generate_family("cycle", [5])),
                 ("C6", generate_family("cycle", [6])),
                 ("K23", generate_family("complete_bipartite", [2, 3]))]
        for name, base in bases:
            yield f"cone_{name}", cone(base), "plain"
    elif selector == "er":
        for q in (2, 3, 4, 5):
            yield f"ER{q}", er_graph(q), "plain"
    elif selector == "ortho":
        for n, q in ((5, 2), (4, 3)):
            g = orthogonality_graph(field_for_order(q), n)
            yield f"O{n}_{q}", g, ("ortho", q, n)
    elif selector == "products":
        path4 = generate_family("path", [4])
        pairs = [
            ("P2xP2", generate_family("path", [2]), generate_family("path", [2])),
            ("P2xP3", generate_family("path", [2]), generate_family("path", [3])),
            ("P3xP3", generate_family("path", [3]), generate_family("path", [3])),
            ("P4xP4", path4, path4),
            ("C5xP4", generate_family("cycle", [5]), path4),
            ("K3xK3", generate_family("complete", [3]), generate_family("complete", [3])),
            ("CS33xP4", generate_family("complete_split", [3, 3]), path4),
        ]
        for name, a, b in pairs:
            yield name, cartesian_product(a, b), ("product", a, b)
    else:
        raise BadParams(f"unknown table selector {selector!r}")


def _oracle_alpha(g: Graph) -> int | None:
    if g.order > ORACLE_SIZE_LIMIT:
        return None
    result = max_independent_set(g)
    return result.alpha if result.exhausted else None


def _srg_cell(p) -> str:
    return f"{p.v}/{p.k}/{p.lam}/{p.mu}" if p is not None else "-"


def _table_row(name: str, g: Graph, kind) -> str:
    from .bounds import product_bounds, vizing_lower
    from .exact import max_independent_set as mis

    report = bound_report(g, lambda_mode="exact", recursive=True)
    alpha = _oracle_alpha(g)
    floors = report.floors()
    sharp = "-" if alpha is None else ("yes" if floors["relative"] == alpha else "no")
    srg_expected = srg_measured = "-"
    viz = hofone = hoftwo = relprod = vizing = "-"
    if isinstance(kind, tuple) and kind[0] == "ortho":
        _, q, n = kind
        srg_expected = _srg_cell(predicted_derived_srg(q, n))
        srg_measured = _srg_cell(measure_srg(derived_graph(g)[0]))
    elif isinstance(kind, tuple) and kind[0] == "product":
        _, a, b = kind
        alpha_a = mis(a).alpha
        alpha_b = mis(b).alpha
        alpha_da = mis(derived_graph(a)[0]).alpha
        alpha_db = mis(derived_graph(b)[0]).alpha
        pb = product_bounds(a, b, alpha_a, alpha_b, alpha_da, alpha_db)
        viz = str(pb.viz)
        hofone, hoftwo, relprod = _fmt(pb.hofone), _fmt(pb.hoftwo), _fmt(pb.relprod)
        vizing = str(vizing_lower(a, b, alpha_a, alpha_b))
    cells = [
        name, str(report.n), str(report.m), str(report.Delta), str(report.delta),
        _fmt(report.lam),
        _fmt(report.bounds["hoffman"]), str(floors["hoffman"]),
        _fmt(report.bounds["gn"]), str(floors["gn"]),
        _fmt(report.bounds["relative"]), str(floors["relative"]),
        str(alpha) if alpha is not None else "-", sharp,
        srg_expected, srg_measured,
        viz, hofone, hoftwo, relprod, vizing,
    ]
    return ",".join(cells)


SELECTORS = ("paths", "cones", "er", "ortho", "products")


def reproduce_tables(selector: str) -> str:
    """CSV (deterministic byte-for-byte) for one selector or 'all'."""
    selectors = SELECTORS if selector == "all" else (selector,)
    rows = [TABLE_HEADER]
    for sel in selectors:
        for name, g, kind in _table_instances(sel):
            rows.append(_table_row(name, g, kind))
    return "\n".join(rows) + "\n"


def _cmd_table(args) -> int:
    _emit(reproduce_tables(args.selector), args.output)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphabound",
        description="Spectral upper bounds on the independence number")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="generate a graph as an edge list")
    p.add_argument("family",
                   help="path|cycle|complete|empty|star n; "
                        "complete-bipartite a b; complete-split m s; er q; "
                        "ortho n q; cone FILE; cartesian FILE FILE "
                        "(star n = n vertices: center plus n-1 leaves)")
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("spectrum", help="Laplacian eigenvalues of a graph")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("bounds", help="independence-number upper bounds")
    p.add_argument("file")
    p.add_argument("--lambda", dest="lam", choices=("exact", "upper"),
                   default="exact")
    p.add_argument("--recursive", action="store_true",
                   help="certify alpha_prime recursively on derived graphs")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("exact", help="exact independence number (small graphs)")
    p.add_argument("file")
    p.add_argument("--node-limit", type=int, default=DEFAULT_NODE_BUDGET)
    p.add_argument("--force-exact", action="store_true",
                   help=f"run even above {ORACLE_SIZE_LIMIT} vertices")
    p.set_defaults(fn=_cmd_exact)

    p = sub.add_parser("table", help="benchmark tables as CSV")
    p.add_argument("selector", choices=SELECTORS + ("all",))
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_table)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except AlphaBoundError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
