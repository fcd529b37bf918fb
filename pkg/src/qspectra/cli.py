"""Command-line interface.

Subcommands: analyze, family, bounds, table1, table2, verify. Exit codes:
0 success, 1 usage error, 2 input parse error, 3 verification violations or
table mismatch. Text output prints values to four decimals (banker's
rounding); --json emits the canonical sorted-key rendering instead.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import asdict

from .bounds import all_bounds
from .energy import energies, gamma_sequence
from .graph_core import Graph, build_family, emit_edgelist, emit_graph6, parse_edgelist, parse_graph6
from .reports import (
    TableReport,
    analyze_report,
    render_json,
    reproduce_table1,
    reproduce_table2,
    table_report_dict,
    verify_exhaustive,
    verify_report,
)
from .spectral import BACKEND
from . import tolerances

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_VIOLATIONS = 3


class ParseInputError(ValueError):
    """Malformed graph input (graph6 text, edge-list file)."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; this interface reserves 2
    # for input parse errors, so usage errors are remapped to 1
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_graph_input(p: _Parser) -> None:
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--graph6", metavar="TEXT",
                       help="graph in graph6 encoding")
    group.add_argument("--edgelist", metavar="FILE",
                       help="edge-list file ('-' for stdin): first a vertex "
                            "count line, then one 'u v' pair per line")
    group.add_argument("--family", nargs="+", metavar=("KIND", "PARAM"),
                       help="construct a named family, e.g. --family prism 5")


def _graph_from_args(args) -> Graph:
    if args.graph6 is not None:
        try:
            return parse_graph6(args.graph6)
        except ValueError as exc:
            raise ParseInputError(str(exc)) from exc
    if args.edgelist is not None:
        try:
            if args.edgelist == "-":
                text = sys.stdin.read()
            else:
                with open(args.edgelist, "r", encoding="utf-8") as fh:
                    text = fh.read()
        except OSError as exc:
            raise ParseInputError(f"cannot read {args.edgelist}: {exc}") from exc
        try:
            return parse_edgelist(text)
        except ValueError as exc:
            raise ParseInputError(str(exc)) from exc
    kind, *params = args.family
    return build_family(kind, params)   # ValueError here is a usage error


def _fmt(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return f"{value:.4f}"
    return str(value)


def _print_grid(headers: list[str], rows: list[list[str]]) -> None:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    def line(cells):
        return "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip()
    print(line(headers))
    print(line(["-" * w for w in widths]))
    for row in rows:
        print(line(row))


# -- subcommands ----------------------------------------------------------------------

def analyze_command(args) -> int:
    g = _graph_from_args(args)
    report = analyze_report(g)
    if args.json:
        sys.stdout.write(render_json(report))
        return EXIT_OK
    gr, st, sp = report["graph"], report["structure"], report["spectra"]
    print(f"graph: n={gr['n']} m={gr['m']} graph6={gr['graph6']}")
    ds = report["degree_stats"]
    print(f"degrees: min={ds['min_degree']} max={ds['max_degree']} "
          f"average={_fmt(ds['average_degree'])} zagreb_m1={ds['zagreb_m1']}")
    shape = "regular" if st["is_regular"] else "irregular"
    if st["is_regular"]:
        shape += f"({st['regularity_degree']})"
    print(f"structure: {'connected' if st['is_connected'] else 'disconnected'} "
          f"{shape} {'bipartite' if st['is_bipartite'] else 'non-bipartite'} "
          f"components={st['component_count']}")
    solver = sp["signless_laplacian"]["solver"]
    print(f"solver: backend={solver['backend']} sweeps={solver['sweeps']} "
          f"converged={_fmt(solver['converged'])} "
          f"error_bound={solver['error_bound']:.3e}")
    for key, tag in (("adjacency", "A"), ("laplacian", "L"),
                     ("signless_laplacian", "Q")):
        vals = " ".join(_fmt(v) for v in sp[key]["values"])
        print(f"spectrum[{tag}]: {vals}")
    gam = report["gamma"]
    print(f"gamma: {' '.join(_fmt(v) for v in gam['values'])} "
          f"(mean={_fmt(gam['mean'])} min_is_zero={_fmt(gam['min_is_zero'])})")
    en = report["energies"]
    print(f"energies: E={_fmt(en['adjacency_energy'])} "
          f"LE={_fmt(en['laplacian_energy'])} "
          f"QE={_fmt(en['signless_laplacian_energy'])}")
    bad = [c for c in report["lemma_checks"]
           if (c["applicable"] and c["holds"] is False) or c["consistent"] is False]
    print(f"lemma checks: {len(report['lemma_checks'])} run, "
          f"{'all hold' if not bad else f'{len(bad)} FAILED'}")
    pat = report["q_pattern"]
    if pat["pattern_found"]:
        print(f"q-pattern: {pat['complete_copies']} complete + "
              f"{pat['crown_copies']} crown copies at degree {pat['degree']} "
              f"(structure verified: {_fmt(pat['structure_verified'])})")
    else:
        print(f"q-pattern: none ({pat['reason']})")
    srg = report["srg"]
    if srg["is_srg"]:
        print(f"srg: yes degree={srg['degree']} adjacent_common="
              f"{srg['adjacent_common']} nonadjacent_common="
              f"{srg['nonadjacent_common']} equal_counts={_fmt(srg['is_S_nr'])}")
    else:
        print(f"srg: no ({srg['reason']})")
    _print_bounds_grid(report["bounds"])
    return EXIT_OK


def _print_bounds_grid(bound_dicts) -> None:
    headers = ["bound", "dir", "value", "gap", "tight", "verdict"]
    rows = []
    for b in bound_dicts:
        if b["applicable"]:
            d = b["diagnosis"]
            rows.append([b["bound_id"], b["direction"], _fmt(b["value"]),
                         _fmt(b["gap"]), _fmt(d["tight"]), d["verdict"]])
        else:
            rows.append([b["bound_id"], b["direction"], "-", "-", "-",
                         f"n/a: {b['reason']}"])
    _print_grid(headers, rows)


def family_command(args) -> int:
    kind, *params = args.spec
    g = build_family(kind, params)
    if args.json:
        payload = {
            "kind": kind,
            "params": [str(p) for p in params],
            "n": g.n,
            "m": g.m,
            "graph6": emit_graph6(g),
            "degrees": list(g.degrees),
            "edges": [list(e) for e in g.edges],
        }
        sys.stdout.write(render_json(payload))
        return EXIT_OK
    print(emit_graph6(g))
    if args.edges:
        sys.stdout.write(emit_edgelist(g))
    return EXIT_OK


def bounds_command(args) -> int:
    g = _graph_from_args(args)
    results = all_bounds(g)
    qe = energies(g).signless_laplacian_energy
    if args.json:
        payload = {
            "graph6": emit_graph6(g),
            "signless_laplacian_energy": qe,
            "bounds": [asdict(r) for r in results],
        }
        sys.stdout.write(render_json(payload))
    else:
        print(f"QE = {_fmt(qe)} (n={g.n}, m={g.m}, graph6={emit_graph6(g)})")
        _print_bounds_grid([asdict(r) for r in results])
    tol = tolerances.tight_tol(qe)
    violated = any(r.applicable and r.gap < -tol for r in results)
    return EXIT_VIOLATIONS if violated else EXIT_OK


def _table_command(report: TableReport, as_json: bool) -> int:
    if as_json:
        sys.stdout.write(render_json(table_report_dict(report)))
        return EXIT_OK if report.ok else EXIT_VIOLATIONS
    print(report.title)
    headers = ["row"] + [f"{c}" for c in report.column_names]
    rows = []
    for row in report.rows:
        rows.append([row.label] + [_fmt(row.columns[c]) for c in report.column_names])
    _print_grid(headers, rows)
    print(f"max deviation from reference: {report.max_deviation:.2e} "
          f"(tolerance {report.tolerance:.0e}) -> {'ok' if report.ok else 'MISMATCH'}")
    return EXIT_OK if report.ok else EXIT_VIOLATIONS


def table1_command(args) -> int:
    return _table_command(reproduce_table1(), args.json)


def table2_command(args) -> int:
    return _table_command(reproduce_table2(), args.json)


def verify_command(args) -> int:
    summary = verify_exhaustive(args.max_n, workers=args.workers,
                                sample=args.sample, seed=args.seed)
    if args.json:
        sys.stdout.write(render_json(verify_report(summary)))
    else:
        scope = (f"sample of {summary.graphs_checked}" if args.sample
                 else f"all {summary.graphs_checked}")
        print(f"checked {scope} labeled graphs on {summary.max_n} vertices "
              f"in {summary.wall_time:.2f}s (backend={BACKEND})")
        print(f"bound violations: {len(summary.violations)}")
        for g6, bid, gap in summary.violations[:20]:
            print(f"  {bid} on {g6}: gap {gap:.3e}")
        print(f"lemma failures: {len(summary.lemma_failures)}")
        for g6, cid in summary.lemma_failures[:20]:
            print(f"  {cid} on {g6}")
        print("result: ok" if summary.ok else "result: FAILED")
    return EXIT_OK if summary.ok else EXIT_VIOLATIONS


# -- parser ---------------------------------------------------------------------------

def _build_parser() -> _Parser:
    parser = _Parser(prog="qspectra",
                     description="Signless Laplacian spectra, energies, and "
                                 "bound verification for simple graphs.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    p = sub.add_parser("analyze", help="full spectral report for one graph")
    _add_graph_input(p)
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=analyze_command)

    p = sub.add_parser("family", help="construct a named graph family")
    p.add_argument("spec", nargs="+", metavar="KIND [PARAM...]",
                   help="family kind and integer parameters")
    p.add_argument("--edges", action="store_true",
                   help="also print the edge list")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=family_command)

    p = sub.add_parser("bounds", help="evaluate the full bound catalog")
    _add_graph_input(p)
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=bounds_command)

    p = sub.add_parser("table1", help="reproduce the lower-bound reference table")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=table1_command)

    p = sub.add_parser("table2", help="reproduce the upper-bound reference table")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=table2_command)

    p = sub.add_parser("verify", help="exhaustively verify bounds and lemmas")
    p.add_argument("max_n", type=int,
                   help="vertex count (1..7); all labeled graphs on exactly "
                        "this many vertices")
    p.add_argument("--workers", type=int, default=1,
                   help="worker processes (default 1)")
    p.add_argument("--sample", type=int, default=None,
                   help="check a uniform sample of this size instead of all")
    p.add_argument("--seed", type=int, default=None,
                   help="seed for --sample")
    p.add_argument("--json", action="store_true", help="emit canonical JSON")
    p.set_defaults(func=verify_command)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseInputError as exc:
        print(f"qspectra: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"qspectra: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
