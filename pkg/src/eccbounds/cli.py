"""Command-line interface.

Subcommands: compute, generate, bound, verify, scan, formats.  Exit status is
0 on success, 1 when ``verify`` finds a violation, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import graph6
from .bounds import BOUNDS, evaluate
from .constructions import FAMILIES, build, parse_family
from .enumeration import canonical_graph6
from .experiments import (
    ALPHA_LIMIT,
    CYCLE_LIKE,
    TREE,
    ScanRow,
    compare_tree_vs_cycletail,
    scan_sigma2_max,
    scan_threshold_dn,
)
from .graph import Graph, GraphError, ecc_profile, from_edge_list
from .invariants import CHROMATIC_MAX_N, invariants
from .metrics import indices_from_ecc
from .report import ComputeRow, ConstructionRecord, Report, ScanResult, render
from .verifier import CHECKS, verify_bound

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_edges(text: str, n: int | None = None) -> Graph:
    """Parse ``"0-1,1-2"`` (commas or whitespace between pairs)."""
    pairs = []
    for item in text.replace(",", " ").split():
        a, sep, b = item.partition("-")
        if not sep:
            raise UsageError(f"malformed edge {item!r}; expected u-v")
        try:
            pairs.append((int(a), int(b)))
        except ValueError:
            raise UsageError(f"malformed edge {item!r}; expected integers") from None
    if n is None:
        n = 1 + max((max(p) for p in pairs), default=0)
    return from_edge_list(n, pairs)


def parse_params(text: str) -> dict[str, int]:
    out: dict[str, int] = {}
    for item in filter(None, (s.strip() for s in text.replace(";", ",").split(","))):
        k, sep, v = item.partition("=")
        if not sep:
            raise UsageError(f"malformed parameter {item!r}; expected key=value")
        try:
            out[k.strip()] = int(v)
        except ValueError:
            raise UsageError(f"parameter {k!r} must be an integer") from None
    return out


def _read_graph6_lines(stream) -> list[Graph]:
    return [graph6.decode(line) for line in stream if line.strip()]


def _compute_row(g: Graph, with_invariants: bool) -> ComputeRow:
    prof = ecc_profile(g)
    text = graph6.encode(g)
    if not prof.connected:
        return ComputeRow(text, False, g.n, g.m, None, None, None, None)
    inv = invariants(g) if with_invariants and g.n <= CHROMATIC_MAX_N else None
    return ComputeRow(text, True, g.n, g.m, prof.radius, prof.diameter, indices_from_ecc(g, prof.ecc), inv)


def cmd_compute(args) -> tuple[Report, int]:
    if args.edges is not None:
        graphs = [parse_edges(args.edges, args.n)]
    elif args.graph6:
        graphs = [graph6.decode(t) for t in args.graph6]
    elif args.file:
        with open(args.file) as fh:
            graphs = _read_graph6_lines(fh)
    else:
        graphs = _read_graph6_lines(sys.stdin)
    rows = [_compute_row(g, not args.no_invariants) for g in graphs]
    return Report(args.argv, "index_reports", rows), EXIT_OK


def _record(spec_text: str) -> ConstructionRecord:
    c = build(spec_text)
    g = c.graph
    prof = ecc_profile(g)
    observed: dict = {"m": g.m}
    if prof.connected:
        rep = indices_from_ecc(g, prof.ecc)
        observed.update(diameter=prof.diameter, ecc_sum=rep.ecc_sum, sigma0=rep.sigma0, sigma1=rep.sigma1,
                        sigma2=rep.sigma2)
        if g.n <= CHROMATIC_MAX_N:
            inv = invariants(g)
            observed.update(chromatic=inv.chromatic, clique=inv.clique, matching=inv.matching,
                            dominating=inv.dominating)
    return ConstructionRecord(str(parse_family(spec_text)), graph6.encode(g), g.n, g.m, dict(c.predicted), observed)


def cmd_generate(args) -> tuple[Report, int]:
    records = [_record(s) for s in args.family]
    return Report(args.argv, "constructions", records), EXIT_OK


def cmd_bound(args) -> tuple[Report, int]:
    try:
        rep = evaluate(args.id, **parse_params(args.params))
    except KeyError:
        raise UsageError(f"unknown bound id {args.id!r}; known: {', '.join(sorted(BOUNDS))}") from None
    return Report(args.argv, "bound_report", rep), EXIT_OK


def cmd_verify(args) -> tuple[Report, int]:
    if args.id not in CHECKS:
        raise UsageError(f"unknown bound id {args.id!r}; known: {', '.join(sorted(CHECKS))}")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    run = verify_bound(args.id, n_max=args.nmax, n_min=args.nmin, iso_reduce=args.iso_reduce, jobs=args.jobs)
    return Report(args.argv, "verification_run", run), EXIT_OK if run.ok else EXIT_VIOLATION


def _cycletail_rows(n_list: list[int], mode: str) -> ScanResult:
    rows, alpha = compare_tree_vs_cycletail(n_list, mode=mode)
    out = []
    for r in rows:
        extra = {"h_formula": r.h_formula, "tree_value": r.tree_value, "diff": r.diff}
        if r.h_bfs is not None:
            extra["h_bfs"] = r.h_bfs
            extra["bfs_matches"] = r.h_bfs == r.h_formula
        cls = CYCLE_LIKE if r.h_formula > r.tree_value else TREE
        out.append(ScanRow((("n", r.n), ("r", r.r), ("k", r.k)), max(r.h_formula, r.tree_value), cls,
                           f"cycle_tail:n={r.n},k={r.k}", extra))
    summary = {"alpha": {str(n): a for n, a in alpha.items()}, "alpha_limit": ALPHA_LIMIT}
    return ScanResult("cycletail", out, summary)


def cmd_scan(args) -> tuple[Report, int]:
    exp = args.experiment
    if exp == "dn":
        rows, threshold = scan_threshold_dn(args.n or 7, iso_reduce=not args.labeled)
        result = ScanResult("dn", rows, {"d_n": threshold})
    elif exp == "cycletail":
        n_list = args.n_list or ([args.n] if args.n else [8, 16, 32, 64])
        result = _cycletail_rows(n_list, args.mode or "bfs")
    else:
        mode = args.mode or "exhaustive"
        n_list = args.n_list or [args.n or 7]
        rows = [scan_sigma2_max(n, mode=mode, iso_reduce=not args.labeled) for n in n_list]
        result = ScanResult("sigma2max", rows, {"mode": mode})
    return Report(args.argv, "scan", result), EXIT_OK


def cmd_formats(args, out) -> int:
    if args.list:
        out.write("families:\n")
        for name, (_, fam, params) in FAMILIES.items():
            out.write(f"  {name}:{','.join(params)}  [{fam.value}]\n")
        out.write("bounds:\n")
        for bid, (_, params) in BOUNDS.items():
            out.write(f"  {bid}  ({', '.join(params)})\n")
        out.write("verify checks:\n")
        for bid, c in CHECKS.items():
            out.write(f"  {bid}  {c.summary}\n")
        out.write("experiments: dn, cycletail, sigma2max\n")
        return EXIT_OK
    if args.edges is not None:
        graphs = [parse_edges(args.edges, args.n)]
    elif args.family:
        graphs = [build(s).graph for s in args.family]
    else:
        graphs = _read_graph6_lines(sys.stdin)
    for g in graphs:
        if args.to == "edges":
            out.write(f"{g.n} " + ",".join(f"{u}-{v}" for u, v in g.edges()) + "\n")
        elif args.to == "canonical":
            out.write(canonical_graph6(g) + "\n")
        else:
            out.write(graph6.encode(g) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eccbounds", description="Eccentricity indices and their extremal bounds.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output", "-o", help="write the report here instead of standard output")

    p = sub.add_parser("compute", help="indices and invariants of input graphs")
    p.add_argument("--edges", help='edge list such as "0-1,1-2,2-3"')
    p.add_argument("--n", type=int, help="vertex count for --edges (default: largest label + 1)")
    p.add_argument("--graph6", nargs="+", help="graph6 strings")
    p.add_argument("--file", help="file of graph6 lines (default: standard input)")
    p.add_argument("--no-invariants", action="store_true", help="skip chromatic/clique/matching numbers")
    common(p)

    p = sub.add_parser("generate", help="build extremal family members")
    p.add_argument("--family", action="append", required=True, help='family spec such as "kite:n=7,d=4"')
    common(p)

    p = sub.add_parser("bound", help="evaluate one bound oracle")
    p.add_argument("--id", required=True)
    p.add_argument("--params", default="", help='parameters such as "n=7,d=4"')
    common(p)

    p = sub.add_parser("verify", help="check a bound on all small connected graphs")
    p.add_argument("--id", required=True)
    p.add_argument("--nmax", type=int)
    p.add_argument("--nmin", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--iso-reduce", action="store_true", help="one graph per isomorphism class")
    common(p)

    p = sub.add_parser("scan", help="run an exploratory experiment")
    p.add_argument("--experiment", choices=("dn", "cycletail", "sigma2max"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--n-list", type=int, nargs="+")
    p.add_argument("--mode", choices=("bfs", "formula", "exhaustive", "construction"))
    p.add_argument("--labeled", action="store_true", help="sweep labeled graphs instead of classes")
    common(p)

    p = sub.add_parser("formats", help="convert between graph6 and edge lists, or list identifiers")
    p.add_argument("--to", choices=("graph6", "edges", "canonical"), default="graph6")
    p.add_argument("--edges")
    p.add_argument("--n", type=int)
    p.add_argument("--family", action="append")
    p.add_argument("--list", action="store_true")
    p.add_argument("--output", "-o")
    return parser


HANDLERS = {
    "compute": cmd_compute,
    "generate": cmd_generate,
    "bound": cmd_bound,
    "verify": cmd_verify,
    "scan": cmd_scan,
}


def run_cli(argv: Sequence[str] | None = None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    args.argv = argv
    if args.command == "scan" and args.mode:
        allowed = {"cycletail": ("bfs", "formula"), "sigma2max": ("exhaustive", "construction"), "dn": ()}
        if args.mode not in allowed[args.experiment]:
            print(f"eccbounds: --mode {args.mode} does not apply to {args.experiment}", file=sys.stderr)
            return EXIT_USAGE
    try:
        out = open(args.output, "w") if args.output else stdout
    except OSError as exc:
        print(f"eccbounds: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.command == "formats":
            return cmd_formats(args, out)
        report, status = HANDLERS[args.command](args)
        out.write(render(report, args.format))
        return status
    except (UsageError, GraphError, ValueError, KeyError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"eccbounds: {msg}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if out is not stdout:
            out.close()


def main() -> None:
    sys.exit(run_cli())
