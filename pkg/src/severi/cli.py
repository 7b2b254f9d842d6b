"""Command-line interface: ``severi <command> ... [--format text|json|csv]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import lattice, singularities
from .floordiag import enumerate_floor_diagrams, severi_degree_fd
from .floordiag.severi import diagram_term
from .kontsevich import kontsevich_table
from .validate import cross_validate_rational, run_golden_checks

DEFAULT_GUARD = 14


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _global_opts(suppress: bool) -> argparse.ArgumentParser:
    # subcommand copies are suppressed so they only override when given
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=("text", "json", "csv"),
                   default=argparse.SUPPRESS if suppress else "text")
    p.add_argument("--max-degree-guard", type=int, metavar="N",
                   default=argparse.SUPPRESS if suppress else DEFAULT_GUARD)
    return p


def _add_surface(sub, extra: list[argparse.ArgumentParser], help_prefix: str):
    glob = _global_opts(True)
    surf = sub.add_subparsers(dest="surface", required=True, parser_class=_Parser)
    p2 = surf.add_parser("p2", parents=[glob] + extra, help=f"{help_prefix} on the plane")
    p2.add_argument("--degree", type=int, required=True)
    q = surf.add_parser("quadric", parents=[glob] + extra, help=f"{help_prefix} on P1xP1")
    q.add_argument("--a", type=int, required=True)
    q.add_argument("--b", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="severi", parents=[_global_opts(False)],
                     description="Exact Severi degrees of the plane and the quadric.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    glob = _global_opts(True)

    genus = sub.add_parser("genus", help="genus, dimension and lattice counts")
    _add_surface(genus, [], "invariants")

    ak = sub.add_parser("ak", parents=[glob], help="invariants of an A_k singularity")
    ak.add_argument("--k", type=int, required=True)

    ledger = sub.add_parser("ledger", parents=[glob], help="genus ledger of a configuration")
    ledger.add_argument("--pa", type=int, required=True)
    ledger.add_argument("--sing", default="", help="comma-separated list like A2,A1")

    kont = sub.add_parser("kontsevich", parents=[glob], help="table of N_1..N_D")
    kont.add_argument("--max-degree", type=int, required=True)

    cog = argparse.ArgumentParser(add_help=False)
    cog.add_argument("--cogenus", type=int, required=True)
    cog.add_argument("--reducible", action="store_true",
                     help="include reducible curves (disconnected diagrams); plane only")
    brk = argparse.ArgumentParser(add_help=False)
    brk.add_argument("--breakdown", action="store_true")
    sev = sub.add_parser("severi", help="Severi degree via floor diagrams")
    _add_surface(sev, [cog, brk], "Severi degree")
    dia = sub.add_parser("diagrams", help="list floor diagrams with multiplicities")
    _add_surface(dia, [cog], "floor diagrams")

    val = sub.add_parser("validate", parents=[glob], help="run the cross-validation report")
    val.add_argument("--max-degree", type=int, default=5)
    return parser


def _surface(args) -> lattice.SurfaceClass:
    try:
        if args.surface == "p2":
            s = lattice.Plane(args.degree)
            size = s.d
        else:
            s = lattice.Quadric(args.a, args.b)
            size = max(s.a, s.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if size > args.max_degree_guard:
        raise UsageError(f"degree {size} exceeds --max-degree-guard {args.max_degree_guard}")
    return s


def _surface_fields(s) -> dict:
    if isinstance(s, lattice.Plane):
        return {"surface": "p2", "degree": s.d}
    return {"surface": "quadric", "a": s.a, "b": s.b}


def _stringify(obj):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def _emit(fmt: str, record: dict, rows: list[dict] | None = None, *, out=None) -> None:
    """Write a record (and optional table rows) in the requested format."""
    out = out or sys.stdout
    if fmt == "json":
        payload = dict(record)
        if rows is not None:
            payload["rows"] = rows
        out.write(json.dumps(_stringify(payload), indent=2, sort_keys=True) + "\n")
        return
    if fmt == "csv":
        table = rows if rows is not None else [record]
        buf = io.StringIO()
        if table:
            w = csv.DictWriter(buf, fieldnames=list(table[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(table)
        else:
            buf.write("\n")
        out.write(buf.getvalue())
        return
    for k, v in record.items():
        if v is not None:
            out.write(f"{k}: {v}\n")
    if rows:
        cols = list(rows[0])
        widths = [max(len(c), *(len(str(r[c])) for r in rows)) for c in cols]
        out.write("  ".join(c.rjust(w) for c, w in zip(cols, widths)) + "\n")
        for r in rows:
            out.write("  ".join(str(r[c]).rjust(w) for c, w in zip(cols, widths)) + "\n")


def cmd_genus(args):
    s = _surface(args)
    poly = lattice.polygon_for(s)
    rec = _surface_fields(s)
    rec.update(arithmetic_genus=lattice.arithmetic_genus(s),
               linear_system_dim=lattice.linear_system_dim(s),
               interior_points=lattice.interior_points(poly),
               boundary_points=lattice.boundary_points(poly),
               lattice_points=lattice.lattice_points(poly),
               twice_area=int(2 * poly.area()))
    _emit(args.format, rec)
    return 0


def cmd_ak(args):
    try:
        inv = singularities.ak_invariants(args.k)
    except singularities.InvalidIndex as exc:
        raise UsageError(str(exc)) from None
    rec = {"k": inv.k, "delta": inv.delta, "delta_ceil": inv.delta, "delta_floor": inv.delta_floor,
           "milnor": inv.milnor, "branches": inv.branches, "t1_dim": inv.t1_dim,
           "equigeneric_dim": inv.equigeneric_dim}
    _emit(args.format, rec)
    return 0


def cmd_ledger(args):
    try:
        sing = [singularities.parse_ak(t) for t in args.sing.split(",") if t.strip()]
        led = singularities.genus_ledger(args.pa, sing)
    except (singularities.InvalidIndex, singularities.GenusUnderflow) as exc:
        raise UsageError(str(exc)) from None
    rec = {"p_a": led.p_a, "singularities": ",".join(s.name for s in sing),
           "local_deltas": ",".join(map(str, led.local_deltas)), "delta_total": led.delta_total,
           "g": led.g, "nodes_after_smoothing": singularities.nodes_after_equigeneric_smoothing(sing)}
    _emit(args.format, rec)
    return 0


def cmd_kontsevich(args):
    d = args.max_degree
    if d < 1:
        raise UsageError("--max-degree must be positive")
    if d > args.max_degree_guard:
        raise UsageError(f"degree {d} exceeds --max-degree-guard {args.max_degree_guard}")
    rows = [{"d": k, "N_d": n} for k, n in kontsevich_table(d)]
    _emit(args.format, {}, rows)
    return 0


def cmd_severi(args):
    s = _surface(args)
    if args.cogenus < 0:
        raise UsageError("--cogenus must be nonnegative")
    if args.reducible and not isinstance(s, lattice.Plane):
        raise UsageError("--reducible is only supported for p2")
    res = severi_degree_fd(s, args.cogenus, reducible=args.reducible)
    if res.warning:
        print(f"warning: {res.warning}", file=sys.stderr)
    rec = _surface_fields(s)
    rec.update(cogenus=res.delta, reducible=res.reducible, total=res.total, warning=res.warning)
    rows = None
    if args.breakdown:
        rows = [{"diagram": t.encoding, "multiplicity": t.multiplicity, "markings": t.markings,
                 "contribution": t.contribution} for t in res.breakdown]
    if args.format == "csv" and rows is None:
        rec = {k: ("" if v is None else v) for k, v in rec.items()}
    _emit(args.format, rec, rows)
    return 0


def cmd_diagrams(args):
    s = _surface(args)
    if args.reducible and not isinstance(s, lattice.Plane):
        raise UsageError("--reducible is only supported for p2")
    try:
        diagrams = enumerate_floor_diagrams(s, args.cogenus, reducible=args.reducible)
    except lattice.DeltaOutOfRange as exc:
        print(f"warning: {exc}", file=sys.stderr)
        diagrams = []
    rows = []
    for D in diagrams:
        t = diagram_term(D)
        rows.append({"diagram": t.encoding, "multiplicity": t.multiplicity, "markings": t.markings})
    rec = _surface_fields(s)
    rec.update(cogenus=args.cogenus, count=len(rows))
    _emit(args.format, rec if args.format != "csv" else {}, rows)
    return 0


def cmd_validate(args):
    if args.max_degree < 1:
        raise UsageError("--max-degree must be positive")
    if args.max_degree > args.max_degree_guard:
        raise UsageError(f"degree {args.max_degree} exceeds --max-degree-guard "
                         f"{args.max_degree_guard}")
    report = run_golden_checks().merge(cross_validate_rational(args.max_degree))
    if args.format == "json":
        sys.stdout.write(report.to_json() + "\n")
    else:
        rows = [c.as_dict() for c in report.checks]
        if args.format == "csv":
            _emit("csv", {}, rows)
        else:
            _emit("text", {"overall": "pass" if report.passed else "fail"}, rows)
            for note in report.discrepancies:
                sys.stdout.write(f"discrepancy {note['id']}: {note['claim']} "
                                 f"vs {note['conflicts_with']}\n")
    return 0 if report.passed else 1


COMMANDS = {"genus": cmd_genus, "ak": cmd_ak, "ledger": cmd_ledger, "kontsevich": cmd_kontsevich,
            "severi": cmd_severi, "diagrams": cmd_diagrams, "validate": cmd_validate}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"severi: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
