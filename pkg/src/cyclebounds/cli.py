"""Command line entry point: ``cyclebounds {enumerate,check,sharpness,invariants}``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator

from .cycles import DEFAULT_CYCLE_CAP
from .graph import Graph6Error, parse_graph6, write_graph6
from .harness import ENUM_MAX_N, enumerate_graphs, verify_graphs
from .invariants import invariant_record
from .sharpness import SHARPNESS_EXAMPLES, audit, audit_claim
from .theorems import parse_lambda_range, parse_theorem_id, parse_theorem_list


def _order_range(text: str) -> range:
    try:
        r = parse_lambda_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected k or lo..hi, got {text!r}") from None
    if r.stop - 1 > ENUM_MAX_N:
        raise argparse.ArgumentTypeError(f"built-in enumeration covers 1 <= n <= {ENUM_MAX_N}")
    return r


def _lambda_range(text: str) -> range:
    try:
        return parse_lambda_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_lines(path: str) -> Iterator[str]:
    if path == "-":
        yield from sys.stdin
    else:
        with open(path, encoding="ascii", errors="replace") as fh:
            yield from fh


def _enumerated(orders: range, connected: bool):
    for n in orders:
        yield from enumerate_graphs(n, connected_only=connected)


def cmd_enumerate(args) -> int:
    out = sys.stdout
    for g in _enumerated(args.n, args.connected):
        out.write(write_graph6(g) + "\n")
    return 0


def cmd_check(args) -> int:
    try:
        ids = parse_theorem_list(args.theorems, args.lam)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.graphs is not None:
        source = _read_lines(args.graphs)
        meta = {"source": args.graphs}
    elif args.n is not None:
        source = _enumerated(args.n, args.connected)
        meta = {"n": f"{args.n.start}..{args.n.stop - 1}", "connected_only": args.connected}
    else:
        source = _read_lines("-")
        meta = {"source": "-"}
    report = verify_graphs(source, ids, args.lam, jobs=args.jobs, cycle_cap=args.cycle_cap, metadata=meta)
    timing = not args.no_timing
    print(report.to_json(timing) if args.format == "json" else report.to_text(timing))
    return report.exit_code


def cmd_sharpness(args) -> int:
    if args.claims:
        reports = [audit_claim(c) for c in SHARPNESS_EXAMPLES
                   if args.theorem is None or parse_theorem_id(c.theorem).tag == parse_theorem_id(args.theorem).tag]
    else:
        if not (args.family and args.theorem):
            print("error: --family and --theorem are required unless --claims is given", file=sys.stderr)
            return 2
        try:
            reports = [audit(args.family, args.params or "x=0", args.theorem, args=args.args, where=args.where)]
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 2
    if args.format == "json":
        print(json.dumps([r.as_dict() for r in reports], indent=2, sort_keys=True))
    else:
        print("\n\n".join(r.to_text() for r in reports))
    return 0


def cmd_invariants(args) -> int:
    rows = []
    status = 0
    for line_no, line in enumerate(_read_lines(args.graphs), start=1):
        line = line.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            print(f"line {line_no}: {exc}", file=sys.stderr)
            status = 2
            continue
        if g.n == 0:
            print(f"line {line_no}: graph has no vertices", file=sys.stderr)
            status = 2
            continue
        rows.append({"line": line_no, "graph6": line, **invariant_record(g).as_dict()})
    if args.format == "json":
        print(json.dumps(rows, indent=2))
        return status
    print(f"{'line':>5}  {'graph6':<16} {'n':>3} {'q':>4} {'delta':>5} {'kappa':>5} {'alpha':>5} {'tau':>7} connected")
    for r in rows:
        print(f"{r['line']:>5}  {r['graph6']:<16} {r['n']:>3} {r['q']:>4} {r['delta']:>5} {r['kappa']:>5} "
              f"{r['alpha']:>5} {r['tau']:>7} {r['connected']}")
    return status


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cyclebounds", description="Exact cycle invariants and theorem checks.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="print non-isomorphic graphs as graph6")
    e.add_argument("--n", type=_order_range, required=True, help="order k or range lo..hi (<= 8)")
    e.add_argument("--connected", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check", help="verify theorems over a graph6 stream or the built-in enumeration")
    c.add_argument("--graphs", help="graph6 file, or - for stdin (default when --n is absent)")
    c.add_argument("--n", type=_order_range, help="use built-in enumeration of these orders")
    c.add_argument("--connected", action="store_true", help="with --n: connected graphs only")
    c.add_argument("--theorems", default="all")
    c.add_argument("--lambda", dest="lam", type=_lambda_range, default=range(1, 6))
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--cycle-cap", type=int, default=DEFAULT_CYCLE_CAP)
    c.add_argument("--no-timing", action="store_true", help="omit timing for byte-stable output")
    c.set_defaults(func=cmd_check)

    s = sub.add_parser("sharpness", help="audit a theorem on an extremal family")
    s.add_argument("--family")
    s.add_argument("--params", help="grid such as kappa=2..5,delta=3..6")
    s.add_argument("--theorem")
    s.add_argument("--args", help="family arguments as expressions of the grid variables")
    s.add_argument("--where", help="filter expression over the grid variables")
    s.add_argument("--claims", action="store_true", help="run the built-in sharpness examples")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.set_defaults(func=cmd_sharpness)

    i = sub.add_parser("invariants", help="tabulate n, q, delta, kappa, alpha, tau")
    i.add_argument("--graphs", default="-")
    i.add_argument("--format", choices=("text", "json"), default="text")
    i.set_defaults(func=cmd_invariants)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "graphs", None) is not None and getattr(args, "n", None) is not None:
        print("error: use either --graphs or --n", file=sys.stderr)
        return 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
