"""Command-line interface.

Exit codes: 0 success, 1 negative verdict (``check --strict``) or a failed
verification row, 2 usage, parse, domain or capacity errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence, TextIO

from .bound import bound_breakdown
from .construct import enumerate_extremal_up_to_iso
from .errors import Graph6Error, ToolkitError
from .g6 import decode_g6, encode_g6
from .graph import diameter
from .oracle import oracle_table
from .recognize import DEFAULT_GEODESIC_LIMIT, extract_certificate, is_extremal


def cmd_bound(args: argparse.Namespace, out: TextIO) -> int:
    b = bound_breakdown(args.n, args.d)
    if args.format == "json":
        print(json.dumps({"n": args.n, "d": args.d, "max_size": b.total, "path_edges": b.path_edges,
                          "cross_edges": b.cross_edges, "clique_edges": b.clique_edges}), file=out)
    else:
        print(f"n={args.n} d={args.d} max_size={b.total}", file=out)
        print(f"path_edges={b.path_edges} cross_edges={b.cross_edges} clique_edges={b.clique_edges}",
              file=out)
    return 0


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    classes = enumerate_extremal_up_to_iso(args.n, args.d)
    for _, g in classes:
        g6 = encode_g6(g).decode("ascii")
        if args.format == "json":
            record = {"n": g.n, "d": args.d, "g6": g6, "classes": len(classes),
                      "size": g.size(), "diameter": diameter(g)}
            print(json.dumps(record), file=out)
        else:
            print(g6, file=out)
    return 0


def cmd_check(args: argparse.Namespace, out: TextIO, stdin: TextIO) -> int:
    graphs = []
    for lineno, line in enumerate(stdin, start=1):
        text = line.strip()
        if not text:
            continue
        try:
            graphs.append((text, decode_g6(text)))
        except Graph6Error as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            return 2
    negative = False
    for text, g in graphs:
        verdict = is_extremal(g, args.d)
        negative |= not verdict
        cert = extract_certificate(g, args.d, limit=args.limit) if verdict and args.certificate else None
        if args.format == "json":
            record = {"g6": text, "n": g.n, "d": args.d, "extremal": verdict}
            if args.certificate:
                record["certificate"] = cert.to_dict() if cert else None
            print(json.dumps(record), file=out)
        else:
            fields = [text, "extremal" if verdict else "not-extremal"]
            if cert is not None:
                fields.append(json.dumps(cert.to_dict()))
            print("\t".join(fields), file=out)
    return 1 if negative and args.strict else 0


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    # imported lazily: only verify needs the constructor's canonical forms
    from .construct import extremal_forms

    reports = oracle_table(args.n, workers=args.jobs, pruned=args.pruned)
    failures = 0
    for r in reports:
        forms = extremal_forms(r.n, r.d)
        ok = r.matches_formula and set(forms) == set(r.extremal_forms)
        failures += not ok
        status = "PASS" if ok else "FAIL"
        if args.format == "json":
            print(json.dumps({**r.to_dict(), "constructor_classes": len(forms), "status": status}),
                  file=out)
        else:
            print(f"n={r.n} d={r.d} formula={r.formula} oracle={r.max_size} "
                  f"classes={len(r.extremal_forms)} constructor={len(forms)} "
                  f"labeled={r.labeled_count} mode={r.mode} {status}", file=out)
    if args.format != "json":
        if failures:
            print(f"{failures} of {len(reports)} rows FAIL", file=out)
        else:
            print(f"all {len(reports)} rows PASS", file=out)
    return 1 if failures else 0


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal-diameter",
        description="Largest graphs of given order n and diameter d >= 2. "
                    "(For d = 1 the only graph is the complete graph K_n.)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="print the maximum size and its edge decomposition")
    p.add_argument("-n", type=int, required=True, help="order")
    p.add_argument("-d", type=int, required=True, help="diameter (>= 2)")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("construct", help="emit one extremal graph per isomorphism class")
    p.add_argument("-n", type=int, required=True, help="order (<= 10)")
    p.add_argument("-d", type=int, required=True, help="diameter (>= 2)")
    p.add_argument("--format", choices=["g6", "json"], default="g6")

    p = sub.add_parser("check", help="classify graph6 lines read from stdin")
    p.add_argument("-d", type=int, required=True, help="diameter (>= 2)")
    p.add_argument("--certificate", action="store_true", help="print a certificate for extremal graphs")
    p.add_argument("--strict", action="store_true", help="exit 1 if any graph is not extremal")
    p.add_argument("--limit", type=_positive_int, default=DEFAULT_GEODESIC_LIMIT,
                   help="maximum number of geodesics examined per graph")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="compare exhaustive search with the formula and constructor")
    p.add_argument("-n", type=int, required=True, help="largest order (<= 7, or 8 with --pruned)")
    p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
    p.add_argument("--pruned", action="store_true",
                   help="allow n = 8 by skipping graphs below the closed-form bound")
    p.add_argument("--format", choices=["text", "json"], default="text")
    return parser


def main(argv: Optional[Sequence[str]] = None, out: TextIO | None = None,
         stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    args = build_parser().parse_args(argv)
    try:
        if args.command == "bound":
            return cmd_bound(args, out)
        if args.command == "construct":
            return cmd_construct(args, out)
        if args.command == "check":
            return cmd_check(args, out, stdin)
        return cmd_verify(args, out)
    except ToolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
