"""Command-line front end.

Exit codes: 0 success, 1 a checked statement failed, 2 usage or parse error,
3 ideal not artinian, 4 oracle mismatch, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from pathlib import Path

from . import kernel
from .census import (
    CSV_COLUMNS,
    BudgetExceeded,
    counterexample_report,
    default_workers,
    search_extremes,
    write_csv,
    write_jsonl,
)
from .core import NotArtinian, ParseError, StaircaseTooLarge, parse_ideal, power_ideal
from .families import counterexample_ideal, lex_truncation_ideal
from .formulas import (
    e_ideal_colength,
    e_ideal_tangent_formula,
    fat_point_tangent_dims,
)
from .tangent import is_smooth_monomial_point, tangent_report
from .verify import verify_theorem_suite

EXIT_FAIL, EXIT_PARSE, EXIT_NOT_ARTINIAN, EXIT_ORACLE, EXIT_IO = 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _ideal_from_args(args):
    sources = [args.ideal is not None, args.file is not None, args.ed is not None,
               args.fat is not None, args.cx is not None]
    if sum(sources) != 1:
        raise CliError("give exactly one of IDEAL, --file, --ed, --fat, --cx", EXIT_PARSE)
    if args.ed is not None:
        return lex_truncation_ideal(args.ed)
    if args.fat is not None:
        return power_ideal(3, args.fat)
    if args.cx is not None:
        r, *rest = args.cx
        return counterexample_ideal(r, *rest[:1])
    if args.file is not None:
        try:
            text = Path(args.file).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(str(exc), EXIT_IO) from exc
    else:
        text = args.ideal
    return parse_ideal(text, args.n)


def cmd_tangent(args, out) -> int:
    I = _ideal_from_args(args)
    rep = tangent_report(I)
    doc = rep.to_dict()
    if I.n == 3:
        doc["smooth"] = is_smooth_monomial_point(I, rep)
    status = 0
    if args.oracle:
        from .oracle import hom_dim

        doc["oracle_total"] = hom_dim(I, I, args.prime)
        if doc["oracle_total"] != rep.total:
            status = EXIT_ORACLE
    if args.json:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        out.write(f"ideal   {doc['ideal']}\n")
        out.write(f"d       {rep.d}\n")
        out.write(f"total   {rep.total}\n")
        for sig, v in rep.signature_totals.items():
            out.write(f"{sig:<7} {v}\n")
        out.write(f"socle   {rep.socle_dim}\n")
        if "smooth" in doc:
            out.write(f"point   {'smooth' if doc['smooth'] else 'singular'}\n")
        if args.oracle:
            verdict = "agrees" if status == 0 else "MISMATCH"
            out.write(f"oracle  {doc['oracle_total']} (mod {args.prime}, {verdict})\n")
    if status:
        print(f"oracle mismatch: {doc['oracle_total']} != {rep.total}", file=sys.stderr)
    return status


def cmd_census(args, out) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    records = search_extremes(args.d, filter_xpow=args.filter_xpow, workers=workers,
                              budget_override=args.budget_override, full=args.jsonl is not None)
    try:
        if args.csv:
            write_csv(records, args.csv)
        elif args.jsonl:
            write_jsonl(records, args.jsonl)
    except OSError as exc:
        raise CliError(str(exc), EXIT_IO) from exc
    best = records[0].total if records else None
    argmax = [r.ideal for r in records if r.total == best]
    if args.json:
        out.write(json.dumps({"d": args.d, "count": len(records), "max_total": best,
                              "argmax": argmax}) + "\n")
    else:
        if not (args.csv or args.jsonl):
            out.write(",".join(CSV_COLUMNS) + "\n")
            for rec in records:
                out.write(",".join(f'"{c}"' if isinstance(c, str) and "," in c else str(c)
                                   for c in rec.csv_row()) + "\n")
        out.write(f"count {len(records)}  max total {best}  argmax {' ; '.join(argmax)}\n")
    return 0


def cmd_verify(args, out) -> int:
    results = verify_theorem_suite(args.d_max, oracle=args.oracle, prime=args.prime)
    ok = all(r.passed for r in results)
    if args.json:
        out.write(json.dumps({"d_max": args.d_max, "passed": ok,
                              "checks": [r.to_dict() for r in results]}) + "\n")
    else:
        for r in results:
            out.write(r.line() + "\n")
    return 0 if ok else EXIT_FAIL


def cmd_counterexample(args, out) -> int:
    rep = counterexample_report(args.r, args.i)
    if args.json:
        out.write(json.dumps(rep, sort_keys=True) + "\n")
    else:
        out.write(f"r = {rep['r']}, i = {rep['i']}, d = {rep['d']}\n")
        out.write(f"E(d) = {rep['E']}\n  total {rep['E_total']}  socle {rep['E_socle']}"
                  f"  non-socle {rep['E_non_socle']}\n")
        out.write(f"J    = {rep['J']}\n  total {rep['J_total']}  socle {rep['J_socle']}"
                  f"  non-socle {rep['J_non_socle']}\n")
        out.write(f"dim T(J) > dim T(E(d)): {rep['strict']}\n")
    return 0 if rep["strict"] else EXIT_FAIL


def cmd_formulas(args, out) -> int:
    r = args.r
    total, per_sig = fat_point_tangent_dims(r)
    doc = {"r": r, "fat_point_colength": comb(r + 2, 3), "fat_point_total": total,
           "fat_point_signatures": per_sig}
    if r >= 3:
        doc["e_ideal_colength"] = e_ideal_colength(r)
        doc["e_ideal_total"] = e_ideal_tangent_formula(r)
    if args.json:
        out.write(json.dumps(doc, sort_keys=True) + "\n")
    else:
        for k, v in doc.items():
            out.write(f"{k:<22} {v}\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="staircase", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({kernel.BACKEND} kernel)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tangent", help="tangent space of one monomial ideal")
    p.add_argument("ideal", nargs="?", help='e.g. "x^2, x*y, y^2, z"')
    p.add_argument("--file", help="read the ideal text from a file")
    p.add_argument("--n", type=int, help="number of variables")
    p.add_argument("--ed", type=int, metavar="D", help="use the lexsegment truncation E(D)")
    p.add_argument("--fat", type=int, metavar="R", help="use m^R")
    p.add_argument("--cx", type=int, nargs="+", metavar="R", help="counterexample ideal: R [I]")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check with linear algebra mod p")
    p.add_argument("--prime", type=int, default=32003)
    p.set_defaults(func=cmd_tangent)

    p = sub.add_parser("census", help="strongly stable ideals of colength d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--filter-xpow", type=int, metavar="P", help="keep ideals without x^P")
    out = p.add_mutually_exclusive_group()
    out.add_argument("--csv", metavar="PATH")
    out.add_argument("--jsonl", metavar="PATH")
    p.add_argument("--json", action="store_true", help="print the summary as JSON")
    p.add_argument("--budget-override", action="store_true")
    p.add_argument("--workers", type=int)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", help="check the identities on exhaustive sets")
    p.add_argument("--d-max", type=int, default=8)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("counterexample", help="compare J with E(d)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, default=2)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("formulas", help="closed forms at level r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_formulas)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except NotArtinian as exc:
        print(f"not artinian: {exc}", file=sys.stderr)
        return EXIT_NOT_ARTINIAN
    except (BudgetExceeded, StaircaseTooLarge, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
