"""Command line interface: ``dcores <subcommand> [flags]``.

Exit status: 0 success, 1 usage error, 2 computational error (for example
an unbounded family), 3 internal disagreement between engines or between
a theorem and enumeration.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import formulas, gf, reports
from .beta_search import ENGINES, EnumerationQuery
from .errors import EngineDisagreement, ParameterError, UnboundedError
from .partition_core import CoreSpec, Partition
from .selftest import run_selftest

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_DISAGREE = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _int_list(text: str) -> list[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError(f"expected positive integers, got {text!r}")
    return values


def _emit_json(data) -> None:
    sys.stdout.write(json.dumps(data, sort_keys=False, separators=(",", ":")) + "\n")


def _cache(args) -> reports.ResultCache | None:
    if args.no_cache:
        return None
    return reports.ResultCache(args.cache_dir)


def _require(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise ParameterError("missing required flag(s): "
                             + ", ".join("--" + n.replace("_", "-") for n in missing))


def cmd_enumerate(args) -> int:
    if args.forbidden is not None:
        forbidden = args.forbidden
    else:
        _require(args, "s")
        forbidden = [args.s, args.t if args.t is not None else args.s + (args.r or 1)]
    query = EnumerationQuery(CoreSpec(forbidden), args.d, args.bound, args.engine)
    result = reports.cached_query(query, _cache(args))
    print(f"engine: {result.engine}", file=sys.stderr)
    if args.json:
        _emit_json(result.to_dict(query, include_partitions=args.list, include_engine=False))
        return EXIT_OK
    label = ",".join(map(str, query.spec.values))
    print(f"({label})-core partitions with {args.d}-distinct parts: {result.count}")
    if result.bounded:
        print(f"bounded enumeration: beta elements <= {args.bound}")
    print(f"largest size: {result.max_size}")
    print("largest: " + " ".join(p.brace_str() for p in result.argmax))
    if args.list:
        for p in result.partitions:
            print(p.brace_str())
    return EXIT_OK


def cmd_count(args) -> int:
    seq = formulas.count_sequence(args.family, args.s_max, d=args.d, r=args.r)
    conjectural = args.family == "conjecture"
    if args.json:
        _emit_json(dict(seq.to_dict(), conjectural=conjectural))
    else:
        print(" ".join(map(str, seq.values)))
        if conjectural:
            print("(CONJECTURAL)")
    return EXIT_OK


def cmd_largest(args) -> int:
    size = formulas.largest_size_ss1(args.d, args.s)
    number = formulas.num_largest_ss1(args.d, args.s)
    maximal = formulas.maximal_partitions_ss1(args.d, args.s) if args.s >= 2 else [Partition()]
    status = EXIT_OK
    agree = None
    if args.check:
        res = reports.cached_query(
            EnumerationQuery(CoreSpec({args.s, args.s + 1}), args.d, engine="beta"), _cache(args))
        agree = (res.max_size == size and len(res.argmax) == number and res.argmax == maximal)
        if not agree:
            print(f"enumeration gives size {res.max_size} with {len(res.argmax)} partition(s)",
                  file=sys.stderr)
            status = EXIT_DISAGREE
    if args.json:
        data = {"d": args.d, "s": args.s, "largest_size": size, "num_largest": number}
        if args.show:
            data["partitions"] = [list(p) for p in maximal]
        if agree is not None:
            data["enumeration_agrees"] = agree
        _emit_json(data)
        return status
    print(f"size {size}")
    print(f"number of largest: {number}")
    if args.show:
        print("partitions: " + " ".join(p.brace_str() for p in maximal))
    if agree is not None:
        print("enumeration check: " + ("agrees" if agree else "DISAGREES"))
    return status


def cmd_maximal(args) -> int:
    maximal = formulas.maximal_partitions_ss1(args.d, args.s)
    if args.json:
        _emit_json([list(p) for p in maximal])
    else:
        for p in maximal:
            print(p.brace_str())
    return EXIT_OK


def cmd_tables(args) -> int:
    if args.paper:
        base = reports.PAPER_TABLES[args.paper]
        spec = reports.TableSpec(base.r, base.d_values, base.s_values, args.source, args.format)
    else:
        _require(args, "r", "d_min", "d_max", "s_max")
        spec = reports.TableSpec(args.r, range(args.d_min, args.d_max + 1),
                                 range(args.s_min, args.s_max + 1), args.source, args.format)
    text = reports.build_table(spec, _cache(args))
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = reports.verify_conjecture(args.d_max, args.s_max, d_min=args.d_min,
                                       engine=args.engine, witness_dir=args.witness_dir,
                                       cache=_cache(args))
    summary = report.summary()
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(f"checked {summary['checked']} (d, r, s) tuples against the CONJECTURAL recurrence: "
              f"{summary['matched']} matched, {summary['mismatched']} mismatched")
        first = summary["first_mismatch"]
        if first:
            print(f"first mismatch: d={first['d']} r={first['r']} s={first['s']} "
                  f"enumerated={first['enumerated']} predicted={first['predicted']}")
    return EXIT_OK


def cmd_gf(args) -> int:
    if args.family == "ss1":
        g = gf.ss1_gf(args.d)
    else:
        _require(args, "r")
        g = gf.conjecture_gf(args.d, args.r)
    coeffs = gf.series_coefficients(g, args.terms)
    conjectural = args.family == "conjecture" and args.r != 1
    if args.json:
        _emit_json(dict(g.to_dict(), coefficients=coeffs, conjectural=conjectural))
    else:
        print(f"GF: {g}" + ("  (CONJECTURAL)" if conjectural else ""))
        print("coefficients: " + " ".join(map(str, coeffs)))
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest()
    if args.json:
        _emit_json(results)
    else:
        width = max(map(len, results))
        for name, ok in results.items():
            print(f"{name:<{width}}  {'PASS' if ok else 'FAIL'}")
    return EXIT_OK if all(results.values()) else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    common.add_argument("--cache-dir", default=None,
                        help=f"cache directory (overrides ${reports.CACHE_ENV})")
    common.add_argument("--no-cache", action="store_true")

    parser = _Parser(prog="dcores", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", parents=[common], help="list core partitions")
    p.add_argument("--s", type=_positive)
    shape = p.add_mutually_exclusive_group()
    shape.add_argument("--r", type=_positive, help="second hook length is s + r (default 1)")
    shape.add_argument("--t", type=_positive, help="second hook length is t")
    shape.add_argument("--forbidden", type=_int_list, help="comma-separated hook lengths")
    p.add_argument("--d", type=_nonneg, default=1)
    p.add_argument("--bound", type=_nonneg, help="explicit beta-set bound")
    p.add_argument("--engine", choices=ENGINES, default="both")
    p.add_argument("--list", action="store_true", help="print every partition")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", parents=[common], help="count sequence from closed forms")
    p.add_argument("--family", choices=formulas.FAMILIES, default="ss1")
    p.add_argument("--d", type=_positive)
    p.add_argument("--r", type=_positive)
    p.add_argument("--s-max", type=_positive, required=True)
    p.set_defaults(func=cmd_count)

    for name, func, text in (("largest", cmd_largest, "largest size of (s,s+1)-cores"),
                             ("maximal", cmd_maximal, "partitions of largest size")):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("--d", type=_positive, required=True)
        p.add_argument("--s", type=_positive, required=True)
        if name == "largest":
            p.add_argument("--show", action="store_true", help="also print the maximal partitions")
            p.add_argument("--check", action="store_true", help="cross-check against enumeration")
        p.set_defaults(func=func)

    p = sub.add_parser("tables", parents=[common], help="count tables")
    p.add_argument("--paper", choices=sorted(reports.PAPER_TABLES))
    p.add_argument("--r", type=_positive)
    p.add_argument("--d-min", type=_positive)
    p.add_argument("--d-max", type=_positive)
    p.add_argument("--s-min", type=_positive, default=1)
    p.add_argument("--s-max", type=_positive)
    p.add_argument("--source", choices=reports.SOURCES, default="beta")
    p.add_argument("--format", choices=reports.FORMATS, default="markdown")
    p.add_argument("--output")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("verify", parents=[common], help="check the (s,s+r) conjecture")
    p.add_argument("--d-min", type=_positive, default=1)
    p.add_argument("--d-max", type=_positive, required=True)
    p.add_argument("--s-max", type=_positive, required=True)
    p.add_argument("--engine", choices=ENGINES, default="beta")
    p.add_argument("--witness-dir")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gf", parents=[common], help="rational generating function")
    p.add_argument("--family", choices=("ss1", "conjecture"), default="ss1")
    p.add_argument("--d", type=_positive, required=True)
    p.add_argument("--r", type=_positive)
    p.add_argument("--terms", type=_positive, default=10)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("selftest", parents=[common], help="run invariant checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"dcores: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineDisagreement as exc:
        print(f"dcores: engine disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (UnboundedError, ArithmeticError) as exc:
        print(f"dcores: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
