"""Command-line surface.

Subcommands: partitions, content-poly, hook-poly, psi, closed-form,
invariant, verify, solve-coefficients.  Output is deterministic; structured
mode (--format records) emits line-delimited JSON with a schema version.
Exit codes: 0 success, 1 verification failure or no solution, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from .cache import ResultCache
from .partitions import (
    Partition,
    content_polynomial,
    enumerate_partitions,
    hook_polynomial,
)
from .serialize import (
    SCHEMA_VERSION,
    dump_line,
    dumps_records,
    loads_records,
    poly_records,
    rf_record,
    skein_vector_from_records,
    skein_vector_records,
)
from .solver import (
    GeometryTag,
    NoSolutionError,
    c3_template,
    closed_form,
    colored_unknot_invariant,
    geometry,
    solve_monomial_coefficients,
    solve_recursion,
    unknot_template,
)
from .verify import SUITES, run_suite

EMPTY_DISPLAY = "∅"


def _partition_arg(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _display(p: Partition) -> str:
    return str(p) or EMPTY_DISPLAY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skeinsolve",
        description="Exact partition-basis skein recursion toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("text", "records"), default="text",
                       help="text rendering or line-delimited JSON records")

    p = sub.add_parser("partitions", help="list all partitions of n")
    p.add_argument("n", type=int)
    add_format(p)

    p = sub.add_parser("content-poly", help="content polynomial of a partition")
    p.add_argument("partition", type=_partition_arg,
                   help='comma-separated parts, e.g. "6,4,2"; "" or "0" is empty')
    add_format(p)

    p = sub.add_parser("hook-poly", help="hook polynomial of a partition")
    p.add_argument("partition", type=_partition_arg)
    add_format(p)

    p = sub.add_parser("psi", help="solve the annihilation recursion")
    p.add_argument("--geometry", required=True,
                   choices=[t.value for t in GeometryTag])
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--no-cache", action="store_true",
                   help="recompute even if a cached result exists")
    add_format(p)

    p = sub.add_parser("closed-form",
                       help="hook-content closed form of one coefficient")
    p.add_argument("--geometry", required=True,
                   choices=[t.value for t in GeometryTag])
    p.add_argument("--partition", type=_partition_arg, required=True)
    add_format(p)

    p = sub.add_parser("invariant",
                       help="colored invariant of the standard unknot")
    p.add_argument("--partition", type=_partition_arg, required=True)
    add_format(p)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", required=True, choices=SUITES)
    p.add_argument("--max-degree", type=int, default=None,
                   help="degree bound (suite-specific default)")

    p = sub.add_parser("solve-coefficients",
                       help="solve for unknown signed-monomial operator coefficients")
    p.add_argument("--geometry", required=True, choices=("c3", "unknot"))
    add_format(p)

    return parser


def _cmd_partitions(args) -> int:
    if args.n < 0:
        print("n must be nonnegative", file=sys.stderr)
        return 2
    parts = enumerate_partitions(args.n)
    if args.format == "records":
        header = {"kind": "partition-list", "schema": SCHEMA_VERSION, "n": args.n,
                  "count": len(parts)}
        rows = [{"partition": str(p)} for p in parts]
        sys.stdout.write(dumps_records([header] + rows))
    else:
        for p in parts:
            print(_display(p))
    return 0


def _print_poly(poly, kind: str, partition: Partition, fmt: str) -> None:
    if fmt == "records":
        header = {"kind": kind, "schema": SCHEMA_VERSION,
                  "partition": str(partition)}
        sys.stdout.write(dumps_records([header, {"terms": poly_records(poly)}]))
    else:
        print(poly)


def _cmd_content_poly(args) -> int:
    _print_poly(content_polynomial(args.partition), "content-polynomial",
                args.partition, args.format)
    return 0


def _cmd_hook_poly(args) -> int:
    _print_poly(hook_polynomial(args.partition), "hook-polynomial",
                args.partition, args.format)
    return 0


def _psi_records_text(geom_name: str, max_degree: int) -> str:
    geom = geometry(geom_name)
    psi = solve_recursion(geom, max_degree)
    return dumps_records(skein_vector_records(
        psi, geometry=geom_name, operator=str(geom.operator)))


def _cmd_psi(args) -> int:
    if args.max_degree < 0:
        print("--max-degree must be nonnegative", file=sys.stderr)
        return 2
    if args.no_cache:
        text = _psi_records_text(args.geometry, args.max_degree)
    else:
        cache = ResultCache()
        text = cache.load(args.geometry, args.max_degree)
        if text is None:
            text = _psi_records_text(args.geometry, args.max_degree)
            cache.store(args.geometry, args.max_degree, text)
    if args.format == "records":
        sys.stdout.write(text)
    else:
        psi = skein_vector_from_records(loads_records(text))
        for p, coeff in psi.items():
            print(f"{_display(p)}: {coeff}")
    return 0


def _cmd_closed_form(args) -> int:
    value = closed_form(args.geometry, args.partition)
    if args.format == "records":
        header = {"kind": "closed-form", "schema": SCHEMA_VERSION,
                  "geometry": args.geometry, "partition": str(args.partition)}
        sys.stdout.write(dumps_records([header, rf_record(value)]))
    else:
        print(f"{_display(args.partition)}: {value}")
    return 0


def _cmd_invariant(args) -> int:
    value = colored_unknot_invariant(args.partition)
    if args.format == "records":
        header = {"kind": "unknot-invariant", "schema": SCHEMA_VERSION,
                  "partition": str(args.partition)}
        sys.stdout.write(dumps_records([header, rf_record(value)]))
    else:
        print(f"{_display(args.partition)}: {value}")
    return 0


def _cmd_verify(args) -> int:
    if args.max_degree is not None and args.max_degree < 0:
        print("--max-degree must be nonnegative", file=sys.stderr)
        return 2
    report = run_suite(args.suite, args.max_degree)
    for line in report.lines():
        print(line)
    return 0 if report.passed else 1


def _cmd_solve_coefficients(args) -> int:
    template = c3_template() if args.geometry == "c3" else unknot_template()
    try:
        solutions = solve_monomial_coefficients(template)
    except NoSolutionError as exc:
        print(f"no solution: {exc}", file=sys.stderr)
        return 1
    if args.format == "records":
        header = {"kind": "coefficient-solutions", "schema": SCHEMA_VERSION,
                  "geometry": args.geometry, "count": len(solutions)}
        sys.stdout.write(dump_line(header) + "\n")
        for sol in solutions:
            row = {gen.value: poly_records(sm.to_polynomial())
                   for gen, sm in sorted(sol.items(), key=lambda kv: kv[0].value)}
            sys.stdout.write(dump_line(row) + "\n")
    else:
        for i, sol in enumerate(solutions, start=1):
            rendered = ", ".join(
                f"{gen.value} = {sm}" for gen, sm in
                sorted(sol.items(), key=lambda kv: kv[0].value))
            print(f"solution {i}: {rendered}")
    return 0


_COMMANDS = {
    "partitions": _cmd_partitions,
    "content-poly": _cmd_content_poly,
    "hook-poly": _cmd_hook_poly,
    "psi": _cmd_psi,
    "closed-form": _cmd_closed_form,
    "invariant": _cmd_invariant,
    "verify": _cmd_verify,
    "solve-coefficients": _cmd_solve_coefficients,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return _COMMANDS[args.command](args)


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
