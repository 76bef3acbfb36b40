"""Command-line front end.

Exit status: 0 on success, 1 on a usage or input error, 2 when ``verify``
finds a disagreement between implementations.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import complexity
from .baseline import verify_equivalence
from .core import (
    POLYNOMIAL,
    VALUED,
    Assignment,
    FunctionSpec,
    ReducedVector,
    TermLimitExceeded,
    anf_terms,
    eval_carrier,
    eval_spectrum,
    format_anf,
    spec_from_vector,
)
from .transform import transform_vector

KIND_ALIASES = {"valued": VALUED, VALUED: VALUED, "polynomial": POLYNOMIAL, POLYNOMIAL: POLYNOMIAL}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.replace(";", ",").split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, help="number of variables")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--indices", type=_int_list, help="comma-separated index set, e.g. 5,7,8")
    g.add_argument("--vector", help="bit string, index 0 leftmost, e.g. 0011001")


def _read_vector(args) -> ReducedVector:
    if args.vector is not None:
        try:
            v = ReducedVector.from_string(args.vector)
        except ValueError as exc:
            raise UsageError(str(exc))
        if args.n is not None and args.n != v.n:
            raise UsageError(f"--n {args.n} disagrees with vector length {len(v)}")
        return v
    if args.n is None:
        raise UsageError("give --n with --indices, or --vector")
    if args.indices is None:
        raise UsageError("give --indices or --vector")
    try:
        return ReducedVector.from_indices(args.n, FunctionSpec(args.n, args.indices).indices)
    except ValueError as exc:
        raise UsageError(str(exc))


def _emit_vector(v: ReducedVector, fmt: str, kind: str) -> str:
    if fmt == "record":
        return spec_from_vector(v, kind).to_json()
    return v.to_string()


def _cmd_convert(args, out_kind: str) -> int:
    v = _read_vector(args)
    print(_emit_vector(transform_vector(v).vector, args.format, out_kind))
    return 0


def _cmd_transform(args) -> int:
    v = _read_vector(args)
    res = transform_vector(v)
    if args.format == "record":
        print(json.dumps({"n": v.n, "input": str(v), "output": str(res.vector),
                          "primitive_checks": res.ops.primitive_checks,
                          "accumulation_xors": res.ops.accumulation_xors}))
    else:
        print(res.vector.to_string())
    return 0


def _cmd_eval(args) -> int:
    v = _read_vector(args)
    if (args.weight is None) == (args.assignment is None):
        raise UsageError("give exactly one of --weight or --assignment")
    try:
        if args.assignment is not None:
            x = Assignment.from_bits(args.assignment)
        else:
            x = Assignment(v.n, args.weight)
        fn = eval_carrier if KIND_ALIASES[args.kind] == VALUED else eval_spectrum
        print(fn(v, x))
    except ValueError as exc:
        raise UsageError(str(exc))
    return 0


def _cmd_anf(args) -> int:
    v = _read_vector(args)
    gamma = v if KIND_ALIASES[args.kind] == POLYNOMIAL else transform_vector(v).vector
    try:
        terms = anf_terms(gamma, args.term_limit)
    except TermLimitExceeded as exc:
        raise UsageError(str(exc))
    print(format_anf(terms))
    return 0


def _cmd_verify(args) -> int:
    try:
        report = verify_equivalence(args.max_n, args.exhaustive_max_n, args.random_sets, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc))
    for m in report.mismatches:
        print(f"MISMATCH n={m.n} indices={list(m.indices)} combinatorial={m.combinatorial} "
              f"triangle={m.triangle} oracle={m.oracle}", file=sys.stderr)
    print(f"checked {report.checked} index sets, {len(report.mismatches)} mismatches")
    return 0 if report.ok else 2


def _write(data: bytes, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(data.decode())
    else:
        Path(path).write_bytes(data)


def _cmd_bench(args) -> int:
    if args.table:
        _write(complexity.emit_table_csv(complexity.table_comparison()), args.csv)
        return 0
    if not args.ns or args.indices is None:
        raise UsageError("bench needs --ns and --indices (or --table)")
    try:
        rows = complexity.bench_suite(args.ns, args.indices, args.repetitions, args.warmup)
    except ValueError as exc:
        raise UsageError(str(exc))
    _write(complexity.emit_csv(rows), args.csv)
    if args.svg:
        Path(args.svg).write_bytes(complexity.emit_svg_plot(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sbfpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("to-carrier", help="polynomial numbers (or spectrum) -> carrier vector")
    _add_input(p)
    p.add_argument("--format", choices=["text", "record"], default="text")
    p.set_defaults(func=lambda a: _cmd_convert(a, VALUED))

    p = sub.add_parser("to-spectrum", help="valued numbers (or carrier) -> reduced spectrum")
    _add_input(p)
    p.add_argument("--format", choices=["text", "record"], default="text")
    p.set_defaults(func=lambda a: _cmd_convert(a, POLYNOMIAL))

    p = sub.add_parser("transform", help="apply the self-inverse transform with op counts")
    _add_input(p)
    p.add_argument("--format", choices=["text", "record"], default="text")
    p.set_defaults(func=_cmd_transform)

    p = sub.add_parser("eval", help="evaluate a function on a weight or a full assignment")
    _add_input(p)
    p.add_argument("--kind", choices=sorted(KIND_ALIASES), default="valued",
                   help="how to read the input: valued (carrier) or polynomial (spectrum)")
    p.add_argument("--weight", type=int)
    p.add_argument("--assignment", help="full assignment x_1..x_n as a bit string")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("anf", help="print the explicit monomial expansion")
    _add_input(p)
    p.add_argument("--kind", choices=sorted(KIND_ALIASES), default="polynomial")
    p.add_argument("--term-limit", type=int, default=10_000)
    p.set_defaults(func=_cmd_anf)

    p = sub.add_parser("verify", help="three-way equivalence check")
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--exhaustive-max-n", type=int, default=8)
    p.add_argument("--random-sets", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("bench", help="operation-count benchmark, CSV output")
    p.add_argument("--ns", type=_int_list, help="variable counts, e.g. 1024,2048,4096")
    p.add_argument("--indices", type=_int_list, help="index set used at every n, e.g. 16")
    p.add_argument("--repetitions", type=int, default=3)
    p.add_argument("--warmup", type=int, default=1)
    p.add_argument("--seed", type=int, default=0, help="accepted for reproducibility; "
                   "the op-count benchmark itself is deterministic")
    p.add_argument("--csv", help="output path (default stdout)")
    p.add_argument("--svg", help="also write a log-log plot here")
    p.add_argument("--table", action="store_true",
                   help="emit measured counts next to the reference table instead")
    p.set_defaults(func=_cmd_bench)
    return parser


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"sbfpoly: error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
