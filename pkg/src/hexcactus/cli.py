"""Command-line front end.

Every command writes one JSON record to stdout (or CSV rows with
``--format csv``). Exit status: 0 ok, 1 usage error, 2 computation error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

import mpmath

from .asymptotics import asymptotic_report
from .cactus_graph import AttachmentSequence, AttachmentType, AuxVariant, build_aux, build_chain, to_dot
from .exact_count import IndexKind, SizeLimitExceeded, count_brute, count_chain, count_recursive
from .expectation import (
    ProbabilityTriple,
    expect_states,
    format_rational,
    gf_closed_form,
    series_expand,
    special_case_gf,
)
from .random_model import monte_carlo, parse_seed
from .verify import run_checks

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _kind(text: str) -> IndexKind:
    try:
        return IndexKind.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _probs(text: str) -> ProbabilityTriple:
    try:
        return ProbabilityTriple.parse(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _seed(text: str) -> int:
    try:
        return parse_seed(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def _positive(text: str) -> int:
    v = _nonneg(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hexcactus", description="Hosoya and Merrifield-Simmons indices of random hexagonal cacti")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help: str, formats=("json", "csv")) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--format", choices=formats, default=formats[0])
        return sp

    sp = add("expect", "expected indices for n = 0..N")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--probs", type=_probs, required=True)
    sp.add_argument("--aux", action="store_true", help="include the pendant-path families")

    sp = add("series", "generating-function coefficients")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--terms", type=_positive, required=True)
    sp.add_argument("--probs", type=_probs)
    sp.add_argument("--dosmal", choices=["ortho", "meta", "para"], help="use the Doslic-Maloy special case instead")

    sp = add("gf", "closed-form generating function")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--probs", type=_probs, required=True)

    sp = add("count", "exact index of one chain")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--seq", required=True, help="attachment choices over o, m, p")
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--engine", choices=["chain", "brute", "recursive"], default="chain")

    sp = add("graph", "export a chain as DOT", formats=("dot", "json"))
    sp.add_argument("--seq", required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--aux", choices=["prime", "tilde", "hat"])
    sp.add_argument("--pendant", choices=["o", "m", "p"])

    sp = add("sample", "Monte Carlo estimate")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--probs", type=_probs, required=True)
    sp.add_argument("--trials", type=_positive, required=True)
    sp.add_argument("--seed", type=_seed, required=True)
    sp.add_argument("--workers", type=_positive, default=1)

    sp = add("asymptotic", "pole approximation vs exact vs published formula")
    sp.add_argument("--kind", type=_kind, required=True)
    sp.add_argument("--probs", type=_probs, required=True)
    sp.add_argument("--n", type=_nonneg, required=True)

    add("verify", "run the internal cross-check suite")
    return parser


def _sequence(args) -> AttachmentSequence:
    try:
        return AttachmentSequence.from_string(args.seq, args.n)
    except ValueError as exc:
        raise UsageError(str(exc))


def _echo(args) -> Dict[str, Any]:
    out = {}
    for key, val in vars(args).items():
        if key in ("command", "format") or val is None:
            continue
        if isinstance(val, IndexKind):
            val = val.value
        elif isinstance(val, ProbabilityTriple):
            val = [format_rational(v) for v in val.as_tuple()]
        out[key] = val
    return out


def _cmd_expect(args):
    states = expect_states(args.n, args.probs, args.kind)
    if not args.aux:
        return {"base": [format_rational(s.base) for s in states]}
    return {
        field: [format_rational(getattr(s, field)) for s in states]
        for field in ("base", "prime", "tilde", "hat")
    }


def _cmd_series(args):
    if args.dosmal:
        gf = special_case_gf(AttachmentType[args.dosmal.upper()], args.kind)
    elif args.probs is not None:
        gf = gf_closed_form(args.probs, args.kind)
    else:
        raise UsageError("series needs --probs or --dosmal")
    return {"coefficients": [format_rational(c) for c in series_expand(gf, args.terms)]}


def _cmd_gf(args):
    gf = gf_closed_form(args.probs, args.kind)
    return {
        "numerator": [format_rational(c) for c in gf.numerator],
        "denominator": [format_rational(c) for c in gf.denominator],
        "text": str(gf),
    }


def _cmd_count(args):
    seq = _sequence(args)
    if args.engine == "chain":
        value = count_chain(seq, args.kind)
    else:
        g = build_chain(seq)
        value = (count_brute if args.engine == "brute" else count_recursive)(g, args.kind)
    return {"value": str(value)}


def _graph_for(args):
    seq = _sequence(args)
    if args.aux is None:
        if args.pendant is not None:
            raise UsageError("--pendant requires --aux")
        return build_chain(seq)
    if args.pendant is None:
        raise UsageError("--aux requires --pendant")
    return build_aux(seq, AttachmentType.from_code(args.pendant), AuxVariant[args.aux.upper()])


def _cmd_graph(args):
    g = _graph_for(args)
    return {"vertices": g.vertex_count, "edges": g.edge_count, "dot": to_dot(g)}


def _cmd_sample(args):
    est = monte_carlo(args.n, args.probs, args.trials, args.seed, args.kind, workers=args.workers)
    return {
        "mean": mpmath.nstr(est.mean, 25),
        "std_dev": mpmath.nstr(est.std_dev, 25),
        "std_err": mpmath.nstr(est.std_err, 25),
        "trials": est.trials,
        "n": est.n,
        "kind": est.kind.value,
        "sum": str(est.total),
    }


def _cmd_asymptotic(args):
    if args.n < 2:
        raise UsageError("asymptotic needs --n >= 2")
    return asymptotic_report(args.n, args.probs, args.kind).to_dict()


def _cmd_verify(args):
    return {"checks": [{"name": r.name, "passed": r.passed, "detail": r.detail} for r in run_checks()]}


COMMANDS = {
    "expect": _cmd_expect,
    "series": _cmd_series,
    "gf": _cmd_gf,
    "count": _cmd_count,
    "graph": _cmd_graph,
    "sample": _cmd_sample,
    "asymptotic": _cmd_asymptotic,
    "verify": _cmd_verify,
}


def _csv_rows(command: str, results: Dict[str, Any]) -> List[List[Any]]:
    if command == "expect":
        fields = [f for f in ("base", "prime", "tilde", "hat") if f in results]
        return [["n", *fields]] + [[n, *(results[f][n] for f in fields)] for n in range(len(results["base"]))]
    if command == "series":
        return [["n", "coefficient"]] + [[n, c] for n, c in enumerate(results["coefficients"])]
    if command == "gf":
        rows = [["part", "power", "coefficient"]]
        for part in ("numerator", "denominator"):
            rows += [[part, k, c] for k, c in enumerate(results[part])]
        return rows
    if command == "verify":
        return [["check", "passed", "detail"]] + [[c["name"], c["passed"], c["detail"]] for c in results["checks"]]
    keys = list(results)
    return [keys, [results[k] for k in keys]]


def _write(record: Dict[str, Any], fmt: str, out) -> None:
    if fmt == "csv" and record["status"] == "ok":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(_csv_rows(record["command"], record["results"]))
        out.write(buf.getvalue())
    else:
        out.write(json.dumps(record, indent=2) + "\n")


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    command = argv[0] if argv and not argv[0].startswith("-") else None
    record: Dict[str, Any] = {"command": command, "inputs": {}, "status": "ok"}
    fmt = "json"
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        record["command"] = args.command
        record["inputs"] = _echo(args)
        results = COMMANDS[args.command](args)
    except UsageError as exc:
        record.update(status="error", error=f"usage: {exc}")
        print(f"hexcactus: {exc}", file=stderr)
        _write(record, "json", stdout)
        return EXIT_USAGE
    except (SizeLimitExceeded, ArithmeticError, ValueError) as exc:
        record.update(status="error", error=str(exc))
        print(f"hexcactus: {exc}", file=stderr)
        _write(record, "json", stdout)
        return EXIT_COMPUTE

    if fmt == "dot":
        stdout.write(results["dot"])
        return EXIT_OK
    record["results"] = results
    _write(record, fmt, stdout)
    if args.command == "verify" and not all(c["passed"] for c in results["checks"]):
        return EXIT_COMPUTE
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
