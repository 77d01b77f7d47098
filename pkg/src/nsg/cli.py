"""Command-line front end.

Subcommands: invariants, decompose, classify, enumerate, verify.
Semigroups are given as a comma-separated generator list ("10,11,26")
or a gap list prefixed with "gaps:" ("gaps:1,2,4"), either as the
positional argument or through --gens / --gaps.

Exit codes: 0 success, 1 verification found counterexamples, 2 usage
or parse error (argparse uses 2 as well), 3 semigroup construction
error.  Standard output carries only the payload; diagnostics go to
standard error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
from typing import Optional

from .classify import classify
from .core import NumericalSemigroup, from_gaps, from_generators, invariant_report
from .decomp import decompose
from .enumeration import enumerate_by_conductor, enumerate_by_genus
from .errors import NsgError, UnknownTheorem
from .typeseq import type_sequence
from .verify import verify

_FILTER_FIELDS = ("e", "c", "genus", "n", "r", "b", "k")
_CLAUSE = re.compile(
    r"^\s*(e|c|genus|n|r|b|k)\s*(<=|>=|!=|==|=|<|>)\s*(-?\d+)\s*$"
)
_OPS = {
    "=": lambda a, b: a == b,
    "==": lambda a, b: a == b,
    "!=": lambda a, b: a != b,
    "<": lambda a, b: a < b,
    "<=": lambda a, b: a <= b,
    ">": lambda a, b: a > b,
    ">=": lambda a, b: a >= b,
}


class _FilterError(ValueError):
    pass


def _parse_filter(expr: str):
    clauses = []
    for part in re.split(r"\s+and\s+", expr.strip(), flags=re.IGNORECASE):
        m = _CLAUSE.match(part)
        if not m:
            raise _FilterError(
                f"bad filter clause {part!r}; expected <field> <op> <integer> "
                f"with field in {', '.join(_FILTER_FIELDS)}"
            )
        clauses.append((m.group(1), _OPS[m.group(2)], int(m.group(3))))

    def test(row: dict) -> bool:
        return all(op(row[field], value) for field, op, value in clauses)

    return test


def _parse_spec(text: str) -> NumericalSemigroup:
    text = text.strip()
    if text.lower().startswith("gaps:"):
        body = text[5:]
        values = [int(tok) for tok in body.split(",") if tok.strip()]
        return from_gaps(values)
    values = [int(tok) for tok in text.split(",") if tok.strip()]
    return from_generators(values)


def _semigroup_from_args(args) -> NumericalSemigroup:
    sources = [s for s in (args.spec, args.gens, args.gaps) if s]
    if len(sources) != 1:
        raise _FilterError("give exactly one semigroup (positional, --gens or --gaps)")
    if args.gaps:
        return _parse_spec("gaps:" + args.gaps)
    return _parse_spec(args.gens or args.spec)


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps(payload))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, delimiter=";")
        keys = list(payload)
        writer.writerow(keys)
        writer.writerow([_csv_cell(payload[k]) for k in keys])
    else:
        for line in text_lines:
            print(line)


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return "-".join(str(v) for v in value)
    return value


def _cmd_invariants(args) -> int:
    S = _semigroup_from_args(args)
    rep = invariant_report(S)
    ts = list(type_sequence(S).entries)
    payload = {
        "e": rep.e, "c": rep.c, "delta": rep.delta, "n": rep.n, "r": rep.r,
        "b": rep.b, "k": rep.k, "s": rep.s, "edim": rep.edim, "ts": ts,
    }
    lines = [f"S = <{S.spec_string()}>"] + [
        f"{key} = {value}" for key, value in payload.items() if key != "ts"
    ] + [f"type sequence = {ts}"]
    _emit(payload, args.format, lines)
    return 0


def _cmd_decompose(args) -> int:
    S = _semigroup_from_args(args)
    d = decompose(S)
    payload = {
        "e": d.e, "c": d.c, "p": d.p, "h": d.h, "k": d.k,
        "ys": list(d.ys), "ls": list(d.ls),
    }
    lines = [f"S = <{S.spec_string()}>", d.display()]
    _emit(payload, args.format, lines)
    return 0


def _cmd_classify(args) -> int:
    S = _semigroup_from_args(args)
    cls = classify(S)
    payload = {
        "label": cls.label,
        "b": cls.b,
        "r": cls.r,
        "in_range": cls.in_range,
        "matches": [
            {"label": m.label, "tag": m.tag, "branch": m.branch, "params": dict(m.params)}
            for m in cls.matches
        ],
    }
    if cls.q is not None:
        payload["q"] = cls.q
    lines = [f"S = <{S.spec_string()}>", f"label = {cls.label}"]
    for m in cls.matches:
        branch = f" [{m.branch}]" if m.branch else ""
        lines.append(f"  matches {m.label}{branch} {dict(m.params)}")
    if cls.q is not None:
        lines.append(f"q = {cls.q}")
    _emit(payload, args.format, lines)
    return 0


_ROW_HEADER = (
    "generators", "e", "c", "genus", "n", "r", "b", "k", "p", "h",
    "type_sequence", "label",
)


def _row(S: NumericalSemigroup) -> dict:
    rep = invariant_report(S)
    d = decompose(S)
    return {
        "generators": S.min_generators,
        "e": rep.e, "c": rep.c, "genus": rep.delta, "n": rep.n, "r": rep.r,
        "b": rep.b, "k": rep.k, "p": d.p, "h": d.h,
        "type_sequence": type_sequence(S).entries,
        "label": classify(S).label,
    }


def _cmd_enumerate(args) -> int:
    if (args.max_genus is None) == (args.max_conductor is None):
        print("exactly one of --max-genus / --max-conductor is required", file=sys.stderr)
        return 2
    try:
        test = _parse_filter(args.filter) if args.filter else (lambda row: True)
    except _FilterError as err:
        print(str(err), file=sys.stderr)
        return 2
    stream = (
        enumerate_by_genus(args.max_genus)
        if args.max_genus is not None
        else enumerate_by_conductor(args.max_conductor)
    )
    out = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = None
        if args.format == "csv":
            writer = csv.writer(out, delimiter=";")
            writer.writerow(_ROW_HEADER)
        total = matched = 0
        for S in stream:
            total += 1
            row = _row(S)
            scalar = {k: row[k] for k in ("e", "c", "genus", "n", "r", "b", "k")}
            if not test(scalar):
                continue
            matched += 1
            if args.format == "csv":
                writer.writerow([
                    ",".join(map(str, row["generators"])),
                    row["e"], row["c"], row["genus"], row["n"], row["r"], row["b"],
                    row["k"], row["p"], row["h"],
                    "-".join(map(str, row["type_sequence"])),
                    row["label"],
                ])
            elif args.format == "json":
                json_row = dict(row)
                json_row["generators"] = list(row["generators"])
                json_row["ts"] = list(json_row.pop("type_sequence"))
                print(json.dumps(json_row), file=out)
            else:
                print(
                    f"<{','.join(map(str, row['generators']))}>"
                    f" genus={row['genus']} b={row['b']} label={row['label']}",
                    file=out,
                )
        print(f"enumerated {total} semigroups, {matched} matched", file=sys.stderr)
    finally:
        if args.out:
            out.close()
    return 0


def _cmd_verify(args) -> int:
    workers = args.workers
    if workers is None:
        env = os.environ.get("NSG_THREADS", "")
        workers = int(env) if env.isdigit() and int(env) > 0 else (os.cpu_count() or 1)
    try:
        report = verify(args.theorem_id, args.max_genus, workers=workers)
    except UnknownTheorem:
        print(f"unknown theorem id {args.theorem_id!r}", file=sys.stderr)
        return 2
    payload = {
        "theorem_id": report.theorem_id,
        "bound": report.bound,
        "checked": report.checked,
        "verified": report.verified,
        "counterexamples": [list(pair) for pair in report.counterexamples],
        "elapsed": round(report.elapsed, 3),
    }
    if args.format == "json":
        print(json.dumps(payload))
    else:
        status = "verified" if report.verified else "FAILED"
        print(
            f"{report.theorem_id}: checked {report.checked} semigroups"
            f" ({report.bound}) in {report.elapsed:.2f}s - {status}"
        )
        for gens, name in report.counterexamples:
            print(f"  counterexample <{gens}>: {name}")
    return 0 if report.verified else 1


def _add_semigroup_args(sub) -> None:
    sub.add_argument("spec", nargs="?", help="generators '4,7,13' or 'gaps:1,2,3,5,6'")
    sub.add_argument("--gens", help="comma-separated generator list")
    sub.add_argument("--gaps", help="comma-separated gap list")
    sub.add_argument("--format", choices=("json", "csv", "text"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsg",
        description="Invariants, decompositions and classification of numerical semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="e, c, genus, type, b, k, type sequence")
    _add_semigroup_args(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("decompose", help="skeleton and towers below the conductor")
    _add_semigroup_args(p)
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("classify", help="classification family for b <= 2(r-1)")
    _add_semigroup_args(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("enumerate", help="stream all semigroups up to a bound")
    p.add_argument("--max-genus", type=int)
    p.add_argument("--max-conductor", type=int)
    p.add_argument("--filter", help="conjunction like 'b=1 and e<=5'")
    p.add_argument("--format", choices=("csv", "json", "text"), default="csv")
    p.add_argument("--out", help="write rows to a file instead of stdout")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run one verification suite exhaustively")
    p.add_argument("theorem_id")
    p.add_argument("--max-genus", type=int, required=True)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--workers", type=int, help="override NSG_THREADS / cpu count")
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _FilterError as err:
        print(str(err), file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 2
    except NsgError as err:
        print(f"{type(err).__name__}: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
