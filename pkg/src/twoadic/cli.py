"""Command-line front end: ``generate``, ``analyze`` and ``verify``.

Exit codes: 0 on success or a passing suite, 1 when a suite finds a
violation, 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import asdict, dataclass, field

from . import adic, circulant, fieldlc, harness
from .sequences import (
    BinarySequence,
    autocorrelation_profile,
    format_sequence,
    gen_dhl,
    gen_hall_sextic,
    gen_legendre,
    gen_m_sequence,
    gen_twin_prime,
    parse_sequence,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GENERATORS = {
    "legendre": gen_legendre,
    "dhl": gen_dhl,
    "twinprime": gen_twin_prime,
    "hall": gen_hall_sextic,
    "mseq": gen_m_sequence,
}

CSV_COLUMNS = ("family", "param", "N", "weight", "class", "AC", "LC2", "det", "cert")


@dataclass
class AnalysisRecord:
    family: str
    param: str
    source: str
    N: int
    weight: int
    klass: str = ""
    AC: int | None = None
    LC2: int | None = None
    LC: dict[str, int] = field(default_factory=dict)
    det: int | str = "skipped"
    cert: str = "skipped"
    notes: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["class"] = d.pop("klass")
        order = ("family", "param", "source", "N", "weight", "class", "AC", "LC2", "LC",
                 "det", "cert", "notes")
        return {k: d[k] for k in order}

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisRecord":
        d = dict(d)
        d["klass"] = d.pop("class")
        return cls(**d)

    def csv_row(self) -> list[str]:
        d = self.to_dict()
        return ["" if d[c] is None else str(d[c]) for c in CSV_COLUMNS]


def record_to_json(rec: AnalysisRecord) -> str:
    return json.dumps(rec.to_dict(), indent=2) + "\n"


def record_from_json(text: str) -> AnalysisRecord:
    return AnalysisRecord.from_dict(json.loads(text))


def rows_to_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def csv_to_rows(text: str) -> tuple[list[str], list[list[str]]]:
    rows = list(csv.reader(io.StringIO(text)))
    return rows[0], rows[1:]


def _header_fields(text: str) -> dict[str, str]:
    fields = {}
    for line in text.splitlines():
        if not line.startswith("#"):
            break
        for token in line[1:].split():
            if "=" in token:
                k, v = token.split("=", 1)
                fields[k] = v
    return fields


def analyze_sequence(
    s: BinarySequence,
    primes: list[int],
    det_bound: int = circulant.DET_BOUND,
    family: str = "input",
    param: str = "",
    source: str = "",
) -> AnalysisRecord:
    """Run every analysis on ``s``; a failure in one field does not stop the others."""
    rec = AnalysisRecord(family, param, source, s.period, s.weight)
    try:
        rec.klass = autocorrelation_profile(s).classification
    except Exception as exc:  # noqa: BLE001 - fields are independent
        rec.notes.append(f"autocorrelation failed: {exc}")
    try:
        prof = adic.two_adic_fraction(s)
        rec.AC = prof.complexity
        if prof.denominator == 1:
            rec.notes.append(adic.DEGENERATE_NOTE if prof.numerator == 0 else
                             "all-one sequence: fraction -1/1, AC = 1")
    except Exception as exc:  # noqa: BLE001
        rec.notes.append(f"2-adic complexity failed: {exc}")
    for p in sorted(set(primes) | {2}):
        try:
            lc = fieldlc.lc_prime_field(s, p).lc
        except Exception as exc:  # noqa: BLE001
            rec.notes.append(f"LC over GF({p}) failed: {exc}")
            continue
        rec.LC[str(p)] = lc
        if p == 2:
            rec.LC2 = lc
    if s.period <= det_bound:
        try:
            det = circulant.circulant_det_exact(s, det_bound)
            rec.det = det
            if det == 0:
                rec.cert = "inapplicable"
            elif adic.maximality_certificate(s, det):
                rec.cert = "max"
            else:
                rec.cert = f"lower_bound={adic.ac_lower_bound_from_det(s.period, det)}"
        except Exception as exc:  # noqa: BLE001
            rec.det = "error"
            rec.cert = "error"
            rec.notes.append(f"determinant failed: {exc}")
    return rec


def _parse_primes(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}") from None


def _load_input(arg: str) -> tuple[BinarySequence, dict[str, str], str]:
    if arg == "-":
        text = sys.stdin.read()
        source = "<stdin>"
    elif os.path.exists(arg):
        with open(arg, encoding="ascii") as fh:
            text = fh.read()
        source = arg
    else:
        text = arg
        source = "<literal>"
    return parse_sequence(text), _header_fields(text), source


def _emit_records(recs: list[AnalysisRecord], fmt: str, out) -> None:
    if fmt == "json":
        if len(recs) == 1:
            out.write(record_to_json(recs[0]))
        else:
            out.write(json.dumps([r.to_dict() for r in recs], indent=2) + "\n")
    elif fmt == "csv":
        out.write(rows_to_csv(CSV_COLUMNS, [r.csv_row() for r in recs]))
    else:
        for rec in recs:
            d = rec.to_dict()
            width = max(len(k) for k in d)
            for k, v in d.items():
                if k == "notes":
                    for note in v:
                        out.write(f"{'note':<{width}}  {note}\n")
                    continue
                out.write(f"{k:<{width}}  {v}\n")


def cmd_generate(args) -> int:
    gen = GENERATORS[args.family]
    s = gen(args.parameter)
    text = format_sequence(s, [f"family={args.family} param={args.parameter} N={s.period}"])
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_analyze(args) -> int:
    recs = []
    for item in args.inputs:
        s, header, source = _load_input(item)
        recs.append(analyze_sequence(
            s, args.primes, args.det_bound,
            family=header.get("family", "input"), param=header.get("param", ""),
            source=source,
        ))
    _emit_records(recs, args.format, sys.stdout)
    return EXIT_OK


def _fmt_value(v) -> str:
    if isinstance(v, float):
        return f"{v:.3g}"
    return str(v)


def cmd_verify(args) -> int:
    result = harness.run_suite(args.suite, args.bound, jobs=args.jobs, seed=args.seed)
    out = sys.stdout
    if args.format == "json":
        payload = {"suite": result.name, "bound": result.bound, "passed": result.passed,
                   "instances": len(result.rows), "rows": result.rows,
                   "failures": result.failures}
        out.write(json.dumps(payload, indent=2, default=str) + "\n")
    elif args.format == "csv":
        keys: list[str] = []
        for row in result.rows:
            keys += [k for k in row if k not in keys]
        out.write(rows_to_csv(keys, [[_fmt_value(r.get(k, "")) for k in keys] for r in result.rows]))
    else:
        for row in result.rows:
            tag = "PASS" if row.get("ok", True) else "FAIL"
            body = " ".join(f"{k}={_fmt_value(v)}" for k, v in row.items() if k != "ok")
            out.write(f"{tag} {body}\n")
        for row in result.failures:
            out.write(f"counterexample: {json.dumps(row, default=str)}\n")
        verdict = "PASS" if result.passed else "FAIL"
        out.write(f"{verdict} {result.name} bound={result.bound}: "
                  f"{len(result.rows) - len(result.failures)}/{len(result.rows)} instances\n")
    return EXIT_OK if result.passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    common.add_argument("--primes", type=_parse_primes, default=[2],
                        help="comma-separated primes for LC_p (LC_2 is always computed)")
    common.add_argument("--det-bound", type=int, default=circulant.DET_BOUND,
                        help="largest period for which det(A) is computed")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--seed", type=int, default=0, help="seed for random-sequence suites")

    parser = argparse.ArgumentParser(prog="twoadic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write one period of a sequence family")
    g.add_argument("family", choices=sorted(GENERATORS))
    g.add_argument("parameter", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", parents=[common], help="analyze sequence files")
    a.add_argument("inputs", nargs="+", help="sequence file, '-' for stdin, or a literal 0/1 string")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(harness.SUITES))
    v.add_argument("bound", type=int)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"twoadic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
