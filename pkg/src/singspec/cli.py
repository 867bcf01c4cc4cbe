"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 method not applicable (or no bound),
3 golden-table check failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from typing import Sequence

from .bounds import METHODS, BoundReport, compare_methods, conjecture_sweep, mixed_feasible, run_method
from .catalog import InvalidGerm, parse_configuration, parse_germ
from .combinatorics import gamma_power_spectrum
from .errors import BoundError
from .spectrum import format_rational, gamma, star_power
from .tables import KNOWN_DISCREPANCIES, PRESETS, build_table

EXIT_OK, EXIT_USAGE, EXIT_INAPPLICABLE, EXIT_CHECK = 0, 1, 2, 3
FORMATS = ("text", "json", "csv", "markdown")
CSV_COLUMNS = ("method", "n", "d", "germ", "max_r", "binding", "notes")

# germ label and n -> preset whose printed table covers it
_PRESET_FOR = {("A:1", 3): "a1-n3", ("A:1", 4): "a1-n4", ("E6t", 3): "e6-n3"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- output helpers ----------------------------------------------------------

def _use_color(stream) -> bool:
    mode = os.environ.get("SPECTRA_COLOR", "auto").lower()
    if mode == "never":
        return False
    return hasattr(stream, "isatty") and stream.isatty()


_COLORS = {"match": "32", "known": "33", "mismatch": "31"}


def _paint(text: str, status: str, color: bool) -> str:
    if not color or status not in _COLORS:
        return text
    return f"\033[{_COLORS[status]}m{text}\033[0m"


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _markdown(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(x) for x in r) + " |" for r in rows]
    return "\n".join(lines)


def _load_defaults(path: str | None) -> dict[str, str]:
    path = path or os.environ.get("SINGSPEC_CONFIG")
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    out = {}
    for raw in lines:
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise UsageError(f"bad config line {raw!r}; expected key=value")
        out[key.strip()] = value.strip()
    return out


# -- gamma -------------------------------------------------------------------

def cmd_gamma(args) -> int:
    if args.d < 1 or args.factors < 1:
        raise UsageError("--d and --factors must be positive")
    if args.d <= 60:
        spec = star_power(gamma(args.d), args.factors)
    else:
        spec = gamma_power_spectrum(args.factors, args.d)
    if args.format == "text":
        print(spec.to_text())
    elif args.format == "json":
        print(spec.to_json())
    else:
        rows = [(format_rational(q), m) for q, m in spec.items()]
        if args.format == "csv":
            print(_csv([("value", "mult"), *rows]))
        else:
            print(_markdown(("value", "mult"), rows))
    return EXIT_OK


# -- bound -------------------------------------------------------------------

def _binding_text(report: BoundReport) -> str:
    obj = report.binding_obj()
    if not obj:
        return ""
    (k, v), = obj.items()
    return f"{k}={v}"


def _discrepancy_notes(label: str, n: int, d: int, method: str) -> tuple[str, ...]:
    preset = _PRESET_FOR.get((label, n))
    hit = KNOWN_DISCREPANCIES.get((preset, d, method)) if preset else None
    if hit is None:
        return ()
    return (f"differs from the published {preset} table: {hit[1]}",)


def _render_reports(reports: list[BoundReport], n: int, d: int, label: str, fmt: str, single: bool) -> str:
    if fmt == "json":
        objs = [r.to_json_obj() for r in reports]
        return json.dumps(objs[0] if single else objs)
    rows = [
        (r.method, n, d, label, "" if r.max_r is None else r.max_r, _binding_text(r), "; ".join(r.notes))
        for r in reports
    ]
    if fmt == "csv":
        return _csv([CSV_COLUMNS, *rows])
    if fmt == "markdown":
        return _markdown(CSV_COLUMNS, rows)
    lines = []
    for r in reports:
        value = "n/a" if r.max_r is None else str(r.max_r)
        extra = [x for x in (_binding_text(r), *r.notes) if x]
        lines.append(f"{r.method}: {value}" + (f"  ({'; '.join(extra)})" if extra else ""))
    return "\n".join(lines)


def cmd_bound(args) -> int:
    config, n, d = parse_configuration(args.germ, n=args.n, d=args.d)
    if d is None:
        raise UsageError("degree not given; pass --d or an @d= suffix")
    if args.feasible:
        verdict = mixed_feasible(n, d, config)
        if args.format == "json":
            obj = {
                "configuration": str(config),
                "n": n,
                "d": d,
                "feasible": verdict.feasible,
                "violated": verdict.violated.to_json_obj() if verdict.violated else None,
            }
            print(json.dumps(obj))
        elif verdict:
            print(f"feasible: {config} passes every conical inequality")
        else:
            v = verdict.violated
            lhs = sum(c * r for c, r in zip(v.coefficients, config.counts))
            print(f"infeasible: {config} violates p={format_rational(v.tag)} ({lhs} > {v.rhs})")
        return EXIT_OK
    if len(config.entries) != 1:
        raise UsageError("bounds take a single germ type; use --feasible for mixtures")
    g = config.germs[0]
    if args.method == "all":
        reports = compare_methods(n, d, g)
    else:
        try:
            reports = [run_method(args.method, n, d, g)]
        except BoundError as exc:
            print(f"{args.method}: {exc}", file=sys.stderr)
            return EXIT_INAPPLICABLE
    reports = [
        BoundReport(r.method, r.max_r, r.constraints, r.notes + _discrepancy_notes(g.label, n, d, r.method), r.binding)
        for r in reports
    ]
    print(_render_reports(reports, n, d, g.label, args.format, args.method != "all"))
    return EXIT_OK


# -- table -------------------------------------------------------------------

def cmd_table(args) -> int:
    table = build_table(args.preset)
    color = _use_color(sys.stdout)
    header = [table.key, *table.columns]
    records = table.records()
    if args.format == "json":
        obj = {"preset": table.preset, "title": table.title, "rows": records}
        if args.check:
            obj["check"] = {
                "ok": table.ok,
                "known": [
                    {"row": _fmt_row(r), "column": c, "printed": x.expected, "computed": x.value, "reason": x.note}
                    for r, c, x in table.known
                ],
                "mismatches": [
                    {"row": _fmt_row(r), "column": c, "printed": x.expected, "computed": x.value}
                    for r, c, x in table.mismatches
                ],
            }
        print(json.dumps(obj))
    else:
        rows = [[rec[h] for h in header] for rec in records]
        if args.format == "csv":
            print(_csv([header, *rows]))
        elif args.format == "markdown":
            print(_markdown(header, rows))
        else:
            print(table.title)
            print(_text_grid(table, header, color))
        if args.check:
            out = sys.stdout if args.format == "text" else sys.stderr
            _print_check(table, out, color and out is sys.stdout)
    if args.check and not table.ok:
        return EXIT_CHECK
    return EXIT_OK


def _fmt_row(row) -> str:
    return ",".join(map(str, row)) if isinstance(row, tuple) else str(row)


def _text_grid(table, header, color) -> str:
    body = []
    for row, cells in table.rows:
        line = [_fmt_row(row)]
        for col in table.columns:
            cell = cells.get(col)
            line.append(("", "") if cell is None else (cell.display(), cell.status))
        body.append(line)
    widths = [len(h) for h in header]
    for line in body:
        widths[0] = max(widths[0], len(line[0]))
        for i, (text, _) in enumerate(line[1:], 1):
            widths[i] = max(widths[i], len(text))
    out = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    for line in body:
        parts = [line[0].rjust(widths[0])]
        for (text, status), w in zip(line[1:], widths[1:]):
            parts.append(_paint(text.rjust(w), status, color))
        out.append("  ".join(parts))
    return "\n".join(out)


def _print_check(table, out, color):
    n_match = sum(1 for _, _, x in table.cells() if x.status == "match")
    for r, c, x in table.known:
        print(_paint(f"known  {table.key}={_fmt_row(r)} {c}: printed {x.expected}, computed {x.value} ({x.note})",
                     "known", color), file=out)
    for r, c, x in table.mismatches:
        print(_paint(f"FAIL   {table.key}={_fmt_row(r)} {c}: printed {x.expected}, computed {x.value}",
                     "mismatch", color), file=out)
    verdict = "PASS" if table.ok else "FAIL"
    print(f"check {verdict}: {n_match} match, {len(table.known)} known discrepancies, "
          f"{len(table.mismatches)} mismatches", file=out)


# -- sweep -------------------------------------------------------------------

def parse_range(text: str) -> list[int]:
    """``3..10``, ``3,4,7`` or ``5``; an empty string or ``5..4`` is empty."""
    text = text.strip()
    if not text:
        return []
    out = []
    for part in text.split(","):
        lo, dots, hi = part.partition("..")
        try:
            if dots:
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad range {text!r}") from None
    return out


def cmd_sweep(args) -> int:
    germs = args.germ or ["A:1"]
    n_values, d_values = parse_range(args.n_range), parse_range(args.d_range)
    for label in germs:
        for n in n_values:
            parse_germ(label, n)  # fail early on bad germs
    rows = conjecture_sweep(n_values, d_values, [(g, lambda n, g=g: parse_germ(g, n)) for g in germs])
    text = "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc}") from None
        equal = sum(1 for r in rows if r.get("status") == "equal")
        print(f"{len(rows)} rows, {equal} equal, written to {args.out}")
    return EXIT_OK


# -- entry point ---------------------------------------------------------------

def build_parser(defaults: dict[str, str] | None = None) -> argparse.ArgumentParser:
    defaults = defaults or {}
    fmt = defaults.get("format", "text")
    if fmt not in FORMATS:
        raise UsageError(f"config format must be one of {', '.join(FORMATS)}, got {fmt!r}")

    parser = _Parser(prog="singspec", description="Spectra and bounds for singular hypersurfaces.")
    parser.add_argument("--config", help="key=value defaults file (also $SINGSPEC_CONFIG)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=FORMATS, default=fmt)

    p = sub.add_parser("gamma", help="print gamma(d) star-raised to a power")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--factors", type=int, required=True)
    add_format(p)
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("bound", help="bound the number of singularities of one type")
    p.add_argument("--n", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--germ", required=True, help="e.g. A:1, E6t, PB:2,6,6, A:1*16+E6t*2@n=3,d=4")
    p.add_argument("--method", choices=(*METHODS, "all"), default="all")
    p.add_argument("--feasible", action="store_true", help="test the configuration's counts instead")
    add_format(p)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("table", help="rebuild a reference table")
    p.add_argument("--preset", choices=tuple(PRESETS), required=True)
    p.add_argument("--check", action="store_true", help="diff against the printed values")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("sweep", help="exact vs restricted Varchenko evidence, JSON lines")
    p.add_argument("--germ", action="append", help="repeatable; default A:1")
    p.add_argument("--n-range", default="3..4")
    p.add_argument("--d-range", default="3..10")
    p.add_argument("--out", default="-", help="output path, - for stdout")
    p.set_defaults(func=cmd_sweep)
    return parser


def _config_path(argv: Sequence[str]) -> str | None:
    for i, a in enumerate(argv):
        if a == "--config" and i + 1 < len(argv):
            return argv[i + 1]
        if a.startswith("--config="):
            return a.split("=", 1)[1]
    return None


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser(_load_defaults(_config_path(argv)))
        args = parser.parse_args(argv)
        return args.func(args)
    except (UsageError, InvalidGerm, ValueError) as exc:
        print(f"singspec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
