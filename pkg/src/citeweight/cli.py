"""Command-line interface: ``citeweight <command> [options]``.

Exit status: 0 success, 2 usage, 3 parse failure, 4 resolution or
validation failure.  Warnings go to stderr, never into data output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .career import (
    CareerSeries,
    average_author_rank,
    cohort_stats,
    h_trajectory,
    m_coefficient,
    m_fit,
    publication_rate,
    read_cohort_csv,
    cohort_h110_rows,
)
from .errors import CiteWeightError, ParseError
from .ingest import build_career, guess_format, load_profile, parse_publications
from .metrics import index_report, total_credit_curve
from .model import (
    HonoraryScenario,
    ModelParams,
    closed_form_h,
    closed_form_h_weighted,
    honorary_scenario,
    simulate_career,
    slowdown_factor,
)

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_INVALID = 0, 2, 3, 4
INDEX_ORDER = ("c", "h", "g", "e", "i10")


class UsageError(Exception):
    pass


def _positive_int(text):
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative_int(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _precision(text):
    value = int(text)
    if not 0 <= value <= 10:
        raise argparse.ArgumentTypeError("precision must be in 0..10")
    return value


# -- formatting -------------------------------------------------------------


def _fmt(value, precision):
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction) and value.denominator == 1:
        return str(value.numerator)
    return f"{float(value):.{precision}f}"


def _jsonable(value, precision):
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return {
            "numerator": value.numerator,
            "denominator": value.denominator,
            "value": round(float(value), precision),
        }
    if isinstance(value, float):
        return round(value, precision)
    if isinstance(value, dict):
        return {k: _jsonable(v, precision) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v, precision) for v in value]
    return value


def _table(header, rows, precision):
    cells = [list(header)] + [[_fmt(v, precision) for v in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = []
    for k, r in enumerate(cells):
        lines.append("  ".join(c.ljust(w) if i == 0 else c.rjust(w) for i, (c, w) in enumerate(zip(r, widths))))
        if k == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _csv(header, rows, precision):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v, precision) for v in row])
    return buf.getvalue()


def _render(args, header, rows, payload, notes=()):
    """Render tabular rows (table/csv) or ``payload`` (json).

    ``notes`` are extra human-readable lines: appended in table mode and
    sent to stderr in csv mode so the CSV stays a single clean table.
    """
    if args.format == "json":
        return json.dumps(_jsonable(payload, args.precision), indent=2, ensure_ascii=False) + "\n"
    if args.format == "csv":
        for note in notes:
            print(note, file=sys.stderr)
        return _csv(header, rows, args.precision)
    text = _table(header, rows, args.precision)
    if notes:
        text += "\n" + "\n".join(notes) + "\n"
    return text


def _reduction_pct(raw, mod):
    return float((Fraction(raw) - Fraction(mod)) / Fraction(raw) * 100) if raw else 0.0


# -- commands ---------------------------------------------------------------


def _load_record(args):
    for path in (args.publications, args.profile):
        if not Path(path).is_file():
            raise UsageError(f"no such file: {path}")
    fmt = args.input_format or guess_format(args.publications)
    pubs = parse_publications(Path(args.publications).read_bytes(), fmt)
    profile = load_profile(Path(args.profile).read_bytes())
    record = build_career(pubs, profile, args.snapshot_year)
    for w in record.warnings:
        print(f"warning: {json.dumps(w.as_dict(), ensure_ascii=False)}", file=sys.stderr)
    weighted_record = record.without_alphabetical() if args.strict_alphabetical else record
    return record, weighted_record


def cmd_compute(args):
    record, weighted_record = _load_record(args)
    raw = index_report(record.ranked_papers()).as_dict()
    mod = index_report(weighted_record.ranked_papers(), modified=True).as_dict()
    red = {k: _reduction_pct(raw[k], mod[k]) for k in INDEX_ORDER}
    rows = [(k, raw[k], mod[k], red[k]) for k in INDEX_ORDER]
    payload = {
        "papers": len(record.papers),
        "excluded_from_modified": len(record.papers) - len(weighted_record.papers),
        "raw": raw,
        "modified": mod,
        "reduction_pct": red,
    }
    return _render(args, ("index", "raw", "modified", "reduction_pct"), rows, payload)


def cmd_trajectory(args):
    record, weighted_record = _load_record(args)
    h = h_trajectory(record)
    if weighted_record.papers:
        h_mod = h_trajectory(weighted_record, modified=True).as_dict()
    else:
        h_mod = {}
    rate = publication_rate(record)
    ranks = average_author_rank(record).as_dict()
    rows = []
    for (year, hv), (_, count) in zip(h.points, rate.points):
        rows.append((year, hv, h_mod.get(year, 0), count, ranks.get(year)))
    age = record.publishing_age
    first = record.first_year
    mod_series = [(y, r[2]) for y, r in zip(h.years, rows)]
    m = {
        "m_ratio": m_coefficient(h.values[-1], age),
        "m_ratio_mod": m_coefficient(rows[-1][2], age),
        "m_fit": m_fit(h, first),
        "m_fit_mod": m_fit(CareerSeries(tuple(mod_series)), first),
    }
    notes = [f"{k} = {_fmt(v, args.precision)}" for k, v in m.items()]
    payload = {
        "first_year": first,
        "snapshot_year": record.snapshot_year,
        "publishing_age": age,
        "series": [dict(zip(("year", "h", "h_mod", "papers", "mean_rank"), r)) for r in rows],
        "m": m,
    }
    return _render(args, ("year", "h", "h_mod", "papers", "mean_rank"), rows, payload, notes)


def cmd_simulate(args):
    params = ModelParams(args.p, args.c, args.n, args.r)
    sim = simulate_career(params)
    report = {
        "p": params.p,
        "c": params.c,
        "n": params.n,
        "r": params.r,
        "h_sim": sim.h,
        "h_mod_sim": sim.h_mod,
        "closed_form_h": closed_form_h(params),
        "closed_form_h_weighted": closed_form_h_weighted(params),
        "m": sim.h / params.n,
        "m_mod": sim.h_mod / params.n,
        "slowdown_factor": slowdown_factor(params),
    }
    if args.extra_papers:
        cmp = honorary_scenario(HonoraryScenario(params, args.extra_papers, args.extra_rank))
        report.update(
            {
                "extra_papers_per_year": args.extra_papers,
                "extra_rank": args.extra_rank,
                "honorary_h": cmp.h,
                "honorary_h_mod": cmp.h_mod,
                "delta_h": cmp.delta_h,
                "delta_h_mod": cmp.delta_h_mod,
                "marginal_credit": cmp.marginal_credit,
            }
        )
    return _render(args, ("quantity", "value"), list(report.items()), report)


def cmd_credit_curve(args):
    curve = total_credit_curve(args.n_max)
    payload = [{"n": n, "raw": raw, "weighted": w} for n, raw, w in curve]
    return _render(args, ("n", "raw", "weighted"), curve, payload)


def cmd_cohort(args):
    if args.rows is None:
        rows = cohort_h110_rows()
    else:
        if not Path(args.rows).is_file():
            raise UsageError(f"no such file: {args.rows}")
        try:
            text = Path(args.rows).read_bytes().decode("utf-8-sig")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not UTF-8: {exc.reason}") from None
        rows = read_cohort_csv(text)
    summary = cohort_stats(rows)
    table = []
    for col in summary.mean:
        red = summary.reduction.get(col)
        table.append((col, summary.mean[col], summary.stdev[col], None if red is None else red * 100))
    payload = {
        "size": summary.size,
        "mean": summary.mean,
        "stdev": summary.stdev,
        "reduction_pct": {k: v * 100 for k, v in summary.reduction.items()},
    }
    return _render(args, ("column", "mean", "stdev", "reduction_pct"), table, payload)


# -- parser -----------------------------------------------------------------


def _add_globals(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("table", "csv", "json"), default=d("table"))
    parser.add_argument("--output", metavar="PATH", default=d(None), help="write data here instead of stdout")
    parser.add_argument("--precision", type=_precision, default=d(2), help="decimal places for reals (0..10)")
    parser.add_argument(
        "--strict-alphabetical",
        action="store_true",
        default=d(False),
        help="leave papers from alphabetically ordered venues out of modified indexes",
    )
    parser.add_argument("--snapshot-year", type=int, default=d(None), metavar="Y")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="citeweight",
        description="Citation indexes with author-rank weighted credit.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_globals(parser, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_inputs(p):
        p.add_argument("publications", help="CSV or JSONL publication records")
        p.add_argument("profile", help="JSON researcher profile")
        p.add_argument("--input-format", choices=("csv", "jsonl"), default=None)
        return p

    p = with_inputs(sub.add_parser("compute", parents=[common], help="raw and modified c, h, g, e, i10"))
    p.set_defaults(func=cmd_compute)

    p = with_inputs(sub.add_parser("trajectory", parents=[common], help="per-year h, output and mean rank"))
    p.set_defaults(func=cmd_trajectory)

    p = sub.add_parser("simulate", parents=[common], help="Hirsch publishing model")
    p.add_argument("-p", type=_positive_int, required=True, help="papers per year")
    p.add_argument("-c", type=_positive_int, required=True, help="citations per paper per year")
    p.add_argument("-n", type=_positive_int, required=True, help="publishing age in years")
    p.add_argument("-r", type=_positive_int, default=1, help="constant author rank")
    p.add_argument("--extra-papers", type=_non_negative_int, default=0, help="honorary papers per year")
    p.add_argument("--extra-rank", type=_positive_int, default=1, help="rank on honorary papers")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("credit-curve", parents=[common], help="total credit per citation vs author count")
    p.add_argument("n_max", type=_positive_int)
    p.set_defaults(func=cmd_credit_curve)

    p = sub.add_parser("cohort-stats", parents=[common], help="cohort means, sample stdev and reductions")
    p.add_argument("rows", nargs="?", help="CSV name,h,h_mod,c,c_mod,m,m_mod (default: bundled h>=110 cohort)")
    p.set_defaults(func=cmd_cohort)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text = args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"{parser.prog}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CiteWeightError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
