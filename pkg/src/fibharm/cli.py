"""Command-line front end: list, verify, eval, audit and suites."""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .errors import BadAssignment, DegreeOverflow, EncodingBug, FibHarmError, NotFound, ParseError
from .exact import render_logvalue
from .registry import FAMILIES, by_family, lookup, registry_entries
from .registry.core import evaluate
from .registry.status import status_path
from .report import Outcome, parse_value
from .verifier import GridSpec, audit, sweep, write_statuses

EXIT_OK = 0
EXIT_DISCREPANCY = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3

REPORT_ENV = "FIBHARM_REPORT"
REPORT_FIELDS = ("id", "assignment", "lhs", "rhs", "outcome", "reason", "elapsed_ms")


class UsageError(Exception):
    pass


# --- assignment syntax -----------------------------------------------------------


def parse_scalar(text: str):
    """int, Fraction (``p/q``) or seed tuple (``g0:g1``)."""
    try:
        return parse_value(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse value {text!r}") from None


def parse_values(text: str) -> list:
    """One value, or an inclusive ``a..b`` range with step 1."""
    if ".." in text:
        lo_s, hi_s = text.split("..", 1)
        lo, hi = parse_scalar(lo_s), parse_scalar(hi_s)
        if isinstance(lo, tuple) or isinstance(hi, tuple):
            raise UsageError(f"seeds do not form ranges: {text!r}")
        if (Fraction(hi) - Fraction(lo)).denominator != 1:
            raise UsageError(f"range ends must differ by an integer: {text!r}")
        out = []
        v = Fraction(lo)
        while v <= hi:
            out.append(v.numerator if v.denominator == 1 else v)
            v += 1
        if not out:
            raise UsageError(f"empty range {text!r}")
        return out
    return [parse_scalar(text)]


def parse_sets(items) -> dict:
    """``--set`` arguments to {name: [values]}; repeated names accumulate."""
    out: dict = {}
    for item in items or ():
        for part in item.split(","):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise UsageError(f"expected name=value, got {part!r}")
            name, value = part.split("=", 1)
            name = name.strip()
            if not name:
                raise UsageError(f"missing parameter name in {part!r}")
            out.setdefault(name, []).extend(parse_values(value))
    return out


# --- selection -------------------------------------------------------------------


def _split_ids(values) -> list:
    out = []
    for v in values or ():
        out.extend(x for x in v.split(",") if x)
    return out


def select(ids, families) -> list:
    ids = _split_ids(ids)
    families = _split_ids(families)
    try:
        chosen = [lookup(i) for i in ids]
        for f in families:
            chosen.extend(by_family(f))
    except NotFound as exc:
        raise UsageError(str(exc)) from None
    if not ids and not families:
        chosen = list(registry_entries())
    seen = {}
    for e in chosen:
        seen.setdefault(e.id, e)
    return list(seen.values())


def make_grid(args, entries) -> GridSpec:
    sets = parse_sets(getattr(args, "set", None))
    known = set()
    for e in entries:
        known.update(e.schema.names)
    unknown = sorted(set(sets) - known)
    if unknown:
        raise UsageError(f"no selected identity has parameter(s) {', '.join(unknown)}")
    seeds = None
    overrides = []
    for name, values in sorted(sets.items()):
        overrides.append((name, tuple(values)))
    if getattr(args, "seeds", None):
        seeds = tuple(parse_scalar(s) for s in _split_ids([args.seeds]))
        if not all(isinstance(s, tuple) for s in seeds):
            raise UsageError("--seeds expects g0:g1 pairs")
    # check every override value against each entry's parameter kind
    grid = GridSpec(tuple(overrides), args.n_max, seeds, "strict" if args.strict_skips else "record")
    for e in entries:
        for name, values in grid.overrides_for(e).items():
            spec = e.schema.spec(name)
            for v in values:
                spec.normalize(v)
    return grid


# --- subcommands -----------------------------------------------------------------


def cmd_list(args) -> int:
    for e in select(args.ids, args.family):
        print("\t".join((e.id, e.family, e.anchor, e.schema.describe(), e.audited_status.label())))
    return EXIT_OK


def _write_report(result, grid, path, fmt, verbose, timings):
    if fmt == "tsv":
        with open(path, "w", encoding="utf-8", newline="") as fh:
            w = csv.writer(fh, delimiter="\t", lineterminator="\n")
            w.writerow(REPORT_FIELDS)
            for r in result.reports:
                row = dict(r)
                row["assignment"] = ",".join(f"{k}={v}" for k, v in r["assignment"].items())
                w.writerow("" if row[f] is None else row[f] for f in REPORT_FIELDS)
        return
    doc = {
        "tool_version": __version__,
        "grid": grid.to_dict(),
        "summaries": [s.to_dict(timings) for s in result.summaries],
    }
    if verbose:
        doc["reports"] = result.reports
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def cmd_verify(args) -> int:
    entries = select(args.ids, args.family)
    grid = make_grid(args, entries)
    path = args.report or os.environ.get(REPORT_ENV)
    keep = bool(path) and (args.verbose or args.format == "tsv")
    result = sweep(
        [e.id for e in entries],
        grid,
        jobs=args.jobs,
        keep_reports=keep,
        fail_fast=args.fail_fast,
        timings=args.timings,
    )
    for s in result.summaries:
        flag = "ok" if s.as_expected else "UNEXPECTED"
        line = f"{s.id}\tchecked={s.checked}\tequal={s.equal}\tunequal={s.unequal}\tskipped={s.skipped}\t{s.status}\t{flag}"
        if s.note:
            line += f"\t{s.note}"
        print(line)
    if path:
        _write_report(result, grid, path, args.format, args.verbose, args.timings)
    bad = [s.id for s in result.summaries if not s.as_expected]
    if bad:
        print(f"unexpected results: {', '.join(bad)}", file=sys.stderr)
        return EXIT_DISCREPANCY
    return EXIT_OK


def cmd_eval(args) -> int:
    try:
        entry = lookup(args.id)
    except NotFound as exc:
        raise UsageError(str(exc)) from None
    sets = parse_sets(args.set)
    assignment = {}
    for name, values in sets.items():
        if len(values) != 1:
            raise UsageError(f"eval needs a single value for {name}")
        assignment[name] = values[0]
    r = evaluate(entry, assignment, reading=args.reading)
    if r.outcome is Outcome.SKIPPED:
        print(f"SKIPPED({r.reason})")
    else:
        print(f"lhs = {render_logvalue(r.lhs)}, rhs = {render_logvalue(r.rhs)}, {r.outcome.value.upper()}")
    return EXIT_OK


def cmd_audit(args) -> int:
    entries = select(args.ids, args.family)
    grid = make_grid(args, entries)
    statuses = audit([e.id for e in entries], grid, jobs=args.jobs)
    for k in sorted(statuses):
        st = statuses[k]
        print(f"{k}\t{st.label()}\t{st.note}")
    if args.write:
        from .registry.status import load_statuses

        merged = {k: v for k, v in load_statuses().items()}
        merged.update(statuses)
        write_statuses(merged, args.out or status_path(), grid)
        load_statuses.cache_clear()
    return EXIT_OK


def cmd_suites(args) -> int:
    from .harmonic import halfint_reduction_suite, lemma2_suite, lemma3_suite

    runs = (
        ("lemma2", lemma2_suite(args.n_max)),
        ("lemma3", lemma3_suite(args.r_max)),
        ("halfint-reduction", halfint_reduction_suite(args.r_max, min(args.n_max, 15))),
    )
    failed = False
    for name, reports in runs:
        counts = {o: 0 for o in Outcome}
        for r in reports:
            counts[r.outcome] += 1
        print(f"{name}\t" + "\t".join(f"{o.value.lower()}={counts[o]}" for o in Outcome))
        failed |= counts[Outcome.UNEQUAL] > 0
    return EXIT_DISCREPANCY if failed else EXIT_OK


# --- parser ----------------------------------------------------------------------


def _selection(p):
    p.add_argument("--id", "--ids", dest="ids", action="append", help="identity id(s), comma separated")
    p.add_argument("--family", action="append", help=f"family: {', '.join(FAMILIES)}")


def _grid_args(p):
    p.add_argument("--set", action="append", metavar="NAME=VALUE", help="grid override: a..b, p/2, g0:g1")
    p.add_argument("--n-max", type=int, help="upper end of the n range")
    p.add_argument("--seeds", help="comma separated g0:g1 seeds")
    p.add_argument("--strict-skips", action="store_true", help="count skipped points as failures")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibharm", description="Exact verification of Fibonacci-harmonic identities.")
    parser.add_argument("--version", action="version", version=f"fibharm {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="list registry entries")
    _selection(p)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("verify", help="sweep identities over their grids")
    _selection(p)
    _grid_args(p)
    p.add_argument("--report", help=f"report path (default ${REPORT_ENV})")
    p.add_argument("--format", choices=("json", "tsv"), default="json")
    p.add_argument("--verbose", action="store_true", help="include per-point reports")
    p.add_argument("--timings", action="store_true", help="record elapsed_ms")
    p.add_argument("--fail-fast", action="store_true", help="stop each identity at its first inequality")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval", help="evaluate one identity at one point")
    p.add_argument("--id", required=True)
    p.add_argument("--set", action="append", metavar="NAME=VALUE", default=[])
    p.add_argument("--reading", help="alternative transcription to evaluate")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("audit", help="cross-check against the oracle and classify")
    _selection(p)
    _grid_args(p)
    p.add_argument("--write", action="store_true", help="store the statuses in the package data")
    p.add_argument("--out", help="write statuses here instead of the package data")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("suites", help="harmonic-number and binomial reduction suites")
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--r-max", type=int, default=10)
    p.set_defaults(func=cmd_suites)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, BadAssignment, ParseError, NotFound) as exc:
        parser.print_usage(sys.stderr)
        print(f"fibharm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EncodingBug, DegreeOverflow) as exc:
        print(f"fibharm: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except FibHarmError as exc:
        print(f"fibharm: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
