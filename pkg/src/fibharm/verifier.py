"""Grid sweeps, report aggregation and the oracle audit."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import BadAssignment, EncodingBug, Pole
from .exact import canonical, render_logvalue
from .oracle import oracle_canonical
from .registry import lookup, registry_entries
from .registry.core import (
    IdentityEntry,
    bind,
    evaluate,
    grid_points,
    normalize_assignment,
    oracle_values,
)
from .registry.status import CONFIRMED, DISCREPANCY, UNAUDITED, AuditedStatus
from .report import Outcome, render_assignment, render_value

CHUNK = 256
SKIP_POLICIES = ("record", "strict")


@dataclass(frozen=True)
class GridSpec:
    """Overrides applied on top of each entry's default grid.

    ``overrides`` is a tuple of (name, values) pairs. A parameter an entry
    does not have is ignored for that entry. ``n_max`` replaces the upper end
    of the n range (the lower end stays). ``seeds`` replaces the seed list.
    ``skip_policy`` "strict" makes skipped points count against the verdict.
    """

    overrides: tuple = ()
    n_max: Optional[int] = None
    seeds: Optional[tuple] = None
    skip_policy: str = "record"

    def __post_init__(self):
        if self.skip_policy not in SKIP_POLICIES:
            raise ValueError(f"skip policy must be one of {SKIP_POLICIES}")
        if self.n_max is not None and self.n_max < 0:
            raise ValueError("n_max must be non-negative")

    def overrides_for(self, entry: IdentityEntry) -> dict:
        names = entry.schema.names
        out = {}
        if self.n_max is not None and "n" in names:
            lo = min(entry.schema.spec("n").values({}), default=0)
            out["n"] = tuple(range(lo, self.n_max + 1))
        seed_name = entry.schema.seed_param
        if self.seeds is not None and seed_name is not None:
            out[seed_name] = tuple(self.seeds)
        for name, values in self.overrides:
            if name in names:
                out[name] = tuple(values)
        return out

    def points(self, entry: IdentityEntry) -> list:
        return list(grid_points(entry, self.overrides_for(entry)))

    def to_dict(self) -> dict:
        return {
            "overrides": {k: [render_value(v) for v in vs] for k, vs in self.overrides},
            "n_max": self.n_max,
            "seeds": None if self.seeds is None else [render_value(s) for s in self.seeds],
            "skip_policy": self.skip_policy,
        }


@dataclass
class SweepSummary:
    id: str
    family: str
    paper_anchor: str
    checked: int = 0
    equal: int = 0
    unequal: int = 0
    skipped: int = 0
    first_counterexample: Optional[dict] = None
    elapsed: float = 0.0
    status: str = UNAUDITED
    as_expected: bool = True
    note: str = ""

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "id": self.id,
            "family": self.family,
            "paper_anchor": self.paper_anchor,
            "checked": self.checked,
            "equal": self.equal,
            "unequal": self.unequal,
            "skipped": self.skipped,
            "first_counterexample": self.first_counterexample,
            "elapsed_ms": round(self.elapsed * 1000, 3) if timings else None,
            "audited_status": self.status,
            "as_expected": self.as_expected,
            "note": self.note,
        }


@dataclass
class SweepResult:
    summaries: list
    reports: list = field(default_factory=list)  # rendered CheckReport dicts

    @property
    def ok(self) -> bool:
        return all(s.as_expected for s in self.summaries)


def _counterexample(report) -> dict:
    return {
        "assignment": {k: render_value(v) for k, v in report.assignment},
        "lhs": render_logvalue(report.lhs),
        "rhs": render_logvalue(report.rhs),
    }


# --- workers (module level so they pickle) -------------------------------------


def _sweep_chunk(entry_id: str, points: list, keep: bool, fail_fast: bool, timings: bool) -> dict:
    entry = lookup(entry_id)
    counts = {"equal": 0, "unequal": 0, "skipped": 0}
    first = None
    reports = []
    for a in points:
        r = evaluate(entry, a, normalized=True)
        counts[r.outcome.value.lower()] += 1
        if keep:
            reports.append(r.to_dict(timings))
        if r.outcome is Outcome.UNEQUAL and first is None:
            first = _counterexample(r)
            if fail_fast:
                break
    return {"counts": counts, "first": first, "reports": reports}


def _chunks(points: list, size: int = CHUNK):
    for i in range(0, len(points), size):
        yield points[i : i + size]


def _expected(entry: IdentityEntry, summary: SweepSummary, points: list, grid: GridSpec) -> tuple:
    """(as_expected, note) for a finished summary."""
    st = entry.audited_status
    if grid.skip_policy == "strict" and summary.skipped:
        return False, f"{summary.skipped} skipped points under strict skip policy"
    if st.status != DISCREPANCY:
        if summary.unequal:
            return False, "unexpected inequality"
        return True, ""
    stored = {"assignment": st.counterexample, "lhs": st.lhs, "rhs": st.rhs}
    if summary.first_counterexample == stored:
        return True, "stored counterexample reproduced"
    try:
        key = normalize_assignment(entry, st.counterexample_assignment())
    except (BadAssignment, ValueError):
        key = None
    if key is not None and key in set(points):
        return False, "stored counterexample not reproduced"
    return True, "stored counterexample outside this grid"


def sweep(
    ids: Iterable[str],
    grid: GridSpec = GridSpec(),
    jobs: int = 1,
    keep_reports: bool = False,
    fail_fast: bool = False,
    timings: bool = False,
) -> SweepResult:
    """Evaluate every admissible grid point of each id.

    Summaries come back sorted by id and do not depend on ``jobs``. With
    ``fail_fast`` each identity stops at its first inequality.
    """
    entries = sorted({lookup(i).id: lookup(i) for i in ids}.values(), key=lambda e: e.id)
    plan = []
    for e in entries:
        pts = grid.points(e)
        plan.append((e, pts, list(_chunks(pts))))

    results = {}
    t0 = time.perf_counter()
    if jobs <= 1:
        for e, _, chunks in plan:
            out = []
            start = time.perf_counter()
            for c in chunks:
                out.append(_sweep_chunk(e.id, c, keep_reports, fail_fast, timings))
                if fail_fast and out[-1]["first"] is not None:
                    break
            results[e.id] = (out, time.perf_counter() - start)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {
                e.id: [pool.submit(_sweep_chunk, e.id, c, keep_reports, fail_fast, timings) for c in chunks]
                for e, _, chunks in plan
            }
            for e, _, _ in plan:
                out = []
                for f in futures[e.id]:
                    out.append(f.result())
                    if fail_fast and out[-1]["first"] is not None:
                        break
                results[e.id] = (out, time.perf_counter() - t0)

    summaries, reports = [], []
    for e, pts, _ in plan:
        out, elapsed = results[e.id]
        s = SweepSummary(e.id, e.family, e.anchor, elapsed=elapsed, status=e.audited_status.status)
        for chunk in out:
            s.equal += chunk["counts"]["equal"]
            s.unequal += chunk["counts"]["unequal"]
            s.skipped += chunk["counts"]["skipped"]
            if s.first_counterexample is None:
                s.first_counterexample = chunk["first"]
            reports.extend(chunk["reports"])
        s.checked = s.equal + s.unequal
        s.as_expected, s.note = _expected(e, s, pts, grid)
        summaries.append(s)
    return SweepResult(summaries, reports)


# --- audit ------------------------------------------------------------------------

_PRIMITIVES = ("F", "L", "G", "H", "O", "C", "Ci")


def _argkey(v):
    if isinstance(v, int):
        return Fraction(v)
    return Fraction(int(v.numerator), int(v.denominator))


class _Tracer:
    """Wraps a primitive context and records every primitive call."""

    def __init__(self, ctx, canon):
        self._ctx = ctx
        self._canon = canon
        self.calls = []

    def __getattr__(self, name):
        attr = getattr(self._ctx, name)
        if name not in _PRIMITIVES:
            return attr

        def traced(*args):
            key = (name, tuple(_argkey(a) for a in args))
            try:
                res = attr(*args)
            except Pole:
                self.calls.append((key, "pole"))
                raise
            self.calls.append((key, self._canon(res)))
            return res

        return traced


def _fmt_call(call) -> str:
    (name, args), res = call
    return f"{name}({', '.join(str(a) for a in args)}) -> {res}"


def locate_subterm(entry: IdentityEntry, assignment: tuple, side: str, reading: Optional[str] = None) -> str:
    """First primitive call where the registry and the oracle diverge on one side."""
    from .oracle import OracleContext
    from .registry.context import ExactContext

    if reading in (None, "printed"):
        ex_fn = (entry.lhs, entry.rhs)[side == "rhs"]
        or_fn = entry.oracle_sides()[side == "rhs"]
    else:
        ex_fn = or_fn = entry.reading(reading)[side == "rhs"]
    traces = []
    for ctx_class, fn, canon in ((ExactContext, ex_fn, canonical), (OracleContext, or_fn, oracle_canonical)):
        p, X = bind(entry, assignment, ctx_class)
        tr = _Tracer(X, canon)
        try:
            fn(p, tr)
        except (Pole, ZeroDivisionError):
            pass
        traces.append(tr.calls)
    for i, (a, b) in enumerate(zip(*traces)):
        if a != b:
            return f"call #{i}: registry {_fmt_call(a)}; oracle {_fmt_call(b)}"
    if len(traces[0]) != len(traces[1]):
        return f"call counts differ: registry {len(traces[0])}, oracle {len(traces[1])}"
    return "all primitive values agree; the combining arithmetic differs"


def _audit_chunk(entry_id: str, points: list, reading: Optional[str]) -> dict:
    """Cross-check a chunk against the oracle; return counts and the first inequality."""
    entry = lookup(entry_id)
    counts = {"equal": 0, "unequal": 0, "skipped": 0}
    first = None
    for a in points:
        r = evaluate(entry, a, reading=reading, normalized=True)
        ov = oracle_values(entry, a, reading)
        where = f"{entry_id} at {render_assignment(a)}" + (f" (reading {reading!r})" if reading else "")
        if r.outcome is Outcome.SKIPPED:
            if not isinstance(ov, str):
                raise EncodingBug(f"{where}: registry skipped ({r.reason}) but the oracle evaluated")
            counts["skipped"] += 1
            continue
        if isinstance(ov, str):
            raise EncodingBug(f"{where}: oracle skipped ({ov}) but the registry evaluated")
        for side, ex, orc in (("lhs", r.lhs, ov[0]), ("rhs", r.rhs, ov[1])):
            if canonical(ex) != oracle_canonical(orc):
                sub = locate_subterm(entry, a, side, reading)
                raise EncodingBug(f"{where}: {side} registry {render_logvalue(ex)} != oracle; {sub}")
        if r.outcome is Outcome.EQUAL:
            counts["equal"] += 1
        else:
            counts["unequal"] += 1
            if first is None:
                first = _counterexample(r)
    return {"counts": counts, "first": first}


def _audit_entry(entry: IdentityEntry, points: list, reading, pool) -> dict:
    chunks = list(_chunks(points))
    if pool is None:
        outs = [_audit_chunk(entry.id, c, reading) for c in chunks]
    else:
        outs = [f.result() for f in [pool.submit(_audit_chunk, entry.id, c, reading) for c in chunks]]
    total = {"equal": 0, "unequal": 0, "skipped": 0}
    first = None
    for o in outs:
        for k in total:
            total[k] += o["counts"][k]
        if first is None:
            first = o["first"]
    return {"counts": total, "first": first}


def audit(ids: Iterable[str], grid: GridSpec = GridSpec(), jobs: int = 1) -> dict:
    """Classify each identity by cross-checking registry and oracle on every grid point.

    Raises EncodingBug, naming the first diverging primitive call, when the two
    evaluators disagree on a side. Readings are tried in declared order only
    when the printed form fails.
    """
    entries = sorted({lookup(i).id: lookup(i) for i in ids}.values(), key=lambda e: e.id)
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    out = {}
    try:
        for e in entries:
            pts = grid.points(e)
            res = _audit_entry(e, pts, None, pool)
            c = res["counts"]
            note = f"{c['equal'] + c['unequal']} points checked against the oracle, {c['skipped']} skipped"
            if res["first"] is None:
                out[e.id] = AuditedStatus(CONFIRMED, note=note)
                continue
            surviving = None
            for rd in e.readings:
                rres = _audit_entry(e, pts, rd.name, pool)
                if rres["first"] is None:
                    surviving = rd.name
                    note += f"; reading {rd.name!r} holds on the same grid"
                    if rd.note:
                        note += f" ({rd.note})"
                    break
            if surviving is None:
                note += "; no recorded reading survives" if e.readings else "; no alternative reading recorded"
            f = res["first"]
            out[e.id] = AuditedStatus(DISCREPANCY, f["assignment"], f["lhs"], f["rhs"], surviving, note)
    finally:
        if pool is not None:
            pool.shutdown()
    return out


def write_statuses(statuses: dict, path, grid: GridSpec = GridSpec()) -> None:
    doc = {
        "grid": grid.to_dict(),
        "entries": {k: statuses[k].to_dict() for k in sorted(statuses)},
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def all_ids() -> list:
    return [e.id for e in registry_entries()]


__all__ = [
    "GridSpec",
    "SweepSummary",
    "SweepResult",
    "sweep",
    "audit",
    "locate_subterm",
    "write_statuses",
    "all_ids",
]
