"""Identity entries, parameter schemas and single-point evaluation."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from types import SimpleNamespace
from typing import Any, Callable, Iterable, Optional

from gmpy2 import mpq

from ..errors import BadAssignment, EncodingBug, Pole
from ..exact import HalfInt, LogValue, Rational, to_rational
from ..report import CheckReport, Outcome, skipped
from ..sequences import GibonacciSeed
from .context import ExactContext

INT = "Int"
HALFINT = "HalfInt"
SEED = "Seed"
RATIONAL = "Rational"
KINDS = (INT, HALFINT, SEED, RATIONAL)

DEFAULT_SEEDS = (
    GibonacciSeed(-2, 5),
    GibonacciSeed(0, 1),
    GibonacciSeed(1, 1),
    GibonacciSeed(2, 1),
    GibonacciSeed(3, -1),
)


def value_key(v):
    """Sort key giving the lexicographic grid order for one parameter value."""
    if isinstance(v, GibonacciSeed):
        return (v.g0, v.g1)
    if isinstance(v, HalfInt):
        return mpq(v.twice, 2)
    return mpq(v)


@dataclass(frozen=True)
class ParamSpec:
    """One free symbol.

    ``default`` is either a fixed iterable of values or a callable taking the
    already-chosen earlier parameters (a dict) and returning an iterable.
    """

    name: str
    kind: str
    default: Any
    doc: str = ""

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown parameter kind {self.kind!r}")
        if not callable(self.default):
            object.__setattr__(self, "default", tuple(self.default))

    def normalize(self, v):
        """Coerce a user or grid value to this kind, raising BadAssignment."""
        try:
            return _normalize(self.kind, v)
        except (TypeError, ValueError) as exc:
            raise BadAssignment(f"parameter {self.name}: {exc}") from None

    def values(self, prior: dict) -> list:
        raw = self.default(prior) if callable(self.default) else self.default
        vals = {self.normalize(v) for v in raw}
        return sorted(vals, key=value_key)


def _normalize(kind: str, v):
    if isinstance(v, bool) or isinstance(v, float):
        raise TypeError(f"{v!r} is not an exact value")
    if kind == SEED:
        if isinstance(v, GibonacciSeed):
            return v
        if isinstance(v, tuple) and len(v) == 2:
            return GibonacciSeed(int(v[0]), int(v[1]))
        raise TypeError(f"{v!r} is not a seed")
    if isinstance(v, GibonacciSeed):
        raise TypeError("a seed is not a number")
    if kind == HALFINT:
        return HalfInt.of(v)
    h = v.to_rational() if isinstance(v, HalfInt) else to_rational(v)
    if kind == INT:
        if h.denominator != 1:
            raise ValueError(f"{v} is not an integer")
        return int(h.numerator)
    return h


@dataclass(frozen=True)
class ParamSchema:
    params: tuple
    constraint: Optional[Callable[[dict], bool]] = None
    constraint_doc: str = ""

    @property
    def names(self) -> tuple:
        return tuple(p.name for p in self.params)

    @property
    def seed_param(self) -> Optional[str]:
        for p in self.params:
            if p.kind == SEED:
                return p.name
        return None

    def spec(self, name: str) -> ParamSpec:
        for p in self.params:
            if p.name == name:
                return p
        raise BadAssignment(f"no parameter named {name!r}")

    def admissible(self, values: dict) -> bool:
        return self.constraint is None or bool(self.constraint(values))

    def describe(self) -> str:
        parts = [f"{p.name}:{p.kind}" + (f"({p.doc})" if p.doc else "") for p in self.params]
        text = ", ".join(parts)
        if self.constraint_doc:
            text += f"; {self.constraint_doc}"
        return text


@dataclass(frozen=True)
class Reading:
    """An alternative transcription of a display, tried only when the printed one fails."""

    name: str
    lhs: Optional[Callable] = None
    rhs: Optional[Callable] = None
    note: str = ""


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    family: str
    anchor: str
    schema: ParamSchema
    lhs: Callable
    rhs: Callable
    summary: str = ""
    readings: tuple = ()
    # evaluators the audit's oracle should use instead of lhs/rhs; only set
    # for deliberately broken test entries
    oracle_lhs: Optional[Callable] = field(default=None, compare=False)
    oracle_rhs: Optional[Callable] = field(default=None, compare=False)

    @property
    def audited_status(self):
        from .status import status_of

        return status_of(self.id)

    def reading(self, name: Optional[str]) -> tuple:
        """(lhs, rhs) evaluators for a reading; None or "printed" gives the display as printed."""
        if name in (None, "printed"):
            return self.lhs, self.rhs
        for r in self.readings:
            if r.name == name:
                return r.lhs or self.lhs, r.rhs or self.rhs
        raise BadAssignment(f"{self.id} has no reading {name!r}")

    def oracle_sides(self) -> tuple:
        return self.oracle_lhs or self.lhs, self.oracle_rhs or self.rhs


def normalize_assignment(entry: IdentityEntry, assignment) -> tuple:
    """Validated ((name, value), ...) in schema order."""
    items = dict(assignment.items() if hasattr(assignment, "items") else assignment)
    names = entry.schema.names
    missing = [n for n in names if n not in items]
    extra = [n for n in items if n not in names]
    if missing or extra:
        raise BadAssignment(f"{entry.id} expects parameters {', '.join(names)}; missing {missing}, unexpected {extra}")
    out = tuple((p.name, p.normalize(items[p.name])) for p in entry.schema.params)
    try:
        ok = entry.schema.admissible(dict(out))
    except (TypeError, ValueError) as exc:
        raise BadAssignment(str(exc)) from None
    if not ok:
        raise BadAssignment(f"{entry.id}: assignment violates constraint ({entry.schema.constraint_doc})")
    return out


def bind(entry: IdentityEntry, assignment: tuple, ctx_class=ExactContext):
    """Parameter namespace and primitive context for an already-normalized assignment."""
    values = {}
    seed = None
    for name, v in assignment:
        if isinstance(v, GibonacciSeed):
            seed = v
            values[name] = v
        elif isinstance(v, HalfInt):
            values[name] = ctx_class.num(v.to_number())
        else:
            values[name] = ctx_class.num(v)
    return SimpleNamespace(**values), ctx_class(seed)


_EXACT_TYPES = (int, Rational, LogValue)


def _check_exact(entry_id: str, side: str, v):
    if isinstance(v, _EXACT_TYPES) or type(v).__name__ == "mpz":
        return v
    raise EncodingBug(f"{entry_id} {side} evaluated to inexact {type(v).__name__}")


def evaluate(
    entry: IdentityEntry,
    assignment,
    reading: Optional[str] = None,
    mutate: bool = False,
    normalized: bool = False,
) -> CheckReport:
    """Evaluate both sides at one point.

    ``mutate`` adds 1 to the right-hand side (mutation canary).
    """
    a = assignment if normalized else normalize_assignment(entry, assignment)
    lhs_fn, rhs_fn = entry.reading(reading)
    t0 = time.perf_counter()
    p, X = bind(entry, a)
    try:
        lhs = lhs_fn(p, X)
        rhs = rhs_fn(p, X)
    except Pole as exc:
        return skipped(entry.id, a, exc.reason, time.perf_counter() - t0)
    except ZeroDivisionError:
        return skipped(entry.id, a, "division by zero", time.perf_counter() - t0)
    lhs = _check_exact(entry.id, "lhs", lhs)
    rhs = _check_exact(entry.id, "rhs", rhs)
    if mutate:
        rhs = rhs + 1
    lhs = LogValue.coerce(lhs)
    rhs = LogValue.coerce(rhs)
    outcome = Outcome.EQUAL if lhs == rhs else Outcome.UNEQUAL
    return CheckReport(entry.id, a, lhs, rhs, outcome, "", time.perf_counter() - t0)


def grid_points(entry: IdentityEntry, overrides: Optional[dict] = None) -> Iterable[tuple]:
    """Admissible assignments in lexicographic order of the declared parameters.

    ``overrides`` maps a parameter name to an iterable or to a callable of the
    earlier parameters, replacing that parameter's default values.
    """
    overrides = overrides or {}
    params = entry.schema.params

    def values_for(spec: ParamSpec, prior: dict):
        src = overrides.get(spec.name)
        if src is None:
            return spec.values(prior)
        raw = src(prior) if callable(src) else src
        return sorted({spec.normalize(v) for v in raw}, key=value_key)

    def rec(i: int, prior: dict):
        if i == len(params):
            if entry.schema.admissible(prior):
                yield tuple((p.name, prior[p.name]) for p in params)
            return
        spec = params[i]
        for v in values_for(spec, prior):
            prior[spec.name] = v
            yield from rec(i + 1, prior)
        prior.pop(spec.name, None)

    yield from rec(0, {})


def oracle_values(entry: IdentityEntry, assignment: tuple, reading: Optional[str] = None):
    """Both sides from the independent oracle, or the Pole reason string."""
    from ..oracle import OracleContext

    if reading in (None, "printed"):
        lhs_fn, rhs_fn = entry.oracle_sides()
    else:
        lhs_fn, rhs_fn = entry.reading(reading)
    p, X = bind(entry, assignment, OracleContext)
    try:
        return lhs_fn(p, X), rhs_fn(p, X)
    except Pole as exc:
        return exc.reason
    except ZeroDivisionError:
        return "division by zero"


__all__ = [
    "INT",
    "HALFINT",
    "SEED",
    "RATIONAL",
    "DEFAULT_SEEDS",
    "ParamSpec",
    "ParamSchema",
    "Reading",
    "IdentityEntry",
    "normalize_assignment",
    "evaluate",
    "grid_points",
    "oracle_values",
    "value_key",
]
