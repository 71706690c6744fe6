"""Per-point check outcomes shared by the suites, the registry and the verifier."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .exact import HalfInt, LogValue, render_halfint, render_logvalue, render_rational
from .sequences import GibonacciSeed


class Outcome(enum.Enum):
    EQUAL = "Equal"
    UNEQUAL = "Unequal"
    SKIPPED = "Skipped"


def render_value(v: Any) -> str:
    """Canonical text for a parameter value."""
    if isinstance(v, bool):
        raise TypeError("bool is not a parameter value")
    if isinstance(v, int):
        return str(v)
    if isinstance(v, HalfInt):
        return render_halfint(v)
    if isinstance(v, GibonacciSeed):
        return str(v)
    if isinstance(v, tuple) and len(v) == 2:
        return f"{v[0]}:{v[1]}"
    return render_rational(v)


def parse_value(text: str):
    """Inverse of :func:`render_value`: int, Fraction or (g0, g1) seed tuple."""
    text = text.strip()
    if ":" in text:
        g0, g1 = text.split(":")
        return (int(g0), int(g1))
    if "/" in text:
        num, den = text.split("/")
        f = Fraction(int(num), int(den))
        return f.numerator if f.denominator == 1 else f
    return int(text)


def render_assignment(assignment) -> str:
    return ",".join(f"{k}={render_value(v)}" for k, v in assignment)


@dataclass(frozen=True)
class CheckReport:
    identity: str
    assignment: tuple  # ((name, value), ...) in schema order
    lhs: Optional[LogValue]
    rhs: Optional[LogValue]
    outcome: Outcome
    reason: str = ""
    elapsed: float = field(default=0.0, compare=False)

    @property
    def equal(self) -> bool:
        return self.outcome is Outcome.EQUAL

    def params(self) -> dict:
        return dict(self.assignment)

    def to_dict(self, timings: bool = False) -> dict:
        d = {
            "id": self.identity,
            "assignment": {k: render_value(v) for k, v in self.assignment},
            "lhs": None if self.lhs is None else render_logvalue(self.lhs),
            "rhs": None if self.rhs is None else render_logvalue(self.rhs),
            "outcome": self.outcome.value,
            "reason": self.reason,
            "elapsed_ms": round(self.elapsed * 1000, 3) if timings else None,
        }
        return d


def compare(identity: str, assignment, lhs, rhs, elapsed: float = 0.0) -> CheckReport:
    lhs = LogValue.coerce(lhs)
    rhs = LogValue.coerce(rhs)
    outcome = Outcome.EQUAL if lhs == rhs else Outcome.UNEQUAL
    return CheckReport(identity, tuple(assignment), lhs, rhs, outcome, "", elapsed)


def skipped(identity: str, assignment, reason: str, elapsed: float = 0.0) -> CheckReport:
    return CheckReport(identity, tuple(assignment), None, None, Outcome.SKIPPED, reason, elapsed)
