"""Exception hierarchy shared by every module."""

from __future__ import annotations


class FibHarmError(Exception):
    """Base class for all errors raised by fibharm."""


class DivisionByZero(FibHarmError, ZeroDivisionError):
    pass


class DegreeOverflow(FibHarmError, ArithmeticError):
    """A product would contain a ln2**2 term."""


class DomainError(FibHarmError, ValueError):
    pass


class ParseError(FibHarmError, ValueError):
    pass


class Pole(FibHarmError):
    """Evaluation hit a point outside the domain of some subterm.

    Registry evaluation turns these into ``Skipped`` outcomes instead of failures.
    """

    def __init__(self, reason: str):
        super().__init__(reason)
        self.reason = reason


class HarmonicPole(Pole, DomainError):
    pass


class ZeroDenominator(Pole, DivisionByZero):
    pass


class UnsupportedBinomial(Pole, ValueError):
    pass


class NotFound(FibHarmError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "not found"


class BadAssignment(FibHarmError, ValueError):
    pass


class PairMismatch(FibHarmError, ValueError):
    pass


class EncodingBug(FibHarmError):
    """Registry evaluator and independent oracle disagree on the same side."""
