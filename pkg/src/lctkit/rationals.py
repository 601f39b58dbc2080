"""Exact scalars: arbitrary-precision rationals and a positive-infinity marker.

`Rational` is the stdlib `fractions.Fraction`, which already guarantees the
two invariants we rely on everywhere: values are kept in lowest terms with a
positive denominator, and every arithmetic operation is exact.  No float ever
enters the package; comparisons at threshold boundaries are therefore decided,
not approximated.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ParseError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


class _Infinity:
    """Positive infinity, used for orders, weights and colengths.

    A singleton that compares above every int/Fraction.  It deliberately
    supports nothing else: code branches on ``value is INFINITY`` before
    doing arithmetic.
    """

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "infinity"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("lctkit-infinity")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INFINITY = _Infinity()


def format_rational(value) -> str:
    """Render a scalar as ``p/q`` (denominator always explicit) or ``infinity``."""
    if value is INFINITY:
        return "infinity"
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str):
    """Parse ``p/q``, a bare integer, or ``infinity``."""
    text = text.strip()
    if text == "infinity":
        return INFINITY
    try:
        if "/" in text:
            num, _, den = text.partition("/")
            denominator = int(den)
            if denominator <= 0:
                raise DomainError(f"denominator must be positive: {text!r}")
            return Fraction(int(num), denominator)
        return Fraction(int(text))
    except ValueError as exc:
        raise ParseError(f"not a rational: {text!r}", 0) from exc
