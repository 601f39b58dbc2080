"""The quadratic-versus-exponential endgame of the superrigidity argument.

For an n-dimensional hypersurface the section count C(n+2, 2) must dominate
half of 3^(n-1); the check reports where that fails (contradiction), where the
sharpened bound is met with equality, and where nothing follows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .rationals import format_rational, parse_rational


@dataclass(frozen=True)
class RigidityReport:
    n: int
    h0: int  # C(n+2, 2) = sections of O(2) on P^n
    bound_basic: Fraction  # 3^(n-1) / 2
    bound_improved: Fraction  # 3^(n-1) / 2 + 3/2 (recorded sharpening)
    verdict: str  # "contradiction" | "equality" | "no-contradiction"

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "h0": self.h0,
            "bound_basic": format_rational(self.bound_basic),
            "bound_improved": format_rational(self.bound_improved),
            "verdict": self.verdict,
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "RigidityReport":
        return cls(
            n=payload["n"],
            h0=payload["h0"],
            bound_basic=parse_rational(payload["bound_basic"]),
            bound_improved=parse_rational(payload["bound_improved"]),
            verdict=payload["verdict"],
        )


def rigidity_check(n: int) -> RigidityReport:
    """Compare C(n+2, 2) against the exponential lower bounds.

    The improved bound (basic + 3/2) is a recorded constant, kept only for
    the equality it produces at n = 4; it is not derived here.
    """
    if n < 3:
        raise DomainError(f"dimension must be >= 3, got {n}")
    h0 = math.comb(n + 2, 2)
    bound_basic = Fraction(3 ** (n - 1), 2)
    bound_improved = bound_basic + Fraction(3, 2)
    if h0 < bound_basic:
        verdict = "contradiction"
    elif h0 == bound_improved:
        verdict = "equality"
    else:
        verdict = "no-contradiction"
    return RigidityReport(n, h0, bound_basic, bound_improved, verdict)
