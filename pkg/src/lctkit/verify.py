"""Exhaustive desk-scale verification harnesses.

Both suites enumerate every zero-dimensional monomial staircase whose minimal
generators fit in a box, run the full chain of engines on each instance, and
return a report whose failure list must be empty.  A failure entry pinpoints
the ideal (and coefficient) that broke an assertion, so a nonempty list is a
reproducible counterexample rather than a flaky diagnostic.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import GuardExceededError
from .lattice import SimplexSpec, simplex_count, simplex_lattice_points
from .newton import (
    contains,
    diagonal_crossing,
    lct,
    multiplier_ideal_plus,
    newton_polyhedron,
)
from .parsing import monomial_ideal_to_string
from .poly import MonomialIdeal
from .rationals import INFINITY, format_rational
from .singularity import colength

_GUARD_LIMIT = 150


@dataclass
class VerificationReport:
    universe: dict
    instances_checked: int
    failures: list = field(default_factory=list)
    runtime_note: str = ""

    def to_json_dict(self) -> dict:
        return {
            "universe": self.universe,
            "instances_checked": self.instances_checked,
            "failures": self.failures,
            "runtime_note": self.runtime_note,
        }

    @classmethod
    def from_json_dict(cls, payload: dict) -> "VerificationReport":
        return cls(
            universe=payload["universe"],
            instances_checked=payload["instances_checked"],
            failures=payload["failures"],
            runtime_note=payload["runtime_note"],
        )

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        """Associative combination of independently checked partitions."""
        mine = self.universe.get("parts", [self.universe])
        theirs = other.universe.get("parts", [other.universe])
        universe = {"parts": mine + theirs}
        note = "; ".join(x for x in (self.runtime_note, other.runtime_note) if x)
        return VerificationReport(
            universe=universe,
            instances_checked=self.instances_checked + other.instances_checked,
            failures=self.failures + other.failures,
            runtime_note=note,
        )


def default_variables(n: int) -> tuple[str, ...]:
    if n <= 3:
        return ("x", "y", "z")[:n]
    return tuple(f"x{i + 1}" for i in range(n))


def _ideal_label(ideal: MonomialIdeal) -> str:
    return monomial_ideal_to_string(ideal, default_variables(ideal.dim))


def enumerate_staircase_ideals(n: int, box: int) -> list[MonomialIdeal]:
    """All zero-dimensional monomial ideals whose minimal generators lie in
    [0, box]^n, i.e. whose staircases are down-sets of [0, box-1]^n.  Includes
    the unit ideal (empty staircase)."""
    if n == 2:
        staircases = _downsets_2d(box)
    elif n == 3:
        staircases = _downsets_3d(box)
    else:
        raise GuardExceededError(f"staircase enumeration supports n in {{2, 3}}, got {n}")
    return [_staircase_to_ideal(s, n, box) for s in staircases]


def _downsets_2d(box: int):
    """Non-increasing height vectors h of length box with entries in [0, box]."""
    results = []

    def walk(position: int, ceiling: int, heights: tuple):
        if position == box:
            results.append(heights)
            return
        for h in range(ceiling, -1, -1):
            walk(position + 1, h, heights + (h,))

    walk(0, box, ())
    return [
        {(i, j) for i, h in enumerate(heights) for j in range(h)} for heights in results
    ]


def _downsets_3d(box: int):
    """Height matrices h[i][j] in [0, box], non-increasing along both axes."""

    def rows_below(upper: tuple) -> list[tuple]:
        out = []

        def walk(position: int, ceiling: int, row: tuple):
            if position == box:
                out.append(row)
                return
            for h in range(min(ceiling, upper[position]), -1, -1):
                walk(position + 1, h, row + (h,))

        walk(0, box, ())
        return out

    results = []

    def walk_matrix(level: int, upper: tuple, acc: list):
        if level == box:
            results.append(tuple(acc))
            return
        for row in rows_below(upper):
            acc.append(row)
            walk_matrix(level + 1, row, acc)
            acc.pop()

    walk_matrix(0, (box,) * box, [])
    return [
        {
            (i, j, k)
            for i, row in enumerate(matrix)
            for j, h in enumerate(row)
            for k in range(h)
        }
        for matrix in results
    ]


def _staircase_to_ideal(staircase: set, n: int, box: int) -> MonomialIdeal:
    gens = []
    for p in itertools.product(range(box + 1), repeat=n):
        if p in staircase:
            continue
        below = all(
            p[j] == 0 or tuple(p[:j] + (p[j] - 1,) + p[j + 1 :]) in staircase
            for j in range(n)
        )
        if below:
            gens.append(p)
    return MonomialIdeal(n, tuple(gens))


def _guard(n: int, box: int):
    if n * box**n > _GUARD_LIMIT:
        raise GuardExceededError(
            f"universe n={n}, box={box} exceeds the enumeration guard"
        )


def verify_colength_theorem(n: int, box: int) -> VerificationReport:
    """Check, on every non-log-canonical instance of the universe, that the
    central-face normal produces a simplex disjoint from the Newton polyhedron
    and that the colength dominates both the simplex count and (3^n + 1)/2."""
    _guard(n, box)
    started = time.perf_counter()
    ideals = enumerate_staircase_ideals(n, box)
    failures = []
    floor_bound = Fraction(3**n + 1, 2)
    for ideal in ideals:
        threshold = lct(ideal)
        if threshold is INFINITY or 1 <= threshold:
            continue  # log canonical at c = 1: nothing to check
        label = _ideal_label(ideal)
        poly = newton_polyhedron(ideal)
        crossing = diagonal_crossing(poly)
        normal = crossing.dual_normal
        if any(a <= 0 for a in normal):
            failures.append(
                {"ideal": label, "check": "normal-positivity", "detail": str(normal)}
            )
            continue
        spec = SimplexSpec(normal)
        count = simplex_count(spec)
        length = colength(ideal)
        for point in simplex_lattice_points(spec):
            if contains(poly, point):
                failures.append(
                    {
                        "ideal": label,
                        "check": "simplex-disjointness",
                        "detail": f"lattice point {point} lies in the polyhedron",
                    }
                )
                break
        if length is INFINITY:
            failures.append(
                {"ideal": label, "check": "zero-dimensionality", "detail": "infinite colength"}
            )
            continue
        if length < count:
            failures.append(
                {
                    "ideal": label,
                    "check": "colength-vs-simplex",
                    "detail": f"colength {length} < simplex count {count}",
                }
            )
        if length < floor_bound:
            failures.append(
                {
                    "ideal": label,
                    "check": "colength-floor",
                    "detail": f"colength {length} < {format_rational(floor_bound)}",
                }
            )
    elapsed = time.perf_counter() - started
    return VerificationReport(
        universe={"suite": "colength", "n": n, "box": box},
        instances_checked=len(ideals),
        failures=failures,
        runtime_note=f"{elapsed:.2f} s",
    )


def default_c_grid() -> list[Fraction]:
    """Denominator-12 grid hitting the thresholds of small ideals exactly."""
    return [Fraction(k, 12) for k in range(1, 37)]


def verify_multiplier_lemmas(
    n: int = 2, box: int = 4, c_grid: list | None = None
) -> VerificationReport:
    """Check the multiplier-ideal laws on monomial data: the upper multiplier
    ideal is trivial exactly up to the threshold, and once c/2 passes the
    threshold the iterated ideal is proper."""
    _guard(n, box)
    started = time.perf_counter()
    grid = c_grid if c_grid is not None else default_c_grid()
    ideals = enumerate_staircase_ideals(n, box)
    failures = []
    checked = 0
    for ideal in ideals:
        threshold = lct(ideal)
        label = _ideal_label(ideal)
        for c in grid:
            checked += 1
            jplus = multiplier_ideal_plus(ideal, c)
            expected_trivial = threshold is INFINITY or c <= threshold
            if jplus.is_unit() != expected_trivial:
                failures.append(
                    {
                        "ideal": label,
                        "c": format_rational(c),
                        "check": "triviality-iff-threshold",
                        "detail": f"J+ unit: {jplus.is_unit()}, expected {expected_trivial}",
                    }
                )
            half_not_lc = threshold is not INFINITY and c / 2 > threshold
            if half_not_lc:
                iterated = multiplier_ideal_plus(jplus, Fraction(1))
                if iterated.is_unit():
                    failures.append(
                        {
                            "ideal": label,
                            "c": format_rational(c),
                            "check": "iterated-properness",
                            "detail": "J+(J+(I^c)) is the unit ideal",
                        }
                    )
    elapsed = time.perf_counter() - started
    return VerificationReport(
        universe={
            "suite": "multiplier",
            "n": n,
            "box": box,
            "c_grid": [format_rational(c) for c in grid],
        },
        instances_checked=checked,
        failures=failures,
        runtime_note=f"{elapsed:.2f} s",
    )
