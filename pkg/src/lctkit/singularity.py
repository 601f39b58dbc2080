"""Threshold formulas and singularity checks that bypass the LP machinery:
staircase colength, the weighted threshold formula, the weight criterion,
surface and threefold monomial witnesses, the intersection-multiplicity bound,
and blow-up margin predicates.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, DomainError
from .newton import diagonal_crossing, lct, newton_polyhedron, primitive_integer_normal
from .poly import MonomialIdeal, Polynomial, check_weight_vector, weight_of
from .rationals import INFINITY, format_rational


def colength(ideal: MonomialIdeal):
    """Number of standard monomials outside the staircase; INFINITY unless the
    ideal contains a pure power of every variable.

    Pure powers bound the staircase inside a finite box, which is then
    enumerated directly.
    """
    bounds = _pure_power_bounds(ideal)
    if bounds is None:
        return INFINITY
    count = 0
    for point in itertools.product(*(range(b) for b in bounds)):
        if not ideal.contains_monomial(point):
            count += 1
    return count


def _pure_power_bounds(ideal: MonomialIdeal) -> list | None:
    """Per-axis smallest pure-power exponent, or None if some axis has none."""
    bounds = []
    for j in range(ideal.dim):
        best = None
        for g in ideal.generators:
            if all(e == 0 for k, e in enumerate(g) if k != j):
                best = g[j] if best is None else min(best, g[j])
        if best is None:
            return None
        bounds.append(best)
    return bounds


def is_zero_dimensional(ideal: MonomialIdeal) -> bool:
    return _pure_power_bounds(ideal) is not None


def weighted_lct(exponents) -> Fraction:
    """Threshold of a pure-power ideal (x_1^m_1, ..., x_n^m_n): sum of 1/m_i."""
    exponents = list(exponents)
    if not exponents:
        raise DomainError("need at least one exponent")
    if any(m <= 0 for m in exponents):
        raise DomainError(f"exponents must be positive: {exponents}")
    return sum((Fraction(1, m) for m in exponents), Fraction(0))


def weight_criterion(c, f: Polynomial, weights) -> bool:
    """True iff c * weight(f) <= sum of the weights (log canonicity side of the
    weighted-homogeneous test)."""
    c = Fraction(c)
    weights = check_weight_vector(weights, f.dim)
    w = weight_of(f, weights)
    if w is INFINITY:
        return False
    return c * w <= sum(weights)


def surface_monomial_witness(monomials, weights, c) -> bool:
    """Certify a non-log-canonical surface point: every monomial (i, j) must
    satisfy a*i + b*j > (a+b)/c in the given coordinates."""
    c = Fraction(c)
    monomials = [tuple(m) for m in monomials]
    if any(len(m) != 2 for m in monomials):
        raise DimensionMismatchError("surface witness needs 2-dimensional exponents")
    a, b = check_weight_vector(weights, 2)
    threshold = (a + b) / c
    return all(a * i + b * j > threshold for i, j in monomials)


def kawakita_witness(monomials, weights, c) -> bool:
    """Threefold variant with weights (a, b, 1): every monomial (i, j, k) must
    satisfy a*i + b*j + k > (a+b)/c."""
    c = Fraction(c)
    monomials = [tuple(m) for m in monomials]
    if any(len(m) != 3 for m in monomials):
        raise DimensionMismatchError("threefold witness needs 3-dimensional exponents")
    a, b, last = check_weight_vector(weights, 3)
    if last != 1:
        raise DomainError(f"third weight is fixed to 1, got {last}")
    threshold = (a + b) / c
    return all(a * i + b * j + k > threshold for i, j, k in monomials)


def corti_intersection_bound(a, b, c) -> Fraction:
    """(a+b)^2 / (a*b*c^2); always >= 4/c^2 with equality iff a = b."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a <= 0 or b <= 0 or c <= 0:
        raise DomainError("all inputs must be positive")
    return (a + b) ** 2 / (a * b * c * c)


def blowup_margin(codim: int, c, mult) -> Fraction:
    """Discrepancy margin codim - 1 - c*mult of a single blow-up."""
    if codim < 2:
        raise DomainError(f"codimension must be >= 2, got {codim}")
    return codim - 1 - Fraction(c) * Fraction(mult)


def canonical_necessary(codim: int, c, mult) -> bool:
    """Necessary condition for the pair to be canonical: margin >= 0."""
    return blowup_margin(codim, c, mult) >= 0


def log_canonical_necessary(codim: int, c, mult) -> bool:
    """Necessary condition for the pair to be log canonical: margin >= -1."""
    return blowup_margin(codim, c, mult) >= -1


@dataclass(frozen=True)
class ThresholdVerdict:
    """Outcome of comparing a coefficient against a threshold."""

    coefficient: Fraction
    threshold: object  # Fraction or INFINITY
    verdict: str  # "log-canonical" | "not-log-canonical"
    witness: str | None = None


def classify(ideal: MonomialIdeal, c) -> ThresholdVerdict:
    """Compare c against lct(I); on failure attach the central-face normal as
    the witness."""
    c = Fraction(c)
    if c <= 0:
        raise DomainError(f"coefficient must be positive, got {c}")
    threshold = lct(ideal)
    if threshold is INFINITY or c <= threshold:
        return ThresholdVerdict(c, threshold, "log-canonical")
    crossing = diagonal_crossing(newton_polyhedron(ideal))
    normal = primitive_integer_normal(crossing.canonical_normal)
    witness = "central-face normal " + "(" + ", ".join(str(v) for v in normal) + ")"
    return ThresholdVerdict(c, threshold, "not-log-canonical", witness)


def threshold_verdict_json(verdict: ThresholdVerdict) -> dict:
    payload = {
        "c": format_rational(verdict.coefficient),
        "threshold": format_rational(verdict.threshold),
        "verdict": verdict.verdict,
    }
    if verdict.witness is not None:
        payload["witness"] = verdict.witness
    return payload
