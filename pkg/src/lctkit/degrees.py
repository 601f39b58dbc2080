"""Degree and multiplicity arithmetic for hypersurface intersection bookkeeping.

These are the exact numeric identities consumed by the superrigidity
contradiction: degrees of complete-intersection cycles, intersection numbers
under a degree pairing, the multiplicity bound, and residual-cone degrees.
The hypotheses under which the identities apply (smoothness, Lefschetz-type
conditions) are the caller's responsibility; this module only does the
arithmetic and never rounds.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError


def bezout_degree(d: int, multipliers) -> int:
    """Degree d * m_1 * ... * m_k of a complete intersection cut on a degree-d
    hypersurface by hypersurfaces of the given degrees."""
    if d < 1:
        raise DomainError(f"hypersurface degree must be >= 1, got {d}")
    result = d
    for m in multipliers:
        if m < 0:
            raise DomainError(f"multiplier degrees must be natural: {m}")
        result *= m
    return result


def intersection_number(deg_z: int, deg_w: int, deg_x: int) -> Fraction:
    """deg Z * deg W / deg X, exactly; a non-integral value signals that the
    degree-pairing hypotheses do not apply."""
    if deg_x < 1:
        raise DomainError(f"ambient degree must be >= 1, got {deg_x}")
    return Fraction(deg_z * deg_w, deg_x)


def mult_bound(deg_w: int, deg_x: int) -> Fraction:
    """Upper bound deg W / deg X for the multiplicity of W along a positive-
    dimensional subvariety."""
    if deg_x < 1:
        raise DomainError(f"ambient degree must be >= 1, got {deg_x}")
    return Fraction(deg_w, deg_x)


def residual_degree(d: int, deg_z: int, r: int) -> int:
    """(d-1)^r * deg Z: the degree after r residual-cone steps."""
    if d < 2:
        raise DomainError(f"residual steps need degree >= 2, got {d}")
    if r < 0:
        raise DomainError(f"step count must be natural, got {r}")
    return (d - 1) ** r * deg_z
