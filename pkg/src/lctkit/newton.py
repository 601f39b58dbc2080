"""Newton polyhedra of monomial ideals and everything decided through them:
exact membership, the diagonal crossing, log canonical thresholds, and the
upper multiplier ideal.

The polyhedron of an ideal is the convex hull of its generator exponents plus
the closed positive orthant.  No facet is ever enumerated; every geometric
question is answered by an exact rational LP, so threshold equalities are
decided rather than approximated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, DomainError
from .poly import MonomialIdeal, divides, minimalize
from .rationals import INFINITY
from .simplex import lp_feasible, solve_lp

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class NewtonPolyhedron:
    """Convex hull of the vertex candidates, Minkowski-summed with the orthant."""

    dim: int
    vertex_candidates: tuple  # generator exponents of the source ideal


@dataclass(frozen=True)
class DiagonalCrossing:
    """The entry point xi of the diagonal into the polyhedron plus normals.

    ``dual_normal`` comes straight from the simplex dual and is normalized to
    sum 1; ``canonical_normal`` is the lexicographically smallest supporting
    normal scaled to sum n, a deterministic choice for reproducible output.
    """

    xi: Fraction
    dual_normal: tuple
    canonical_normal: tuple


def newton_polyhedron(ideal: MonomialIdeal) -> NewtonPolyhedron:
    return NewtonPolyhedron(ideal.dim, ideal.generators)


def contains(poly: NewtonPolyhedron, point) -> bool:
    """Exact membership: is there a convex combination of vertex candidates
    componentwise below the point?"""
    q = tuple(Fraction(v) for v in point)
    if len(q) != poly.dim:
        raise DimensionMismatchError(
            f"point has dimension {len(q)}, polyhedron has {poly.dim}"
        )
    if any(v < 0 for v in q):
        raise DomainError(f"membership is defined on the nonnegative orthant: {q}")
    gens = poly.vertex_candidates
    m, n = len(gens), poly.dim
    # columns: lambda_1..lambda_m, s_1..s_n
    rows = []
    rhs = []
    for j in range(n):
        rows.append([Fraction(g[j]) for g in gens] + _unit_row(n, j))
        rhs.append(q[j])
    rows.append([_ONE] * m + [_ZERO] * n)
    rhs.append(_ONE)
    return lp_feasible(rows, rhs)


def _unit_row(n: int, j: int) -> list:
    row = [_ZERO] * n
    row[j] = _ONE
    return row


def _crossing_lp(poly: NewtonPolyhedron):
    """LP solution for: minimize t with t*(1,...,1) in the polyhedron.

    Returns None for the degenerate unit-ideal polyhedron (xi = 0, every
    normal supports).
    """
    gens = poly.vertex_candidates
    if any(all(e == 0 for e in g) for g in gens):
        return None
    m, n = len(gens), poly.dim
    # columns: lambda_1..lambda_m, t, s_1..s_n ; minimize t
    rows = []
    rhs = []
    for j in range(n):
        rows.append(
            [Fraction(g[j]) for g in gens] + [Fraction(-1)] + _unit_row(n, j)
        )
        rhs.append(_ZERO)
    rows.append([_ONE] * m + [_ZERO] * (n + 1))
    rhs.append(_ONE)
    cost = [_ZERO] * m + [_ONE] + [_ZERO] * n
    return solve_lp(rows, rhs, cost)


def diagonal_crossing(poly: NewtonPolyhedron) -> DiagonalCrossing | None:
    """Smallest t with t*(1,...,1) in the polyhedron, with dual certificate.

    Returns None for the degenerate unit-ideal polyhedron.
    """
    solution = _crossing_lp(poly)
    if solution is None:
        return None
    n = poly.dim
    xi = solution.value
    dual = tuple(-solution.y[j] for j in range(n))
    canonical = _lexmin_supporting_normal(poly.vertex_candidates, n, xi)
    return DiagonalCrossing(xi=xi, dual_normal=dual, canonical_normal=canonical)


def _lexmin_supporting_normal(gens, n: int, xi: Fraction) -> tuple:
    """Lexicographically smallest a >= 0 with sum(a) = n and a.g >= xi*n for
    all vertex candidates g, found one coordinate at a time."""
    target = xi * n
    pinned: list = []
    for k in range(n):
        # columns: a_1..a_n, u_1..u_m (surplus per generator)
        m = len(gens)
        rows = [[_ONE] * n + [_ZERO] * m]
        rhs = [Fraction(n)]
        for i, g in enumerate(gens):
            row = [Fraction(g[j]) for j in range(n)] + [_ZERO] * m
            row[n + i] = Fraction(-1)
            rows.append(row)
            rhs.append(target)
        for j, value in enumerate(pinned):
            row = [_ZERO] * (n + m)
            row[j] = _ONE
            rows.append(row)
            rhs.append(value)
        cost = [_ZERO] * (n + m)
        cost[k] = _ONE
        pinned.append(solve_lp(rows, rhs, cost).value)
    return tuple(pinned)


def primitive_integer_normal(normal) -> tuple:
    """Scale a rational normal to coprime integers (for display and JSON)."""
    normal = [Fraction(v) for v in normal]
    scale = 1
    for v in normal:
        scale = scale * v.denominator // math.gcd(scale, v.denominator)
    ints = [int(v * scale) for v in normal]
    g = 0
    for v in ints:
        g = math.gcd(g, abs(v))
    if g > 1:
        ints = [v // g for v in ints]
    return tuple(ints)


def lct(ideal: MonomialIdeal):
    """Log canonical threshold 1/xi; INFINITY for the unit ideal."""
    if not ideal.generators:
        raise DomainError("ideal has no generators")
    solution = _crossing_lp(newton_polyhedron(ideal))
    if solution is None:
        return INFINITY
    return 1 / solution.value


def is_log_canonical(ideal: MonomialIdeal, c) -> bool:
    """Closed criterion: the pair at coefficient c is log canonical iff c <= lct."""
    c = Fraction(c)
    if c <= 0:
        raise DomainError(f"coefficient must be positive, got {c}")
    threshold = lct(ideal)
    if threshold is INFINITY:
        return True
    return c <= threshold


def _scaled_membership(poly: NewtonPolyhedron, vec, c: Fraction) -> bool:
    """Is vec + (1,...,1) in c * P?  (Closed membership.)"""
    q = tuple(Fraction(v + 1, 1) / c for v in vec)
    return contains(poly, q)


def _interior_membership(poly: NewtonPolyhedron, vec, c: Fraction) -> bool:
    """Is vec + (1,...,1) in the interior of c * P?

    The polyhedron is upward closed and full dimensional, so a point is
    interior iff some point delta*(1,...,1) below it is still a member; we
    maximize delta by LP and test delta > 0.
    """
    q = tuple(Fraction(v + 1, 1) / c for v in vec)
    gens = poly.vertex_candidates
    m, n = len(gens), poly.dim
    # columns: lambda_1..lambda_m, delta, s_1..s_n ; maximize delta
    rows = []
    rhs = []
    for j in range(n):
        rows.append([Fraction(g[j]) for g in gens] + [_ONE] + _unit_row(n, j))
        rhs.append(q[j])
    rows.append([_ONE] * m + [_ZERO] * (n + 1))
    rhs.append(_ONE)
    cost = [_ZERO] * m + [Fraction(-1)] + [_ZERO] * n
    try:
        solution = solve_lp(rows, rhs, cost)
    except DomainError:
        return False
    return -solution.value > 0


def _minimal_members(poly: NewtonPolyhedron, c: Fraction, member) -> MonomialIdeal:
    """Minimal v in the box with member(v) true; membership must be monotone
    under increasing v.  The box [0, max_g ceil(c*g_j)] per coordinate is
    exhaustive because any larger coordinate can be decreased while staying a
    member."""
    n = poly.dim
    bounds = [
        max(math.ceil(c * g[j]) for g in poly.vertex_candidates) for j in range(n)
    ]
    if n == 2:
        return _minimal_members_2d(poly, bounds, member)
    candidates = sorted(
        _box_points(bounds), key=lambda v: (sum(v), v)
    )
    found: list = []
    for v in candidates:
        if any(divides(g, v) for g in found):
            continue
        if member(v):
            found.append(v)
    if not found:
        raise DomainError("no members found in the search box")  # unreachable
    return minimalize(found, dim=n)


def _box_points(bounds):
    if not bounds:
        yield ()
        return
    for head in range(bounds[0] + 1):
        for tail in _box_points(bounds[1:]):
            yield (head,) + tail


def _minimal_members_2d(poly: NewtonPolyhedron, bounds, member) -> MonomialIdeal:
    """Column-profile search: for each v1 the member set is an upward ray in
    v2, so binary search finds its foot; profile corners are the generators."""
    b1, b2 = bounds
    found = []
    previous_height = None
    for v1 in range(b1 + 1):
        if not member((v1, b2)):
            continue  # column empty: every nonempty column's foot is <= b2
        lo, hi = 0, b2
        while lo < hi:
            mid = (lo + hi) // 2
            if member((v1, mid)):
                hi = mid
            else:
                lo = mid + 1
        if previous_height is None or lo < previous_height:
            found.append((v1, lo))
            previous_height = lo
        if lo == 0 and previous_height == 0:
            break
    if not found:
        raise DomainError("no members found in the search box")  # unreachable
    return minimalize(found, dim=2)


def multiplier_ideal_plus(ideal: MonomialIdeal, c) -> MonomialIdeal:
    """Upper multiplier ideal of I^c: monomials v with v + (1,...,1) in c*P(I).

    The closed membership equals the one-sided limit of ordinary multiplier
    ideals at coefficients just below c.
    """
    c = Fraction(c)
    if c <= 0:
        raise DomainError(f"coefficient must be positive, got {c}")
    poly = newton_polyhedron(ideal)
    return _minimal_members(poly, c, lambda v: _scaled_membership(poly, v, c))


def multiplier_ideal_strict(ideal: MonomialIdeal, c) -> MonomialIdeal:
    """Ordinary multiplier ideal: interior membership instead of closed."""
    c = Fraction(c)
    if c <= 0:
        raise DomainError(f"coefficient must be positive, got {c}")
    poly = newton_polyhedron(ideal)
    return _minimal_members(poly, c, lambda v: _interior_membership(poly, v, c))
