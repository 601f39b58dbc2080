"""Exact two-phase simplex over the rationals with Bland's anti-cycling rule.

Solves ``min c.x  s.t.  A x = b, x >= 0`` with every entry a Fraction, so
feasibility and optimality are decided exactly.  Problem sizes in this package
are tiny (a handful of rows, tens of columns); clarity and exactness win over
speed.  Dual values are read off the artificial columns of the final tableau,
which is what the Newton-polyhedron code uses to extract supporting-hyperplane
normals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class InfeasibleError(DomainError):
    pass


class UnboundedError(DomainError):
    pass


@dataclass
class LPSolution:
    value: Fraction
    x: list  # primal values, length = number of structural columns
    y: list  # dual values, one per input row (for the rows as given)


def _pivot(tableau: list, basis: list, row: int, col: int):
    pivot_row = tableau[row]
    inv = _ONE / pivot_row[col]
    if inv != 1:
        pivot_row = [v * inv for v in pivot_row]
        tableau[row] = pivot_row
    for i, current in enumerate(tableau):
        if i == row:
            continue
        factor = current[col]
        if factor != 0:
            tableau[i] = [a - factor * b for a, b in zip(current, pivot_row)]
    basis[row] = col


def _run_simplex(tableau: list, basis: list, cost: list, allowed_cols: int) -> list:
    """Iterate Bland pivots until the cost row has no negative reduced cost.

    ``cost`` is the objective row [reduced costs..., -objective value]; it is
    updated in place alongside the tableau.  Entering columns are restricted
    to indices < allowed_cols.  Returns the final cost row.
    """
    while True:
        entering = -1
        for j in range(allowed_cols):
            if cost[j] < 0:
                entering = j
                break
        if entering < 0:
            return cost
        leaving = -1
        best_ratio = None
        for i, row in enumerate(tableau):
            coeff = row[entering]
            if coeff > 0:
                ratio = row[-1] / coeff
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[i] < basis[leaving])
                ):
                    best_ratio = ratio
                    leaving = i
        if leaving < 0:
            raise UnboundedError("linear program is unbounded")
        _pivot(tableau, basis, leaving, entering)
        pivot_row = tableau[leaving]
        factor = cost[entering]
        if factor != 0:
            for j in range(len(cost)):
                cost[j] -= factor * pivot_row[j]


def solve_lp(A, b, c) -> LPSolution:
    """Minimize c.x subject to A x = b, x >= 0.  Raises on infeasible/unbounded."""
    m = len(A)
    n = len(c)
    c = [Fraction(v) for v in c]
    flips = []
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if len(row) != n:
            raise DomainError("ragged constraint matrix")
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
            flips.append(-1)
        else:
            flips.append(1)
        rows.append(row + [rhs])

    # phase 1: one artificial per row, minimize their sum
    tableau = []
    for i, row in enumerate(rows):
        art = [_ZERO] * m
        art[i] = _ONE
        tableau.append(row[:n] + art + [row[-1]])
    basis = [n + i for i in range(m)]
    width = n + m + 1
    cost = [_ZERO] * width
    for row in tableau:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    _run_simplex(tableau, basis, cost, n + m)
    if -cost[-1] != 0:
        raise InfeasibleError("linear program is infeasible")

    # drive leftover artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= n:
            for j in range(n):
                if tableau[i][j] != 0:
                    _pivot(tableau, basis, i, j)
                    break
            # an all-zero structural row is redundant; its artificial stays
            # basic at value 0, which is harmless below

    # phase 2 with the real objective; artificial columns may not re-enter
    cost = list(c) + [_ZERO] * m + [_ZERO]
    for i, var in enumerate(basis):
        if var < n and c[var] != 0:
            factor = c[var]
            row = tableau[i]
            for j in range(width):
                cost[j] -= factor * row[j]
    _run_simplex(tableau, basis, cost, n)

    x = [_ZERO] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = tableau[i][-1]
    y = [flips[i] * (-cost[n + i]) for i in range(m)]
    return LPSolution(value=-cost[-1], x=x, y=y)


def lp_feasible(A, b) -> bool:
    """Decide whether {x >= 0 : A x = b} is nonempty (phase 1 only)."""
    m = len(A)
    if m == 0:
        return True
    n = len(A[0])
    rows = []
    for i in range(m):
        row = [Fraction(v) for v in A[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        rows.append(row + [rhs])
    tableau = []
    for i, row in enumerate(rows):
        art = [_ZERO] * m
        art[i] = _ONE
        tableau.append(row[:n] + art + [row[-1]])
    basis = [n + i for i in range(m)]
    cost = [_ZERO] * (n + m + 1)
    for row in tableau:
        for j in range(n):
            cost[j] -= row[j]
        cost[-1] -= row[-1]
    _run_simplex(tableau, basis, cost, n + m)
    return -cost[-1] == 0
