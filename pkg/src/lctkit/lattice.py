"""Lattice-point counts in the simplices cut out by a positive normal, and
the closed-form lower bounds they satisfy.

For a normal a > 0 the simplex is {r in N^n : sum a_i r_i <= sum a_i}.  Its
count is bounded below by the pairing argument (of r and 2-r, one is always
inside) and by the cyclic-shift argument (some cyclic permutation of any r
with sum r_i <= n is inside).  Counting is plain depth-first enumeration;
these are desk-scale simplices, not Ehrhart territory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError


@dataclass(frozen=True)
class SimplexSpec:
    """A strictly positive rational normal; zero entries would make the count
    infinite and are rejected at construction."""

    normal: tuple

    def __post_init__(self):
        normal = tuple(Fraction(v) for v in self.normal)
        if not normal:
            raise DomainError("normal must be nonempty")
        if any(v <= 0 for v in normal):
            raise DomainError(f"normal entries must be strictly positive: {normal}")
        object.__setattr__(self, "normal", normal)

    @property
    def dim(self) -> int:
        return len(self.normal)

    @property
    def budget(self) -> Fraction:
        return sum(self.normal, Fraction(0))

    def contains_point(self, point) -> bool:
        point = tuple(point)
        if len(point) != self.dim:
            raise DomainError("point dimension does not match the normal")
        return sum(a * r for a, r in zip(self.normal, point)) <= self.budget


def simplex_lattice_points(spec: SimplexSpec):
    """Yield every natural point r with sum a_i r_i <= sum a_i."""

    def walk(index: int, remaining: Fraction, prefix: tuple):
        if index == spec.dim:
            yield prefix
            return
        coeff = spec.normal[index]
        top = int(remaining / coeff)
        for value in range(top + 1):
            yield from walk(index + 1, remaining - coeff * value, prefix + (value,))

    yield from walk(0, spec.budget, ())


def simplex_count(spec: SimplexSpec) -> int:
    return sum(1 for _ in simplex_lattice_points(spec))


def pairing_bound(n: int) -> Fraction:
    """Half of 3^n: of each pair {r, 2-r} with r in {0,1,2}^n, one point lies
    in the simplex."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return Fraction(3**n, 2)


def pairing_bound_attained(n: int) -> Fraction:
    """(3^n + 1)/2: the center (1,...,1) pairs with itself and always lies in
    the simplex, so the enumeration actually achieves this."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return Fraction(3**n + 1, 2)


def cyclic_bound(n: int) -> Fraction:
    """C(2n, n)/n from the cyclic-permutation argument."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return Fraction(math.comb(2 * n, n), n)


def combined_bound(n: int) -> Fraction:
    """C(2n, n)/n + (n-1)/(2n) * 3^n, combining the two arguments."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return cyclic_bound(n) + Fraction(n - 1, 2 * n) * 3**n


@dataclass(frozen=True)
class CrossoverRow:
    n: int
    bound_pairing: Fraction
    bound_cyclic: Fraction
    larger: str  # which bound is larger as computed
    recorded_claim: str  # the bound recorded in the source text as better
    agrees: bool


def crossover_table(max_n: int) -> list[CrossoverRow]:
    """Compare the two bounds per dimension.

    The recorded prose claims the pairing bound wins for n <= 5 and the
    cyclic bound from n >= 6 on; direct evaluation has the pairing bound
    larger through n = 12, so the rows carry an agreement flag instead of
    asserting the prose.
    """
    if max_n < 1:
        raise DomainError(f"dimension must be >= 1, got {max_n}")
    rows = []
    for n in range(1, max_n + 1):
        pairing = pairing_bound(n)
        cyclic = cyclic_bound(n)
        larger = "pairing" if pairing > cyclic else "cyclic"
        recorded = "pairing" if n <= 5 else "cyclic"
        rows.append(
            CrossoverRow(
                n=n,
                bound_pairing=pairing,
                bound_cyclic=cyclic,
                larger=larger,
                recorded_claim=recorded,
                agrees=(larger == recorded),
            )
        )
    return rows
