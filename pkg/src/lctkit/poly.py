"""Exponent vectors, polynomials over the rationals, and monomial ideals.

Variables are positional: an exponent vector is a plain ``tuple[int, ...]``
whose length is the ambient dimension, and names exist only in the parser and
printers.  All values here are immutable after construction and every
operation is a pure function, so everything can be shared freely.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import DimensionMismatchError, DomainError
from .rationals import INFINITY, ZERO

ExponentVector = tuple  # tuple[int, ...]; length = ambient dimension


def check_exponent_vector(vec, dim: int) -> tuple:
    vec = tuple(vec)
    if len(vec) != dim:
        raise DimensionMismatchError(
            f"exponent vector {vec} has length {len(vec)}, expected {dim}"
        )
    if any((not isinstance(e, int)) or e < 0 for e in vec):
        raise DomainError(f"exponents must be natural numbers: {vec}")
    return vec


def divides(a: tuple, b: tuple) -> bool:
    """Componentwise divisibility: x^a | x^b."""
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot compare {a} and {b}")
    return all(ai <= bi for ai, bi in zip(a, b))


def add_vectors(a: tuple, b: tuple) -> tuple:
    if len(a) != len(b):
        raise DimensionMismatchError(f"cannot add {a} and {b}")
    return tuple(ai + bi for ai, bi in zip(a, b))


def total_degree(vec: tuple) -> int:
    return sum(vec)


def check_weight_vector(weights, dim: int) -> tuple:
    """Validate a weight vector: positive rationals, matching dimension."""
    weights = tuple(Fraction(w) for w in weights)
    if len(weights) != dim:
        raise DimensionMismatchError(
            f"weight vector has length {len(weights)}, expected {dim}"
        )
    if any(w <= 0 for w in weights):
        raise DomainError(f"weights must be strictly positive: {weights}")
    return weights


@dataclass(eq=True)
class Polynomial:
    """A polynomial as a finite map exponent vector -> nonzero coefficient."""

    dim: int
    terms: dict  # tuple[int, ...] -> Fraction, no zero values stored

    def __post_init__(self):
        clean = {}
        for vec, coeff in self.terms.items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            clean[check_exponent_vector(vec, self.dim)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls(dim, {})

    @classmethod
    def monomial(cls, vec, coeff=1, dim: int | None = None) -> "Polynomial":
        vec = tuple(vec)
        return cls(dim if dim is not None else len(vec), {vec: Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.dim != other.dim:
            raise DimensionMismatchError("polynomials live in different dimensions")
        terms = dict(self.terms)
        for vec, coeff in other.terms.items():
            terms[vec] = terms.get(vec, ZERO) + coeff
        return Polynomial(self.dim, terms)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.dim, {v: -c for v, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.dim != other.dim:
            raise DimensionMismatchError("polynomials live in different dimensions")
        terms: dict = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = add_vectors(u, v)
                terms[w] = terms.get(w, ZERO) + a * b
        return Polynomial(self.dim, terms)

    def scale(self, coeff) -> "Polynomial":
        coeff = Fraction(coeff)
        return Polynomial(self.dim, {v: coeff * c for v, c in self.terms.items()})


def order_at_origin(p: Polynomial):
    """Minimum total degree of a term; INFINITY for the zero polynomial."""
    if p.is_zero():
        return INFINITY
    return min(total_degree(v) for v in p.terms)


def weight_of(p: Polynomial, weights):
    """Minimum of sum(w_i * e_i) over the terms of p; INFINITY if p = 0."""
    weights = check_weight_vector(weights, p.dim)
    if p.is_zero():
        return INFINITY
    return min(sum(w * e for w, e in zip(weights, vec)) for vec in p.terms)


@dataclass(frozen=True, eq=True)
class MonomialIdeal:
    """A monomial ideal by its minimal generator exponents, canonically sorted.

    The generator set is an antichain under componentwise divisibility; the
    unit ideal is represented by the single generator (0, ..., 0).  Equality
    is structural, which is enough because the representation is canonical.
    """

    dim: int
    generators: tuple = field(default=())

    def __post_init__(self):
        gens = tuple(sorted({check_exponent_vector(g, self.dim) for g in self.generators}))
        if not gens:
            raise DomainError("a monomial ideal needs at least one generator")
        # in lex order a divisor always precedes its multiples
        for i, a in enumerate(gens):
            for b in gens[i + 1 :]:
                if divides(a, b):
                    raise DomainError(f"generator {b} is divisible by {a}; minimalize first")
        object.__setattr__(self, "generators", gens)

    def is_unit(self) -> bool:
        return self.generators == ((0,) * self.dim,)

    def contains_monomial(self, vec) -> bool:
        vec = check_exponent_vector(vec, self.dim)
        return any(divides(g, vec) for g in self.generators)

    def contains_ideal(self, other: "MonomialIdeal") -> bool:
        """True iff other is a subideal: every generator of other lies in self."""
        if self.dim != other.dim:
            raise DimensionMismatchError("ideals live in different dimensions")
        return all(self.contains_monomial(g) for g in other.generators)

    def power(self, r: int) -> "MonomialIdeal":
        """The ideal generated by all r-fold sums of generators."""
        if r < 1:
            raise DomainError(f"power exponent must be >= 1, got {r}")
        sums = set()
        for combo in itertools.combinations_with_replacement(self.generators, r):
            total = (0,) * self.dim
            for g in combo:
                total = add_vectors(total, g)
            sums.add(total)
        return minimalize(sums, dim=self.dim)

    def permuted(self, perm) -> "MonomialIdeal":
        """Apply a coordinate permutation: entry i comes from position perm[i]."""
        return minimalize(
            {tuple(g[perm[i]] for i in range(self.dim)) for g in self.generators},
            dim=self.dim,
        )


def minimalize(raw: Iterable, dim: int | None = None) -> MonomialIdeal:
    """Prune a generator set down to its divisibility-minimal vectors."""
    vectors = [tuple(v) for v in raw]
    if not vectors:
        raise DomainError("cannot build a monomial ideal from an empty generator set")
    if dim is None:
        dim = len(vectors[0])
    vectors = sorted({check_exponent_vector(v, dim) for v in vectors})
    minimal = []
    for v in vectors:
        if not any(divides(m, v) for m in minimal):
            minimal.append(v)
    return MonomialIdeal(dim, tuple(minimal))


def unit_ideal(dim: int) -> MonomialIdeal:
    return MonomialIdeal(dim, ((0,) * dim,))
