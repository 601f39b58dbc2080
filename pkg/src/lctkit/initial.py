"""Initial ideals of polynomial ideals supported at the origin, computed by
exact linear algebra in the quotient by a power of the maximal ideal.

The image of the ideal in R/m^N is spanned by the truncations of the shifted
generators x^alpha * g with |alpha| < N, because the quotient is a ring.  A
Gaussian elimination whose pivots are the order-minimal monomials of each row
yields the initial monomials of the image; the non-pivot monomials of degree
below N are the standard monomials.  A run is certified once every standard
monomial sits at least two degrees under the truncation, which pins the
staircase (and hence the local dimension) for ideals vanishing only at the
origin.  For ideals with positive-dimensional vanishing locus the reported
generators can include truncation-boundary monomials of degree N-1; the
dimension and threshold suites therefore stick to the zero-dimensional case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, TruncationCapError
from .newton import is_log_canonical
from .poly import MonomialIdeal, Polynomial, minimalize, total_degree
from .rationals import ONE


@dataclass(frozen=True)
class TermOrder:
    """Total order on monomials; the 'lowest' monomial is the initial one.

    * ``lexlow``: lexicographic on exponent vectors, first variable most
      significant; the initial monomial minimizes the first exponent, then
      the second, and so on.
    * ``weightlex``: compare total weight first (positive integer weights),
      ties broken by ``lexlow``.
    """

    kind: str
    weights: tuple | None = None

    @staticmethod
    def lexlow() -> "TermOrder":
        return TermOrder("lexlow")

    @staticmethod
    def weight(weights) -> "TermOrder":
        weights = tuple(int(w) for w in weights)
        if not weights or any(w <= 0 for w in weights):
            raise DomainError(f"weights must be positive integers: {weights}")
        return TermOrder("weightlex", weights)

    def key(self, vec: tuple):
        if self.kind == "lexlow":
            return vec
        if self.kind == "weightlex":
            if len(self.weights) != len(vec):
                raise DomainError("weight vector length does not match dimension")
            return (sum(w * e for w, e in zip(self.weights, vec)), vec)
        raise DomainError(f"unknown term order kind {self.kind!r}")


@dataclass(frozen=True)
class TruncationCertificate:
    truncation_degree: int
    max_standard_degree: int
    status: str  # "certified" when max standard degree <= N - 2, else "heuristic"

    @property
    def certified(self) -> bool:
        return self.status == "certified"


@dataclass(frozen=True)
class TruncatedImage:
    dim: int
    truncation_degree: int
    standard: tuple  # non-pivot monomials of degree < N, sorted
    pivots: tuple  # initial monomials of the image, sorted


def _validate_generators(generators) -> int:
    generators = list(generators)
    if not generators:
        raise DomainError("need at least one generator")
    dim = generators[0].dim
    for g in generators:
        if not isinstance(g, Polynomial):
            raise DomainError("generators must be polynomials")
        if g.dim != dim:
            raise DomainError("generators live in different dimensions")
        if g.is_zero():
            raise DomainError("zero generator")
    return dim


def _monomials_below(dim: int, bound: int):
    """All exponent vectors with total degree < bound."""
    current = [(0,) * dim]
    yield from current
    for _ in range(1, bound):
        grown = set()
        for vec in current:
            for j in range(dim):
                grown.add(vec[:j] + (vec[j] + 1,) + vec[j + 1 :])
        current = sorted(grown)
        yield from current


def truncated_image(generators, truncation: int, order: TermOrder | None = None) -> TruncatedImage:
    """Row-reduce the shifted generators inside R/m^N and report the staircase."""
    if truncation < 1:
        raise DomainError(f"truncation degree must be >= 1, got {truncation}")
    order = order or TermOrder.lexlow()
    dim = _validate_generators(generators)
    monomials = sorted(_monomials_below(dim, truncation), key=order.key)
    rank = {vec: i for i, vec in enumerate(monomials)}

    pivots: dict = {}  # column rank -> normalized row {rank: coeff}
    for g in generators:
        for alpha in monomials:
            row = {}
            for beta, coeff in g.terms.items():
                shifted = tuple(a + b for a, b in zip(alpha, beta))
                if total_degree(shifted) < truncation:
                    row[rank[shifted]] = coeff
            _reduce_into(pivots, row)

    pivot_vecs = tuple(sorted(monomials[p] for p in pivots))
    standard = tuple(sorted(vec for vec in monomials if rank[vec] not in pivots))
    return TruncatedImage(dim, truncation, standard, pivot_vecs)


def _reduce_into(pivots: dict, row: dict):
    while row:
        lead = min(row)
        if lead in pivots:
            factor = row.pop(lead)
            for col, val in pivots[lead].items():
                if col == lead:
                    continue
                updated = row.get(col, 0) - factor * val
                if updated:
                    row[col] = updated
                else:
                    row.pop(col, None)
        else:
            inv = ONE / row[lead]
            pivots[lead] = {col: val * inv for col, val in row.items()}
            return


def initial_ideal(
    generators, order: TermOrder | None = None, truncation: int | None = None
) -> tuple[MonomialIdeal, TruncationCertificate]:
    """Minimalized initial monomials of the truncated image, with certificate."""
    if truncation is None:
        raise DomainError("an explicit truncation degree is required")
    image = truncated_image(generators, truncation, order)
    ideal = minimalize(image.pivots, dim=image.dim)
    max_standard = max((total_degree(v) for v in image.standard), default=0)
    status = "certified" if max_standard <= truncation - 2 else "heuristic"
    return ideal, TruncationCertificate(truncation, max_standard, status)


@dataclass(frozen=True)
class LocalDimResult:
    dimension: int
    initial: MonomialIdeal
    certificate: TruncationCertificate


def _default_start(generators) -> int:
    degree = max(
        total_degree(vec) for g in generators for vec in g.terms
    )
    return max(4, degree + 2)


def local_dim(
    generators,
    order: TermOrder | None = None,
    start: int | None = None,
    cap: int = 64,
) -> LocalDimResult:
    """Standard-monomial count under a doubling truncation policy.

    Doubles the truncation degree until the run certifies; raises (never
    silently degrades) when the cap is passed, which is the signature of an
    ideal not vanishing only at the origin.
    """
    _validate_generators(generators)
    order = order or TermOrder.lexlow()
    truncation = start if start is not None else _default_start(generators)
    if truncation > cap:
        raise DomainError(f"starting truncation {truncation} already exceeds cap {cap}")
    while True:
        image = truncated_image(generators, truncation, order)
        ideal = minimalize(image.pivots, dim=image.dim)
        max_standard = max((total_degree(v) for v in image.standard), default=0)
        if max_standard <= truncation - 2:
            certificate = TruncationCertificate(truncation, max_standard, "certified")
            return LocalDimResult(len(image.standard), ideal, certificate)
        truncation *= 2
        if truncation > cap:
            raise TruncationCapError(
                f"no certified truncation within cap {cap}; the ideal may not "
                f"vanish only at the origin"
            )


@dataclass(frozen=True)
class SemidecideResult:
    verdict: str  # "log-canonical" | "unknown"
    initial: MonomialIdeal
    certificate: TruncationCertificate


def lc_semidecide(
    generators,
    c,
    order: TermOrder | None = None,
    start: int | None = None,
    cap: int = 64,
) -> SemidecideResult:
    """One-directional test: log canonicity of the initial ideal transfers to
    the ideal itself, so the only verdicts are 'log-canonical' and 'unknown'.

    The truncation doubles until it certifies (which happens exactly for
    ideals vanishing only at the origin) or, failing that, until the computed
    initial ideal stops changing; the latter runs are flagged heuristic and
    theorem suites ignore them.
    """
    c = Fraction(c)
    _validate_generators(generators)
    order = order or TermOrder.lexlow()
    truncation = start if start is not None else _default_start(generators)
    if truncation > cap:
        raise DomainError(f"starting truncation {truncation} already exceeds cap {cap}")
    previous = None
    while True:
        image = truncated_image(generators, truncation, order)
        ideal = minimalize(image.pivots, dim=image.dim)
        max_standard = max((total_degree(v) for v in image.standard), default=0)
        if max_standard <= truncation - 2:
            certificate = TruncationCertificate(truncation, max_standard, "certified")
        elif previous == ideal:
            certificate = TruncationCertificate(truncation, max_standard, "heuristic")
        else:
            previous = ideal
            truncation *= 2
            if truncation > cap:
                raise TruncationCapError(
                    f"initial ideal did not certify or stabilize within cap {cap}"
                )
            continue
        verdict = "log-canonical" if is_log_canonical(ideal, c) else "unknown"
        return SemidecideResult(verdict, ideal, certificate)


def weight_initial_forms(generators, weights) -> list[Polynomial]:
    """For each generator, the sum of its minimal-weight terms (the fiber of
    the one-parameter degeneration at parameter zero)."""
    dim = _validate_generators(generators)
    weights = tuple(int(w) for w in weights)
    if len(weights) != dim:
        raise DomainError("weight vector length does not match dimension")
    if any(w <= 0 for w in weights):
        raise DomainError(f"weights must be positive integers: {weights}")
    forms = []
    for g in generators:
        best = min(sum(w * e for w, e in zip(weights, vec)) for vec in g.terms)
        kept = {
            vec: coeff
            for vec, coeff in g.terms.items()
            if sum(w * e for w, e in zip(weights, vec)) == best
        }
        forms.append(Polynomial(dim, kept))
    return forms
