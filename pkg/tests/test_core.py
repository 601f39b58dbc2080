"""Core value types: parsing, printing, minimalization, orders and weights."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lctkit import (
    INFINITY,
    DimensionMismatchError,
    DomainError,
    MonomialIdeal,
    ParseError,
    Polynomial,
    UnknownVariableError,
    minimalize,
    monomial_ideal_to_string,
    order_at_origin,
    parse_monomial_ideal,
    parse_polynomial,
    polynomial_to_string,
    unit_ideal,
    weight_of,
)

VARS2 = ("x", "y")
VARS3 = ("x", "y", "z")


def test_parse_simple_polynomial():
    p = parse_polynomial("x^2 + y^3", VARS2)
    assert p.terms == {(2, 0): Fraction(1), (0, 3): Fraction(1)}


def test_parse_smooth_surface_equation():
    p = parse_polynomial("z - y^2*x", VARS3)
    assert p.terms == {(0, 0, 1): Fraction(1), (1, 2, 0): Fraction(-1)}


def test_parse_zero_polynomial():
    assert parse_polynomial("0", VARS2).terms == {}


def test_parse_rational_coefficients():
    p = parse_polynomial("5/6*x^2*y - 2*y^3 + 7", VARS2)
    assert p.terms == {
        (2, 1): Fraction(5, 6),
        (0, 3): Fraction(-2),
        (0, 0): Fraction(7),
    }


def test_parse_error_reports_position():
    with pytest.raises(ParseError) as err:
        parse_polynomial("x^2 + ^3", VARS2)
    assert err.value.position == 6


def test_parse_unknown_variable():
    with pytest.raises(UnknownVariableError):
        parse_polynomial("x + w", VARS2)


def test_parse_negative_exponent():
    with pytest.raises(ParseError, match="negative exponent"):
        parse_polynomial("x^-2", VARS2)


def test_parse_ideal_paper_polygon():
    ideal = parse_monomial_ideal("y^7, y^5*x, y^3*x^2, y*x^4, x^6", VARS2)
    assert ideal.generators == ((0, 7), (1, 5), (2, 3), (4, 1), (6, 0))


def test_parse_ideal_prunes_divisible():
    assert parse_monomial_ideal("x^2, x^3", VARS2).generators == ((2, 0),)


def test_parse_ideal_unit():
    assert parse_monomial_ideal("1", VARS2).generators == ((0, 0),)
    assert parse_monomial_ideal("1", VARS2).is_unit()


def test_parse_ideal_rejects_sums_and_empty():
    with pytest.raises(ParseError):
        parse_monomial_ideal("x + y", VARS2)
    with pytest.raises(ParseError):
        parse_monomial_ideal("", VARS2)
    with pytest.raises(ParseError):
        parse_monomial_ideal("2*x", VARS2)


def test_minimalize_examples():
    assert minimalize({(2, 0), (1, 1), (2, 2)}).generators == ((1, 1), (2, 0))
    assert minimalize({(0, 0), (5, 5)}).generators == ((0, 0),)
    assert minimalize({(2, 0), (0, 3)}).generators == ((0, 3), (2, 0))


def test_minimalize_empty_errors():
    with pytest.raises(DomainError):
        minimalize(set())


def test_order_at_origin_examples():
    assert order_at_origin(parse_polynomial("z - y^2*x", VARS3)) == 1
    assert order_at_origin(parse_polynomial("x^4 + y^4", VARS2)) == 4
    assert order_at_origin(Polynomial.zero(2)) is INFINITY


def test_weight_of_examples():
    p = parse_polynomial("x^2 + y^3", VARS2)
    assert weight_of(p, (3, 2)) == 6
    assert weight_of(parse_polynomial("x^4", VARS2), (Fraction(1, 4), 1)) == 1
    assert weight_of(parse_polynomial("1", VARS2), (5, 7)) == 0
    assert weight_of(Polynomial.zero(2), (1, 1)) is INFINITY


def test_weight_of_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        weight_of(parse_polynomial("x", VARS2), (1, 1, 1))


# --- randomized properties -------------------------------------------------

exponents2 = st.tuples(st.integers(0, 6), st.integers(0, 6))
coefficients = st.fractions(
    min_value=Fraction(-50), max_value=Fraction(50), max_denominator=20
).filter(lambda f: f != 0)
polynomials2 = st.dictionaries(exponents2, coefficients, min_size=0, max_size=6).map(
    lambda terms: Polynomial(2, terms)
)
generator_sets = st.sets(exponents2, min_size=1, max_size=8)


@given(polynomials2)
def test_polynomial_roundtrip(p):
    text = polynomial_to_string(p, VARS2)
    assert parse_polynomial(text, VARS2) == p


@given(generator_sets)
def test_ideal_roundtrip(gens):
    ideal = minimalize(gens, dim=2)
    text = monomial_ideal_to_string(ideal, VARS2)
    assert parse_monomial_ideal(text, VARS2) == ideal


@given(generator_sets)
def test_minimalize_idempotent(gens):
    once = minimalize(gens, dim=2)
    again = minimalize(once.generators, dim=2)
    assert once == again


@given(generator_sets, st.randoms())
def test_minimalize_order_independent(gens, rng):
    ordered = list(gens)
    rng.shuffle(ordered)
    assert minimalize(ordered, dim=2) == minimalize(sorted(gens), dim=2)


@given(generator_sets)
def test_minimalize_generates_same_ideal(gens):
    ideal = minimalize(gens, dim=2)
    for g in gens:
        assert ideal.contains_monomial(g)


@settings(max_examples=60)
@given(polynomials2, polynomials2)
def test_order_is_additive(p, q):
    if p.is_zero() or q.is_zero():
        assert order_at_origin(p * q) is INFINITY
    else:
        assert order_at_origin(p * q) == order_at_origin(p) + order_at_origin(q)


@settings(max_examples=60)
@given(polynomials2, polynomials2)
def test_weight_is_additive(p, q):
    w = (Fraction(3, 2), Fraction(2, 5))
    if p.is_zero() or q.is_zero():
        assert weight_of(p * q, w) is INFINITY
    else:
        assert weight_of(p * q, w) == weight_of(p, w) + weight_of(q, w)


def test_ideal_canonical_sorting_and_equality():
    a = MonomialIdeal(2, ((2, 0), (0, 3)))
    b = MonomialIdeal(2, ((0, 3), (2, 0)))
    assert a == b
    assert a.generators == ((0, 3), (2, 0))


def test_ideal_rejects_non_minimal():
    with pytest.raises(DomainError):
        MonomialIdeal(2, ((1, 0), (2, 0)))


def test_unit_ideal_contains_everything():
    unit = unit_ideal(3)
    assert unit.contains_monomial((4, 1, 0))


def test_ideal_power():
    ideal = minimalize({(2, 0), (0, 3)})
    squared = ideal.power(2)
    assert squared.generators == ((0, 6), (2, 3), (4, 0))
