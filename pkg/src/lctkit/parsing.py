"""Text format for polynomials and monomial ideals.

Grammar (whitespace insignificant, UTF-8):

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := (coeff | factor) ('*' factor)*
    coeff      := integer ['/' positive-integer]
    factor     := var ['^' natural]

A monomial ideal is a comma-separated list of monomials, each a product of
variable powers with the coefficient omitted or equal to 1.  Parsing a printed
value gives back a structurally equal value.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ParseError, UnknownVariableError
from .poly import MonomialIdeal, Polynomial, minimalize


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str):
        got = self.peek()
        if got != ch:
            raise ParseError(f"expected {ch!r}, found {got!r}", self.pos)
        self.pos += 1

    def natural(self) -> int:
        self._skip_ws()
        start = self.pos
        if self.peek() == "-":
            raise ParseError("negative exponent", self.pos)
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a number", start)
        return int(self.text[start : self.pos])

    def name(self) -> tuple[str, int]:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected a variable name", start)
        return self.text[start : self.pos], start

    def at_end(self) -> bool:
        self._skip_ws()
        return self.pos >= len(self.text)


def _parse_factor(tok: _Tokenizer, variables: tuple[str, ...]) -> tuple[int, int]:
    """Return (variable index, exponent)."""
    name, start = tok.name()
    if name not in variables:
        raise UnknownVariableError(f"unknown variable {name!r}", start)
    exponent = 1
    if tok.peek() == "^":
        tok.take()
        exponent = tok.natural()
    return variables.index(name), exponent


def _parse_term(tok: _Tokenizer, variables: tuple[str, ...]) -> tuple[tuple, Fraction]:
    coeff = Fraction(1)
    exponents = [0] * len(variables)
    if tok.peek().isdigit():
        numerator = tok.natural()
        coeff = Fraction(numerator)
        if tok.peek() == "/":
            tok.take()
            pos = tok.pos
            denominator = tok.natural()
            if denominator == 0:
                raise ParseError("zero denominator", pos)
            coeff = Fraction(numerator, denominator)
    else:
        idx, exp = _parse_factor(tok, variables)
        exponents[idx] += exp
    while tok.peek() == "*":
        tok.take()
        idx, exp = _parse_factor(tok, variables)
        exponents[idx] += exp
    return tuple(exponents), coeff


def parse_polynomial(text: str, variables) -> Polynomial:
    """Parse text into an exact polynomial over the given positional variables."""
    variables = tuple(variables)
    if not variables:
        raise DomainError("variable list must not be empty")
    tok = _Tokenizer(text)
    terms: dict = {}
    sign = Fraction(1)
    if tok.peek() in "+-":
        sign = Fraction(-1) if tok.take() == "-" else Fraction(1)
    if tok.at_end():
        raise ParseError("empty polynomial text", tok.pos)
    while True:
        vec, coeff = _parse_term(tok, variables)
        terms[vec] = terms.get(vec, Fraction(0)) + sign * coeff
        if tok.at_end():
            break
        ch = tok.peek()
        if ch not in "+-":
            raise ParseError(f"unexpected {ch!r}", tok.pos)
        sign = Fraction(-1) if tok.take() == "-" else Fraction(1)
    return Polynomial(len(variables), terms)


def parse_monomial_ideal(text: str, variables) -> MonomialIdeal:
    """Parse a comma-separated monomial list into a minimalized ideal."""
    variables = tuple(variables)
    pieces = text.split(",")
    if not any(piece.strip() for piece in pieces):
        raise ParseError("empty monomial list", 0)
    offset = 0
    generators = []
    for piece in pieces:
        if not piece.strip():
            raise ParseError("empty monomial entry", offset)
        poly = _reposition(parse_polynomial, piece, variables, offset)
        if len(poly.terms) != 1:
            raise ParseError("entry is not a single monomial", offset)
        (vec, coeff), = poly.terms.items()
        if coeff != 1:
            raise ParseError("monomial coefficient must be omitted or 1", offset)
        generators.append(vec)
        offset += len(piece) + 1
    return minimalize(generators, dim=len(variables))


def _reposition(parser, piece: str, variables, offset: int):
    try:
        return parser(piece, variables)
    except ParseError as exc:
        raise type(exc)(str(exc).rsplit(" (at position", 1)[0], exc.position + offset) from None


def monomial_to_string(vec, variables) -> str:
    parts = []
    for name, exp in zip(variables, vec):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts) if parts else "1"


def polynomial_to_string(p: Polynomial, variables) -> str:
    variables = tuple(variables)
    if len(variables) != p.dim:
        raise DomainError("variable list length does not match polynomial dimension")
    if p.is_zero():
        return "0"
    chunks = []
    for vec in sorted(p.terms):
        coeff = p.terms[vec]
        mono = monomial_to_string(vec, variables)
        mag = abs(coeff)
        if mono == "1":
            body = _coeff_to_string(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_to_string(mag)}*{mono}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(chunks)


def _coeff_to_string(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def monomial_ideal_to_string(ideal: MonomialIdeal, variables) -> str:
    variables = tuple(variables)
    if len(variables) != ideal.dim:
        raise DomainError("variable list length does not match ideal dimension")
    return ", ".join(monomial_to_string(g, variables) for g in ideal.generators)


def infer_variables(text: str) -> tuple[str, ...]:
    """Variable names in first-appearance order, for CLI convenience."""
    names = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isalpha() or ch == "_":
            start = i
            while i < len(text) and (text[i].isalnum() or text[i] == "_"):
                i += 1
            name = text[start:i]
            if name not in names:
                names.append(name)
        else:
            i += 1
    return tuple(names)
