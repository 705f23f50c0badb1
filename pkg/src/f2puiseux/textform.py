"""Canonical text rendering and parsing of elements.

The wire format writes an element as an optional valuation factor
followed by a unit and a precision marker:

    x^(-5/3) * 1 + x^(1/3) + O(x^(2))
    1 + x^(1/2) + x^(1) + O(x^(3/2))

Output always parenthesizes exponents and prints reduced fractions
with integer exponents bare of a denominator.  Input is more liberal:
integer exponents may drop the parentheses ("x^2"), whitespace around
"+" and "*" is free, and a raw sum of powers without a leading 1 is
accepted and factored into canonical form, so parsing followed by
formatting is idempotent and formatting followed by parsing is the
identity.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import (ElementSyntaxError, ExponentNotIncreasing,
                     NonpositivePrecision, NonUnitLeadingTerm)
from .puiseux import (DEFAULT_DEN_CAP, L0Element, PuiseuxUnit, Rational,
                      compose, decompose_raw)

_EXPONENT = r"(?:\((-?\d+)(?:/(\d+))?\)|(-?\d+))"
_X_TERM = re.compile(rf"x\^{_EXPONENT}\Z")
_O_TERM = re.compile(rf"O\(x\^{_EXPONENT}\)\Z")
_RATIONAL = re.compile(r"(-?\d+)(?:/(\d+))?\Z")


def parse_rational(text: str, position: int = 0) -> Rational:
    """Parse "n" or "n/d" with positive d."""
    m = _RATIONAL.match(text.strip())
    if m is None:
        raise ElementSyntaxError(f"expected a rational number, got {text!r}",
                                 position)
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ElementSyntaxError("zero denominator", position)
    return Fraction(int(num), int(den) if den is not None else 1)


def _exponent_from_match(m: re.Match, position: int) -> Rational:
    num = m.group(1) if m.group(1) is not None else m.group(3)
    den = m.group(2)
    if den is not None and int(den) == 0:
        raise ElementSyntaxError("zero denominator in exponent", position)
    return Fraction(int(num), int(den) if den is not None else 1)


def _split_terms(s: str) -> list[tuple[int, str]]:
    # "+" never occurs inside exponent parentheses, so a flat split is exact
    parts = []
    start = 0
    while True:
        cut = s.find("+", start)
        if cut < 0:
            parts.append((start, s[start:]))
            return parts
        parts.append((start, s[start:cut]))
        start = cut + 1


def _term_exponent(pos: int, text: str) -> Rational:
    if text == "1":
        return Fraction(0)
    m = _X_TERM.match(text)
    if m is None:
        raise ElementSyntaxError(
            f"expected '1' or 'x^(a/b)', got {text!r}", pos)
    return _exponent_from_match(m, pos)


def parse_element(s: str, *,
                  den_cap: int | None = DEFAULT_DEN_CAP) -> L0Element:
    """Parse element text into its canonical factored form."""
    raw_parts = _split_terms(s)
    parts = []
    for off, chunk in raw_parts:
        stripped = chunk.strip()
        if not stripped:
            raise ElementSyntaxError("empty term", off)
        parts.append((off + chunk.index(stripped[0]), stripped))

    if len(parts) < 2:
        raise ElementSyntaxError(
            "element needs at least one term and a trailing O(x^(P))",
            parts[-1][0] if parts else 0)

    o_pos, o_text = parts[-1]
    m = _O_TERM.match(o_text)
    if m is None:
        raise ElementSyntaxError(
            f"expected precision marker O(x^(P)), got {o_text!r}", o_pos)
    aprec = _exponent_from_match(m, o_pos)

    val = None
    body = parts[:-1]
    first_pos, first_text = body[0]
    if "*" in first_text:
        head, _, lead = first_text.partition("*")
        head = head.strip()
        mh = _X_TERM.match(head)
        if mh is None:
            raise ElementSyntaxError(
                f"expected valuation factor 'x^(a/b)', got {head!r}", first_pos)
        val = _exponent_from_match(mh, first_pos)
        lead = lead.strip()
        if lead != "1":
            raise NonUnitLeadingTerm(
                f"unit part must start with 1, got {lead!r}",
                first_pos + first_text.index("*") + 1)
        body[0] = (first_pos, "1")

    exponents = []
    last = None
    for pos, text in body:
        e = _term_exponent(pos, text)
        if last is not None and e <= last:
            raise ExponentNotIncreasing(
                f"exponent {e} does not increase past {last}", pos)
        if e >= aprec:
            raise NonpositivePrecision(
                f"term x^({e}) is not representable below the precision "
                f"O(x^({aprec}))", pos)
        exponents.append(e)
        last = e

    element = decompose_raw(exponents, aprec, den_cap=den_cap)
    if val is not None:
        element = compose(val + element.val, element.unit)
    return element


def parse_unit(s: str, *,
               den_cap: int | None = DEFAULT_DEN_CAP) -> PuiseuxUnit:
    """Parse unit text; reject anything with a nonzero valuation."""
    element = parse_element(s, den_cap=den_cap)
    if element.val != 0:
        raise NonUnitLeadingTerm(
            f"expected a unit starting with 1, found valuation {element.val}")
    return element.unit


def format_unit(u: PuiseuxUnit) -> str:
    """Canonical rendering: ascending exponents, all parenthesized."""
    terms = ["1"] + [f"x^({e})" for e in u.exponents()[1:]]
    return " + ".join(terms) + f" + O(x^({u.aprec}))"


def format_element(a: L0Element) -> str:
    """Canonical rendering; a zero valuation prints as a bare unit."""
    unit_text = format_unit(a.unit)
    if a.val == 0:
        return unit_text
    return f"x^({a.val}) * {unit_text}"
