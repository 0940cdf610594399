"""Expression grammar: parsing, error positions, and print round-trips."""

from fractions import Fraction
from random import Random

import pytest

from formalcalc.algebra import Element, Exponent
from formalcalc.checks import random_element
from formalcalc.faadibruno import FdbPoly, derivative_tower, taylor_coefficients
from formalcalc.parser import ParseError, parse_element, parse_fdb


def test_parse_generators():
    assert parse_element("x") == Element.gen(0)
    assert parse_element("log(x)") == Element.gen(1)
    assert parse_element("exp(x)") == Element.gen(-1)
    assert parse_element("l_3(x)") == Element.gen(3)
    assert parse_element("l_-2(x)") == Element.gen(-2)


def test_parse_numbers():
    assert parse_element("5") == Element.const(5)
    assert parse_element("3/4") == Element.const(Fraction(3, 4))
    assert parse_element("-2") == -Element.const(2)


def test_parse_powers():
    r = Exponent.param("r")
    assert parse_element("x^r") == Element.gen(0, r)
    assert parse_element("x^2") == Element.gen(0, 2)
    assert parse_element("x^-1") == Element.gen(0, -1)
    assert parse_element("l_2(x)^(r - 1)") == Element.gen(2, r - 1)
    assert parse_element("x^(2*r + 1)") == Element.gen(0, Exponent.param("r", 2, 1))


def test_parse_arithmetic():
    r = Exponent.param("r")
    want = Element.gen(0, r) + Element.const(2) * Element.gen(1)
    assert parse_element("x^r + 2*log(x)") == want
    assert parse_element("(x + 1)*(x - 1)") == Element.gen(0) ** 2 - Element.one()
    assert parse_element("-x^2") == -(Element.gen(0) ** 2)


def test_precedence():
    # ^ binds over *, * over +
    assert parse_element("2*x^2 + 1") == Element.const(2) * Element.gen(0, 2) + Element.one()
    assert parse_element("x^2*log(x)") == Element.gen(0, 2) * Element.gen(1)


def test_malformed_operator_column():
    with pytest.raises(ParseError) as info:
        parse_element("x^^2")
    assert info.value.column == 3


def test_unbalanced_paren():
    with pytest.raises(ParseError):
        parse_element("l_2(x")
    with pytest.raises(ParseError):
        parse_element("(x + 1")


def test_zero_denominator():
    with pytest.raises(ParseError):
        parse_element("1/0")


def test_reserved_and_unknown_names():
    with pytest.raises(ParseError):
        parse_element("y")
    with pytest.raises(ParseError):
        parse_element("sin(x)")


def test_non_affine_exponents_rejected():
    with pytest.raises(ParseError):
        parse_element("x^(r*s)")
    with pytest.raises(ParseError):
        parse_element("x^(r/2)")
    with pytest.raises(ParseError):
        parse_element("x^(x)")


def test_trailing_garbage():
    with pytest.raises(ParseError):
        parse_element("x 5")
    with pytest.raises(ParseError):
        parse_element("x + ")


def test_nonconstant_base_needs_plain_power():
    # a sum can be squared, but not raised to a symbolic exponent
    assert parse_element("(x + 1)^2") == (Element.gen(0) + Element.one()) ** 2
    with pytest.raises(ParseError):
        parse_element("(x + 1)^r")


def test_roundtrip_random_elements():
    """print -> parse is the identity on canonical output."""
    rng = Random(40)
    for _ in range(200):
        element = random_element(rng, params=("r", "s"))
        assert parse_element(str(element)) == element


def test_parse_fdb_basics():
    y2 = FdbPoly.outer_symbol(2)
    x1 = FdbPoly.inner_symbol(1)
    assert parse_fdb("y_2*x_1^2") == y2 * x1 * x1
    assert parse_fdb("3*x_2 - 1/2") == 3 * FdbPoly.inner_symbol(2) - Fraction(1, 2)
    with pytest.raises(ParseError):
        parse_fdb("log(x)")


def test_fdb_roundtrip():
    for poly in derivative_tower(5) + taylor_coefficients(4):
        if poly:
            assert parse_fdb(str(poly)) == poly
