from fractions import Fraction

import pytest
from hypothesis import given
from strategies import laurent

from gamma_torsion.errors import ParseError
from gamma_torsion.laurent import T, LaurentPoly, RationalFn, format_poly, format_ratfn
from gamma_torsion.parser import parse_poly, parse_ratfn


def test_expanded_product():
    p = parse_poly("(t-1)^4*(t^4-1)^2")
    assert p == (T - 1) ** 4 * (T**4 - 1) ** 2
    assert p.total_degree() == 12


def test_rational_coefficients_and_negative_exponents():
    assert parse_poly("3/2*t^-2 + 1").terms == {-2: Fraction(3, 2), 0: 1}


def test_error_position():
    with pytest.raises(ParseError) as info:
        parse_poly("t^^2")
    assert info.value.position == 2


@pytest.mark.parametrize("text", ["", "t +", "(t - 1", "t^x", "2/0", "t/t", "(t+1)^-1", "t ) "])
def test_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_poly(text)


def test_implicit_multiplication_and_whitespace():
    assert parse_poly("2 t ( t + 1 )") == 2 * T * (T + 1)
    assert parse_poly("-t + 1") == 1 - T
    assert parse_poly("t^-1 - 1") == T**-1 - 1


def test_ratfn_grammar():
    assert parse_ratfn("1/(t - 1)") == RationalFn(LaurentPoly([1]), T - 1)
    assert parse_ratfn("(t - 1)^-2*(t + 1)") == RationalFn(T + 1, (T - 1) ** 2)
    assert parse_ratfn("3/2*t^2/(t - 1)") == RationalFn(Fraction(3, 2) * T**2, T - 1)


def test_format_examples():
    assert format_poly(T**6 - T**5 + T**3 - T + 1) == "t^6 - t^5 + t^3 - t + 1"
    assert format_poly(Fraction(3, 2) * T**-2) == "3/2*t^-2"
    assert format_poly(1 - T) == "-t + 1"
    assert format_poly(LaurentPoly()) == "0"
    assert format_ratfn(RationalFn(LaurentPoly([1]), T - 1)) == "1/(t - 1)"


@given(laurent(max_len=6))
def test_format_parse_roundtrip(p):
    assert parse_poly(format_poly(p)) == p


@given(laurent(nonzero=True), laurent(nonzero=True))
def test_ratfn_roundtrip(a, b):
    r = RationalFn(a, b)
    assert parse_ratfn(format_ratfn(r)) == r
