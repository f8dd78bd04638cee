from fractions import Fraction

import pytest

from laurentkit.errors import ParseError
from laurentkit.laurent import LaurentPoly, format_poly
from laurentkit.syntax import parse_int_matrix, parse_int_vector, parse_poly, parse_rational, split_top_level


def test_basic_expression():
    p = parse_poly("(x + 1)^2 - 2*x", ["x"])
    assert p == LaurentPoly({(2,): 1, (0,): 1}, 1)


def test_negative_exponent_and_fraction():
    p = parse_poly("3/4*t^-2", ["t"])
    assert p.terms == {(-2,): Fraction(3, 4)}


def test_unknown_name_reports_column():
    with pytest.raises(ParseError) as exc:
        parse_poly("x + q", ["x"])
    assert exc.value.column == 5


@pytest.mark.parametrize("text", ["", "x +", "x^", "(x", "x ** 2 2"])
def test_malformed(text):
    with pytest.raises(ParseError):
        parse_poly(text, ["x"])


def test_round_trip_through_formatter():
    names = ["u", "v"]
    p = parse_poly("u^2*v^-3 - 7/3*u + 1", names)
    assert parse_poly(format_poly(p, names), names) == p


def test_vectors_and_matrices():
    assert parse_int_vector("[1, -2]") == (1, -2)
    assert parse_int_matrix("[[1,1],[0,1]]") == [(1, 1), (0, 1)]
    assert parse_rational("-3/4") == Fraction(-3, 4)
    with pytest.raises(ParseError):
        parse_int_vector("1,2")


def test_split_respects_brackets():
    assert split_top_level("a=[1,2], b=(x, y)") == ["a=[1,2]", "b=(x, y)"]
