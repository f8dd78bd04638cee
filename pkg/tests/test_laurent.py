from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laurentkit.domains import GF, QQ, ZZ
from laurentkit.errors import NotAUnit, RankMismatch
from laurentkit.laurent import LaurentPoly, format_poly, invert_unit_poly, is_unit_poly, substitute
from laurentkit.syntax import parse_poly

coef = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polys(rank=2):
    exps = st.tuples(*[st.integers(-3, 3)] * rank)
    return st.dictionaries(exps, coef, max_size=4).map(lambda d: LaurentPoly(d, rank))


@settings(max_examples=100)
@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly.zero(2)


def test_zero_terms_dropped():
    p = LaurentPoly({(1,): 0, (0,): 2}, 1)
    assert p.exponents() == [(0,)]


def test_unit_detection_and_inverse():
    p = LaurentPoly({(2, -1): Fraction(3, 2)}, 2)
    assert is_unit_poly(p) == (Fraction(3, 2), (2, -1))
    assert p * invert_unit_poly(p) == LaurentPoly.one(2)
    assert is_unit_poly(LaurentPoly({(1,): 2}, 1, ZZ)) is None
    with pytest.raises(NotAUnit):
        invert_unit_poly(LaurentPoly({(0,): 1, (1,): 1}, 1))


def test_negative_powers():
    y = LaurentPoly.variable(0, 1)
    assert y ** -2 * y ** 2 == LaurentPoly.one(1)


def test_substitute_composes():
    p = parse_poly("x^2*y^-1 + 3", ["x", "y"])
    s, t = LaurentPoly.variables(2)
    out = substitute(p, [s * t, t])
    assert out == parse_poly("s^2*t + 3", ["s", "t"])
    with pytest.raises(NotAUnit):
        substitute(p, [s, s + t])
    with pytest.raises(RankMismatch):
        substitute(p, [s])


def test_domain_change_and_rank():
    p = LaurentPoly({(1,): 9}, 1, QQ).change_domain(GF(7))
    assert p.coefficient((1,)) == 2
    assert p.extend_rank(2).rank == 3


def test_format_is_deterministic():
    p = parse_poly("3 - y^-1 + 1/2*x*y", ["x", "y"])
    assert format_poly(p, ["x", "y"]) == format_poly(parse_poly(format_poly(p, ["x", "y"]), ["x", "y"]), ["x", "y"])
