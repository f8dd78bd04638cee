from fractions import Fraction

import pytest

from laurentkit.domains import GF, QQ, ZZ, localize_domain, parse_domain


def test_units():
    assert QQ.is_unit(Fraction(3, 7)) and not QQ.is_unit(0)
    assert ZZ.is_unit(-1) and not ZZ.is_unit(2)
    assert GF(5).is_unit(3) and not GF(5).is_unit(10)


def test_membership():
    assert Fraction(1, 2) not in ZZ
    assert 7 in ZZ


def test_localization():
    r = localize_domain(ZZ, [Fraction(-1, 8)])
    assert r.is_unit(2) and not r.is_unit(3)
    assert Fraction(5, 4) in r and Fraction(1, 3) not in r
    assert localize_domain(QQ, [2]) is QQ
    assert str(r) == "ZZ[1/2]"


@pytest.mark.parametrize("text", ["QQ", "ZZ", "GF(7)", "ZZ[1/2,3]"])
def test_parse_round_trip(text):
    assert str(parse_domain(text)) == text


def test_localization_is_by_primes():
    assert parse_domain("ZZ[1/6]") == parse_domain("ZZ[1/2,3]")


def test_parse_rejects_unknown():
    with pytest.raises(ValueError):
        parse_domain("RR")


def test_prime_field_arithmetic():
    f = GF(7)
    assert f.multiply(3, f.invert_unit(3)) == 1
    assert f.power(3, -1) == f.invert_unit(3)
