from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from laurentkit.automorphisms import MonomialAutomorphism, apply, compose, identity, inverse, phi, psi
from laurentkit.domains import ZZ
from laurentkit.errors import NotAUnit, NotUnimodular
from laurentkit.lattice import IntMatrix
from laurentkit.sampling import random_automorphism, random_poly
from laurentkit.syntax import parse_poly


@settings(max_examples=60)
@given(st.integers(0, 10 ** 6))
def test_group_laws(seed):
    import random

    rng = random.Random(seed)
    n = rng.randint(1, 3)
    a, b, c = (random_automorphism(rng, n) for _ in range(3))
    p = random_poly(rng, n)
    assert apply(compose(compose(a, b), c), p) == apply(compose(a, compose(b, c)), p)
    assert apply(compose(a, inverse(a)), p) == p
    assert apply(compose(identity(n), a), p) == apply(a, p)


def test_images_and_format():
    f = MonomialAutomorphism(IntMatrix([[1, 1], [0, 1]]), (2, 1))
    assert f.format(["s", "z"]) == "s -> 2*s*z, z -> z"
    p = parse_poly("s^-1", ["s", "z"])
    assert apply(f, p) == parse_poly("1/2*s^-1*z^-1", ["s", "z"])


def test_rejections():
    with pytest.raises(NotUnimodular):
        phi([[2, 0], [0, 1]])
    with pytest.raises(NotAUnit):
        psi([2], ZZ)
    assert psi([-1], ZZ).scalars == (-1,)


def test_phi_matrix_product():
    e1, e2 = IntMatrix([[1, 1], [0, 1]]), IntMatrix([[0, 1], [1, 0]])
    assert compose(phi(e1), phi(e2)).matrix == e1 @ e2
    assert compose(psi([2, 3]), psi([Fraction(1, 2), 5])).scalars == (1, 15)
